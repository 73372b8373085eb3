#include <torvo/lattice_fock.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace torvo {

CreationMonomial::CreationMonomial(std::vector<Factor> factors) {
  for (const auto& f : factors) {
    if (f.mode < 1) throw std::invalid_argument("creation factor mode must be positive");
    if (f.power < 1) throw std::invalid_argument("creation factor power must be positive");
    if (f.basis < 0) throw std::invalid_argument("negative basis index");
  }
  std::sort(factors.begin(), factors.end());
  for (const auto& f : factors) {
    if (!factors_.empty() && factors_.back().basis == f.basis && factors_.back().mode == f.mode)
      factors_.back().power += f.power;
    else
      factors_.push_back(f);
  }
}

CreationMonomial CreationMonomial::single(int basis, int mode, int power) {
  return CreationMonomial({{basis, mode, power}});
}

std::int64_t CreationMonomial::degree() const {
  std::int64_t d = 0;
  for (const auto& f : factors_) d += static_cast<std::int64_t>(f.mode) * f.power;
  return d;
}

int CreationMonomial::power_of(int basis, int mode) const {
  for (const auto& f : factors_)
    if (f.basis == basis && f.mode == mode) return f.power;
  return 0;
}

int CreationMonomial::max_basis() const {
  int b = -1;
  for (const auto& f : factors_) b = std::max(b, f.basis);
  return b;
}

CreationMonomial CreationMonomial::times(int basis, int mode, int delta) const {
  CreationMonomial r;
  r.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && (f.basis > basis || (f.basis == basis && f.mode >= mode))) {
      placed = true;
      if (f.basis == basis && f.mode == mode) {
        int p = f.power + delta;
        if (p < 0) throw std::logic_error("negative power in creation monomial");
        if (p > 0) r.factors_.push_back({basis, mode, p});
        continue;
      }
      if (delta < 0) throw std::logic_error("negative power in creation monomial");
      if (delta > 0) r.factors_.push_back({basis, mode, delta});
    }
    r.factors_.push_back(f);
  }
  if (!placed) {
    if (delta < 0) throw std::logic_error("negative power in creation monomial");
    if (delta > 0) r.factors_.push_back({basis, mode, delta});
  }
  return r;
}

CreationMonomial operator*(const CreationMonomial& a, const CreationMonomial& b) {
  CreationMonomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() ||
        (i != a.factors_.end() && std::tie(i->basis, i->mode) < std::tie(j->basis, j->mode))) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() ||
               std::tie(j->basis, j->mode) < std::tie(i->basis, i->mode)) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.push_back({i->basis, i->mode, i->power + j->power});
      ++i;
      ++j;
    }
  }
  return r;
}

LatticeFockState lattice_vacuum(const LatticeVector& gamma) {
  return LatticeFockState(LatticeKey{gamma, {}}, Scalar(1));
}

int parity(const LatticeKey& key) { return parity(key.gamma); }

namespace {

void check_monomial_fits(const LatticeVector& a, const CreationMonomial& u) {
  if (u.max_basis() >= a.rank()) throw std::invalid_argument("monomial basis index out of range");
}

struct ExpCacheEntry {
  std::vector<CreationPolynomial> h;  // h[d]
};

using ExpCache = std::map<std::vector<std::int64_t>, ExpCacheEntry>;

ExpCache& exp_cache() {
  thread_local ExpCache cache;
  return cache;
}

}  // namespace

const CreationPolynomial& exp_minus_coefficient(const LatticeVector& a, std::int64_t d) {
  if (d < 0) throw std::invalid_argument("negative exponential degree");
  std::vector<std::int64_t> key(a.coords().begin(), a.coords().end());
  key.push_back(a.M());
  auto& entry = exp_cache()[key];
  auto& h = entry.h;
  if (h.empty()) h.emplace_back(CreationMonomial{}, Scalar(1));
  while (static_cast<std::int64_t>(h.size()) <= d) {
    const int n_next = static_cast<int>(h.size());
    CreationPolynomial next;
    // n h_n = Σ_{k=1}^{n} a(-k) h_{n-k}
    for (int k = 1; k <= n_next; ++k) {
      for (const auto& [mono, c] : h[n_next - k]) {
        for (int b = 0; b < a.rank(); ++b) {
          if (a[b] == 0) continue;
          next.add(mono.times(b, k, 1), c * Scalar(a[b]));
        }
      }
    }
    next *= ratio(1, n_next);
    h.push_back(std::move(next));
  }
  return h[d];
}

std::int64_t visible_degree(const LatticeVector& a, const CreationMonomial& u) {
  std::int64_t d = 0;
  for (const auto& f : u.factors())
    if (pair_with_basis(a, f.basis) != 0) d += static_cast<std::int64_t>(f.mode) * f.power;
  return d;
}

std::int64_t max_visible_mode(const LatticeVector& a, const CreationMonomial& u) {
  std::int64_t m = 0;
  for (const auto& f : u.factors())
    if (pair_with_basis(a, f.basis) != 0) m = std::max<std::int64_t>(m, f.mode);
  return m;
}

LatticeFockState heisenberg_image(const LatticeVector& a, std::int64_t m, const LatticeKey& key) {
  if (!a.conforms(key.gamma.config()))
    throw std::invalid_argument("heisenberg: vector does not match state configuration");
  check_monomial_fits(a, key.monomial);
  LatticeFockState out;
  if (m < 0) {
    for (int b = 0; b < a.rank(); ++b) {
      if (a[b] == 0) continue;
      out.add(LatticeKey{key.gamma, key.monomial.times(b, static_cast<int>(-m), 1)}, Scalar(a[b]));
    }
  } else if (m == 0) {
    out.add(key, Scalar(bilinear(a, key.gamma)));
  } else {
    for (const auto& f : key.monomial.factors()) {
      if (f.mode != m) continue;
      auto c = pair_with_basis(a, f.basis);
      if (c == 0) continue;
      Scalar coeff(c);
      coeff *= m;
      coeff *= f.power;
      out.add(LatticeKey{key.gamma, key.monomial.times(f.basis, f.mode, -1)}, coeff);
    }
  }
  return out;
}

LatticeFockState group_image(const LatticeVector& a, const LatticeKey& key) {
  LatticeFockState out;
  out.add(LatticeKey{a + key.gamma, key.monomial}, Scalar(cocycle(a, key.gamma)));
  return out;
}

std::int64_t vanishing_bound(const LatticeVector& a, const LatticeKey& key) {
  return 2 * (visible_degree(a, key.monomial) - bilinear(a, key.gamma)) - bilinear(a, a);
}

LatticeFockState vertex_mode_image(const LatticeVector& a, std::int64_t mode2, const LatticeKey& key) {
  if (!a.in_q()) throw std::invalid_argument("vertex operators are defined for Q only");
  if (!a.conforms(key.gamma.config()))
    throw std::invalid_argument("vertex mode: vector does not match state configuration");
  check_monomial_fits(a, key.monomial);
  const std::int64_t norm = bilinear(a, a);
  if (((mode2 - norm) % 2 + 2) % 2 != 0)
    throw std::invalid_argument("vertex mode index has the wrong parity");
  LatticeFockState out;
  if (mode2 > vanishing_bound(a, key)) return out;

  // Y(a,z) picks up z^{(a,γ)} from z^{a(0)}; we want the z^p coefficient
  const std::int64_t p = -(mode2 + norm) / 2;
  const std::int64_t shift = p - bilinear(a, key.gamma);

  // exp T_+ substitutes β(-n) -> β(-n) - (a,β) z^{-n}
  struct Partial {
    std::int64_t b;
    Scalar coeff;
    CreationMonomial rest;
  };
  std::vector<Partial> partials{{0, Scalar(1), key.monomial}};
  for (const auto& f : key.monomial.factors()) {
    auto c = pair_with_basis(a, f.basis);
    if (c == 0) continue;
    std::vector<Partial> next;
    next.reserve(partials.size() * (f.power + 1));
    for (const auto& pt : partials) {
      Scalar binom(1);
      Scalar step(-c);
      Scalar weight(1);
      for (int j = 0; j <= f.power; ++j) {
        if (j > 0) {
          binom *= f.power - j + 1;
          binom /= j;
          weight *= step;
        }
        next.push_back({pt.b + static_cast<std::int64_t>(f.mode) * j, pt.coeff * binom * weight,
                        j == 0 ? pt.rest : pt.rest.times(f.basis, f.mode, -j)});
      }
    }
    partials = std::move(next);
  }

  const LatticeVector target = a + key.gamma;
  const Scalar sign(cocycle(a, key.gamma));
  for (const auto& pt : partials) {
    const std::int64_t d = shift + pt.b;
    if (d < 0) continue;
    const Scalar base = sign * pt.coeff;
    for (const auto& [mono, c] : exp_minus_coefficient(a, d))
      out.add(LatticeKey{target, pt.rest * mono}, base * c);
  }
  return out;
}

LatticeFockState heisenberg_apply(const LatticeVector& a, std::int64_t m, const LatticeFockState& s) {
  LatticeFockState out;
  for (const auto& [key, c] : s) out.add_scaled(heisenberg_image(a, m, key), c);
  return out;
}

LatticeFockState group_multiply(const LatticeVector& a, const LatticeFockState& s) {
  LatticeFockState out;
  for (const auto& [key, c] : s) out.add_scaled(group_image(a, key), c);
  return out;
}

LatticeFockState vertex_mode_apply(const LatticeVector& a, std::int64_t mode2,
                                   const LatticeFockState& s) {
  LatticeFockState out;
  for (const auto& [key, c] : s) out.add_scaled(vertex_mode_image(a, mode2, key), c);
  return out;
}

std::int64_t vanishing_bound(const LatticeVector& a, const LatticeFockState& s) {
  std::int64_t b = kNoBound;
  for (const auto& [key, c] : s) b = std::max(b, vanishing_bound(a, key));
  return b;
}

}  // namespace torvo
