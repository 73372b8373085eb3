#include <torvo/representation.hpp>

#include <algorithm>
#include <stdexcept>

namespace torvo {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void lift_lattice(TensorState& out, const LatticeFockState& image, const BosonKey& boson,
                  const Scalar& c) {
  for (const auto& [lk, v] : image) out.add(TensorKey{lk, boson}, v * c);
}

void lift_boson(TensorState& out, const LatticeKey& lattice, const BosonState& image,
                const Scalar& c) {
  for (const auto& [bk, v] : image) out.add(TensorKey{lattice, bk}, v * c);
}

void tensor_into(TensorState& out, const LatticeFockState& l, const BosonState& b, const Scalar& c) {
  for (const auto& [lk, lv] : l)
    for (const auto& [bk, bv] : b) out.add(TensorKey{lk, bk}, lv * bv * c);
}

// :φ^i_{r-1/2} φ^{j*}_{k-r+1/2}: summed over r
BosonState boson_bilinear(const BosonSpace& space, int i, int j, std::int64_t k, const BosonKey& key) {
  BosonState out;
  const std::int64_t h = floor_div(key.depth() + 1, 2);
  for (std::int64_t r = k + 1 - h; r <= h; ++r) {
    const std::int64_t s = k - r + 1;
    if (r <= s) {
      for (const auto& [mid, c] : phi_star_image(space, j, s, key))
        out.add_scaled(phi_image(space, i, r, mid), c);
    } else {
      for (const auto& [mid, c] : phi_image(space, i, r, key))
        out.add_scaled(phi_star_image(space, j, s, mid), c);
    }
  }
  return out;
}

}  // namespace

int parity(const TensorKey& key) { return parity(key.lattice); }

void RepConfig::validate() const {
  if (M < 1) throw std::invalid_argument("M must be at least 1");
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (q < 1) throw std::invalid_argument("q must be at least 1");
}

RepOperator operator*(const RepOperator& a, const RepOperator& b) {
  op::Product p;
  for (const auto* x : {&a, &b}) {
    if (const auto* inner = std::get_if<op::Product>(&x->node()))
      p.factors.insert(p.factors.end(), inner->factors.begin(), inner->factors.end());
    else
      p.factors.push_back(*x);
  }
  return p;
}

RepOperator operator+(const RepOperator& a, const RepOperator& b) {
  op::Sum s;
  for (const auto* x : {&a, &b}) {
    if (const auto* inner = std::get_if<op::Sum>(&x->node()))
      s.terms.insert(s.terms.end(), inner->terms.begin(), inner->terms.end());
    else
      s.terms.emplace_back(Scalar(1), *x);
  }
  return s;
}

RepOperator operator*(const Scalar& c, const RepOperator& a) {
  op::Sum s;
  if (const auto* inner = std::get_if<op::Sum>(&a.node())) {
    for (const auto& [v, o] : inner->terms) s.terms.emplace_back(c * v, o);
  } else {
    s.terms.emplace_back(c, a);
  }
  return s;
}

RepOperator operator-(const RepOperator& a, const RepOperator& b) { return a + Scalar(-1) * b; }

Representation::Representation(RepConfig cfg) : cfg_(cfg) { cfg_.validate(); }

LatticeVector Representation::delta_of(const std::vector<std::int64_t>& m) const {
  if (static_cast<int>(m.size()) != cfg_.q - 1)
    throw std::invalid_argument("delta exponent must have length q-1");
  return LatticeVector::delta_of(cfg_.lattice(), m);
}

int Representation::parity(const RepOperator& a) const {
  return std::visit(
      [&](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, op::Vertex>) {
          return torvo::parity(n.alpha);
        } else if constexpr (std::is_same_v<T, op::SMode>) {
          return torvo::parity(cfg_.gl(), BasisSymbol{n.i, n.j});
        } else if constexpr (std::is_same_v<T, op::Product>) {
          int p = 0;
          for (const auto& f : n.factors) p ^= parity(f);
          return p;
        } else if constexpr (std::is_same_v<T, op::Sum>) {
          if (n.terms.empty()) return 0;
          const int p = parity(n.terms.front().second);
          for (const auto& [c, o] : n.terms)
            if (parity(o) != p) throw std::invalid_argument("operator sum is not homogeneous");
          return p;
        } else {
          return 0;
        }
      },
      a.node());
}

void Representation::validate(const TensorState& s) const {
  for (const auto& [key, c] : s) {
    if (!key.lattice.gamma.conforms(cfg_.lattice()))
      throw std::invalid_argument("state lattice vector does not match configuration");
    if (key.lattice.monomial.max_basis() >= cfg_.lattice().rank())
      throw std::invalid_argument("state monomial basis index out of range");
    for (const auto* part : {&key.boson.phi, &key.boson.phi_star})
      for (const auto& b : *part)
        if (b.flavor < 1 || b.flavor > cfg_.N) throw std::out_of_range("state boson flavor out of range");
  }
}

TensorState Representation::apply(const RepOperator& a, const TensorState& s) const {
  if (const auto* p = std::get_if<op::Product>(&a.node())) {
    TensorState cur = s;
    for (auto it = p->factors.rbegin(); it != p->factors.rend(); ++it) {
      if (cur.empty()) break;
      cur = apply(*it, cur);
    }
    return cur;
  }
  if (const auto* sum = std::get_if<op::Sum>(&a.node())) {
    TensorState out;
    for (const auto& [c, o] : sum->terms) out.add_scaled(apply(o, s), c);
    return out;
  }
  TensorState out;
  for (const auto& [key, c] : s) out.add_scaled(apply_key(a, key), c);
  return out;
}

TensorState Representation::apply_key(const RepOperator& a, const TensorKey& key) const {
  return std::visit(
      [&](const auto& n) -> TensorState {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, op::Vertex>) {
          return vertex_key(n.alpha, n.mode2, key);
        } else if constexpr (std::is_same_v<T, op::Current>) {
          return current_key(n.alpha, n.mode, key);
        } else if constexpr (std::is_same_v<T, op::Diagonal>) {
          return diagonal_key(n, key);
        } else if constexpr (std::is_same_v<T, op::SMode>) {
          return s_mode_key(n, key);
        } else if constexpr (std::is_same_v<T, op::Central>) {
          return central_key(n, key);
        } else if constexpr (std::is_same_v<T, op::Phi>) {
          TensorState out;
          lift_boson(out, key.lattice, phi_image(cfg_.bosons(), n.flavor, n.r, key.boson), Scalar(1));
          return out;
        } else if constexpr (std::is_same_v<T, op::PhiStar>) {
          TensorState out;
          lift_boson(out, key.lattice, phi_star_image(cfg_.bosons(), n.flavor, n.r, key.boson),
                     Scalar(1));
          return out;
        } else {
          return apply(a, TensorState(key, Scalar(1)));
        }
      },
      a.node());
}

TensorState Representation::vertex_key(const LatticeVector& alpha, std::int64_t mode2,
                                       const TensorKey& key) const {
  TensorState out;
  lift_lattice(out, vertex_mode_image(alpha, mode2, key.lattice), key.boson, Scalar(1));
  return out;
}

TensorState Representation::current_key(const LatticeVector& alpha, std::int64_t mode,
                                        const TensorKey& key) const {
  TensorState out;
  lift_lattice(out, heisenberg_image(alpha, mode, key.lattice), key.boson, Scalar(1));
  return out;
}

TensorState Representation::diagonal_key(const op::Diagonal& d, const TensorKey& key) const {
  const LatticeVector delta = delta_of(d.m);
  if (!d.alpha.in_q()) throw std::invalid_argument("diagonal current needs alpha in Q");
  if (delta.is_zero()) return current_key(d.alpha, d.mode, key);
  TensorState out;
  const std::int64_t bound = vanishing_bound(delta, key.lattice);
  const std::int64_t k_lo = d.mode - floor_div(bound, 2);
  const std::int64_t k_hi = max_visible_mode(d.alpha, key.lattice.monomial);
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const auto moved = vertex_mode_image(delta, 2 * (d.mode - k), key.lattice);
    if (moved.empty()) continue;
    lift_lattice(out, heisenberg_apply(d.alpha, k, moved), key.boson, Scalar(1));
  }
  return out;
}

TensorState Representation::s_mode_key(const op::SMode& s, const TensorKey& key) const {
  const int M = cfg_.M, dim = M + cfg_.N;
  if (s.i < 1 || s.i > dim || s.j < 1 || s.j > dim) throw std::out_of_range("S index out of range");
  if (s.i <= M && s.j <= M) throw std::invalid_argument("S operators need an index above M");
  const LatticeVector delta = delta_of(s.m);
  const auto bosons = cfg_.bosons();
  TensorState out;

  if (s.i > M && s.j > M) {
    if (delta.is_zero()) {
      lift_boson(out, key.lattice, boson_bilinear(bosons, s.i - M, s.j - M, s.mode, key.boson),
                 Scalar(1));
      return out;
    }
    const std::int64_t k_lo = s.mode - floor_div(vanishing_bound(delta, key.lattice), 2);
    const std::int64_t k_hi = floor_div(key.boson.energy2(), 2);
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      const auto b = boson_bilinear(bosons, s.i - M, s.j - M, k, key.boson);
      if (b.empty()) continue;
      tensor_into(out, vertex_mode_image(delta, 2 * (s.mode - k), key.lattice), b, Scalar(1));
    }
    return out;
  }

  // X(±e + δ_m̲, z) times a boson field; X(α,z) X(δ,z) = X(α+δ,z) here
  const bool upper = s.i <= M;
  const LatticeVector alpha =
      (upper ? LatticeVector::unit_e(cfg_.lattice(), s.i) : -LatticeVector::unit_e(cfg_.lattice(), s.j)) +
      delta;
  const int flavor = upper ? s.j - M : s.i - M;
  const std::int64_t h = floor_div(key.boson.depth() + 1, 2);
  const std::int64_t r_lo = s.mode + 1 - h;
  const std::int64_t r_hi = floor_div(vanishing_bound(alpha, key.lattice) + 1, 2);
  for (std::int64_t r = r_lo; r <= r_hi; ++r) {
    const std::int64_t idx = s.mode - r + 1;
    const auto b = upper ? phi_star_image(bosons, flavor, idx, key.boson)
                         : phi_image(bosons, flavor, idx, key.boson);
    if (b.empty()) continue;
    tensor_into(out, vertex_mode_image(alpha, 2 * r - 1, key.lattice), b, Scalar(1));
  }
  return out;
}

TensorState Representation::central_key(const op::Central& c, const TensorKey& key) const {
  if (static_cast<int>(c.exponent.size()) != cfg_.q)
    throw std::invalid_argument("central exponent must have length q");
  if (c.direction < 1 || c.direction > cfg_.q) throw std::out_of_range("central direction out of range");
  std::vector<std::int64_t> m(c.exponent.begin(), c.exponent.end() - 1);
  const std::int64_t mq = c.exponent.back();
  if (c.direction == cfg_.q) return vertex_key(delta_of(m), 2 * mq, key);
  return diagonal_key(op::Diagonal{LatticeVector::unit_delta(cfg_.lattice(), c.direction), m, mq}, key);
}

TensorState Representation::s_mode_apply(int i, int j, const std::vector<std::int64_t>& m,
                                         std::int64_t n, const TensorState& s) const {
  return apply(op::SMode{i, j, m, n}, s);
}

TensorState Representation::super_commutator(const RepOperator& a, const RepOperator& b,
                                              const TensorState& s) const {
  auto out = apply(a, apply(b, s));
  const int sign = (parity(a) & parity(b)) ? -1 : 1;
  out.add_scaled(apply(b, apply(a, s)), Scalar(-sign));
  return out;
}

RepOperator rho_key(const RepConfig& cfg, const ToroidalKey& key) {
  if (static_cast<int>(key.exponent.size()) != cfg.q)
    throw std::invalid_argument("exponent length must equal q");
  std::vector<std::int64_t> m(key.exponent.begin(), key.exponent.end() - 1);
  const std::int64_t mq = key.exponent.back();
  if (key.kind == ToroidalKey::Kind::K) return op::Central{key.exponent, key.direction};
  const int M = cfg.M;
  if (key.i < 1 || key.j < 1 || key.i > M + cfg.N || key.j > M + cfg.N)
    throw std::out_of_range("generator index out of range");
  if (key.i <= M && key.j <= M) {
    const auto lat = cfg.lattice();
    if (key.i == key.j) return op::Diagonal{LatticeVector::unit_e(lat, key.i), m, mq};
    auto alpha = LatticeVector::unit_e(lat, key.i) - LatticeVector::unit_e(lat, key.j) +
                 LatticeVector::delta_of(lat, m);
    return op::Vertex{alpha, 2 * mq};
  }
  return op::SMode{key.i, key.j, m, mq};
}

RepOperator Representation::rho(const ToroidalElement& x) const {
  torvo::validate(cfg_.toroidal(), x);
  op::Sum s;
  for (const auto& [key, c] : x) s.terms.emplace_back(c, rho_key(cfg_, key));
  return s;
}

}  // namespace torvo
