#include <torvo/superalgebra.hpp>

#include <stdexcept>

namespace torvo {

void ToroidalConfig::validate() const {
  gl.validate();
  if (q < 1) throw std::invalid_argument("q must be at least 1");
}

ToroidalElement ToroidalElement::generator(const BasisSymbol& x, std::vector<std::int64_t> exponent,
                                           const Scalar& c) {
  ToroidalElement r;
  r.add(ToroidalKey{ToroidalKey::Kind::T, x.i, x.j, std::move(exponent), 0}, c);
  return r;
}

ToroidalElement ToroidalElement::central(std::vector<std::int64_t> exponent, int direction,
                                         const Scalar& c) {
  ToroidalElement r;
  r.add(ToroidalKey{ToroidalKey::Kind::K, 0, 0, std::move(exponent), direction}, c);
  return r;
}

void ToroidalElement::add(const ToroidalKey& key, const Scalar& c) {
  if (key.kind == ToroidalKey::Kind::K) {
    const int q = static_cast<int>(key.exponent.size());
    if (key.direction < 1 || key.direction > q) throw std::out_of_range("central direction out of range");
    int pivot = -1;
    for (int p = q - 1; p >= 0; --p)
      if (key.exponent[p] != 0) {
        pivot = p;
        break;
      }
    if (pivot >= 0 && key.direction == pivot + 1) {
      // Σ_i m_i t^m̄ K_i = 0
      for (int i = 0; i < q; ++i) {
        if (i == pivot || key.exponent[i] == 0) continue;
        ToroidalKey k = key;
        k.direction = i + 1;
        terms_.add(k, -c * ratio(key.exponent[i], key.exponent[pivot]));
      }
      return;
    }
  }
  terms_.add(key, c);
}

void ToroidalElement::add_scaled(const ToroidalElement& o, const Scalar& c) {
  for (const auto& [k, v] : o.terms_) add(k, v * c);
}

ToroidalElement central_cocycle(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n) {
  if (m.size() != n.size()) throw std::invalid_argument("exponent lengths differ");
  std::vector<std::int64_t> sum(m.size());
  for (size_t i = 0; i < m.size(); ++i) sum[i] = m[i] + n[i];
  ToroidalElement r;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) r.add({ToroidalKey::Kind::K, 0, 0, sum, static_cast<int>(i) + 1}, Scalar(m[i]));
  return r;
}

void validate(const ToroidalConfig& cfg, const ToroidalElement& x) {
  for (const auto& [k, c] : x) {
    if (static_cast<int>(k.exponent.size()) != cfg.q)
      throw std::invalid_argument("exponent length must equal q");
    if (k.kind == ToroidalKey::Kind::T) {
      if (k.i < 1 || k.i > cfg.gl.dim() || k.j < 1 || k.j > cfg.gl.dim())
        throw std::out_of_range("generator index out of range");
    } else if (k.direction < 1 || k.direction > cfg.q) {
      throw std::out_of_range("central direction out of range");
    }
  }
}

ToroidalElement bracket_toroidal(const ToroidalConfig& cfg, const ToroidalElement& x,
                                 const ToroidalElement& y) {
  validate(cfg, x);
  validate(cfg, y);
  ToroidalElement out;
  for (const auto& [a, ca] : x) {
    if (a.kind != ToroidalKey::Kind::T) continue;
    for (const auto& [b, cb] : y) {
      if (b.kind != ToroidalKey::Kind::T) continue;
      const BasisSymbol sa{a.i, a.j}, sb{b.i, b.j};
      const Scalar c = ca * cb;
      std::vector<std::int64_t> sum(cfg.q);
      for (int p = 0; p < cfg.q; ++p) sum[p] = a.exponent[p] + b.exponent[p];
      for (const auto& [s, v] : bracket_T(cfg.gl, sa, sb))
        out.add({ToroidalKey::Kind::T, s.i, s.j, sum, 0}, c * v);
      const Scalar f = form_T(cfg.gl, sa, sb);
      if (!is_zero(f)) out.add_scaled(central_cocycle(a.exponent, b.exponent), c * f);
    }
  }
  return out;
}

}  // namespace torvo
