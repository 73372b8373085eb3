#include <torvo/lattice.hpp>

#include <stdexcept>
#include <string>

namespace torvo {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
  return r;
}

void require_same_shape(const LatticeVector& a, const LatticeVector& b) {
  if (a.M() != b.M() || a.extra() != b.extra())
    throw std::invalid_argument("lattice vectors belong to different configurations");
}

}  // namespace

void LatticeConfig::validate() const {
  if (M < 1) throw std::invalid_argument("M must be at least 1");
  if (q < 1) throw std::invalid_argument("q must be at least 1");
}

LatticeVector::LatticeVector(const LatticeConfig& cfg)
    : m_(cfg.M), extra_(cfg.q - 1), coords_(cfg.rank(), 0) {
  cfg.validate();
}

LatticeVector::LatticeVector(std::vector<std::int64_t> e, std::vector<std::int64_t> delta,
                             std::vector<std::int64_t> d)
    : m_(static_cast<int>(e.size())), extra_(static_cast<int>(delta.size())) {
  if (delta.size() != d.size())
    throw std::invalid_argument("delta and d parts must have equal length");
  coords_ = std::move(e);
  coords_.insert(coords_.end(), delta.begin(), delta.end());
  coords_.insert(coords_.end(), d.begin(), d.end());
}

LatticeVector LatticeVector::basis(const LatticeConfig& cfg, int index) {
  LatticeVector v(cfg);
  if (index < 0 || index >= cfg.rank()) throw std::out_of_range("basis index out of range");
  v.coords_[index] = 1;
  return v;
}

LatticeVector LatticeVector::unit_e(const LatticeConfig& cfg, int i) {
  if (i < 1 || i > cfg.M) throw std::out_of_range("e index out of range");
  return basis(cfg, i - 1);
}

LatticeVector LatticeVector::unit_delta(const LatticeConfig& cfg, int j) {
  if (j < 1 || j > cfg.extra()) throw std::out_of_range("delta index out of range");
  return basis(cfg, cfg.delta_index(j));
}

LatticeVector LatticeVector::unit_d(const LatticeConfig& cfg, int j) {
  if (j < 1 || j > cfg.extra()) throw std::out_of_range("d index out of range");
  return basis(cfg, cfg.d_index(j));
}

LatticeVector LatticeVector::delta_of(const LatticeConfig& cfg, std::span<const std::int64_t> m) {
  LatticeVector v(cfg);
  if (static_cast<int>(m.size()) < cfg.extra())
    throw std::invalid_argument("exponent too short for delta");
  for (int j = 0; j < cfg.extra(); ++j) v.coords_[cfg.M + j] = m[j];
  return v;
}

bool LatticeVector::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

bool LatticeVector::in_q() const {
  for (auto c : d())
    if (c != 0) return false;
  return true;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_same_shape(*this, o);
  for (size_t k = 0; k < coords_.size(); ++k) coords_[k] = checked_add(coords_[k], o.coords_[k]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_same_shape(*this, o);
  for (size_t k = 0; k < coords_.size(); ++k)
    coords_[k] = checked_add(coords_[k], checked_mul(-1, o.coords_[k]));
  return *this;
}

LatticeVector operator-(LatticeVector a) {
  for (auto& c : a.coords_) c = checked_mul(-1, c);
  return a;
}

LatticeVector operator*(std::int64_t k, LatticeVector a) {
  for (auto& c : a.coords_) c = checked_mul(k, c);
  return a;
}

std::int64_t bilinear(const LatticeVector& a, const LatticeVector& b) {
  require_same_shape(a, b);
  std::int64_t s = 0;
  auto ae = a.e(), be = b.e();
  for (size_t i = 0; i < ae.size(); ++i) s = checked_add(s, checked_mul(ae[i], be[i]));
  auto ad = a.delta(), bd = b.delta(), aD = a.d(), bD = b.d();
  for (size_t j = 0; j < ad.size(); ++j) {
    s = checked_add(s, checked_mul(ad[j], bD[j]));
    s = checked_add(s, checked_mul(aD[j], bd[j]));
  }
  return s;
}

std::int64_t pair_with_basis(const LatticeVector& a, int index) {
  const int M = a.M(), x = a.extra();
  if (index < 0 || index >= M + 2 * x) throw std::out_of_range("basis index out of range");
  if (index < M) return a[index];
  if (index < M + x) return a[index + x];  // (a, δ_j) = a's d_j coordinate
  return a[index - x];                     // (a, d_j) = a's δ_j coordinate
}

int parity(const LatticeVector& a) {
  std::int64_t s = 0;
  for (auto c : a.e()) s ^= (c & 1);
  return static_cast<int>(s & 1);
}

int cocycle(const LatticeVector& a, const LatticeVector& b) {
  require_same_shape(a, b);
  if (!a.in_q()) throw std::invalid_argument("cocycle: first argument must lie in Q");
  auto ae = a.e(), be = b.e();
  int odd_prefix = 0;  // parity of Σ_{j<i} b_j
  int s = 0;
  for (size_t i = 0; i < ae.size(); ++i) {
    if (ae[i] & 1) s ^= odd_prefix;
    odd_prefix ^= static_cast<int>(be[i] & 1);
  }
  return s ? -1 : 1;
}

}  // namespace torvo
