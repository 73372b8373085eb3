#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace torvo {

// Γ̄ has basis e_1..e_M, δ_1..δ_{q-1}, d_1..d_{q-1}; basis indices are 0-based in that order.
struct LatticeConfig {
  int M = 1;
  int q = 1;

  int extra() const { return q - 1; }
  int rank() const { return M + 2 * (q - 1); }
  int delta_index(int j) const { return M + j - 1; }           // j in 1..q-1
  int d_index(int j) const { return M + (q - 1) + j - 1; }     // j in 1..q-1
  void validate() const;
  friend bool operator==(const LatticeConfig&, const LatticeConfig&) = default;
};

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(const LatticeConfig& cfg);
  LatticeVector(std::vector<std::int64_t> e, std::vector<std::int64_t> delta,
                std::vector<std::int64_t> d);

  static LatticeVector basis(const LatticeConfig& cfg, int index);
  static LatticeVector unit_e(const LatticeConfig& cfg, int i);       // 1-based
  static LatticeVector unit_delta(const LatticeConfig& cfg, int j);   // 1-based
  static LatticeVector unit_d(const LatticeConfig& cfg, int j);       // 1-based
  // δ_m̲ = Σ m_j δ_j for an exponent prefix of length q-1
  static LatticeVector delta_of(const LatticeConfig& cfg, std::span<const std::int64_t> m);

  int M() const { return m_; }
  int extra() const { return extra_; }
  LatticeConfig config() const { return {m_, extra_ + 1}; }
  int rank() const { return static_cast<int>(coords_.size()); }

  std::span<const std::int64_t> coords() const { return coords_; }
  std::span<const std::int64_t> e() const { return {coords_.data(), static_cast<size_t>(m_)}; }
  std::span<const std::int64_t> delta() const {
    return {coords_.data() + m_, static_cast<size_t>(extra_)};
  }
  std::span<const std::int64_t> d() const {
    return {coords_.data() + m_ + extra_, static_cast<size_t>(extra_)};
  }
  std::int64_t operator[](int index) const { return coords_[index]; }
  std::int64_t& operator[](int index) { return coords_[index]; }

  bool is_zero() const;
  bool in_q() const;  // d-coordinates vanish
  bool conforms(const LatticeConfig& cfg) const { return cfg.M == m_ && cfg.q == extra_ + 1; }

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a);
  friend LatticeVector operator*(std::int64_t k, LatticeVector a);

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  int m_ = 0;
  int extra_ = 0;
  std::vector<std::int64_t> coords_;
};

std::int64_t bilinear(const LatticeVector& a, const LatticeVector& b);
// (a, basis_index)
std::int64_t pair_with_basis(const LatticeVector& a, int index);
int parity(const LatticeVector& a);
// ε(a,b) ∈ {±1}; a must lie in Q
int cocycle(const LatticeVector& a, const LatticeVector& b);

}  // namespace torvo
