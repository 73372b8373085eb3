#pragma once

#include <torvo/lattice.hpp>
#include <torvo/sparse.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace torvo {

// β(-mode)^power for a basis index β of Γ̄
struct Factor {
  int basis = 0;
  int mode = 1;
  int power = 1;
  friend auto operator<=>(const Factor&, const Factor&) = default;
  friend bool operator==(const Factor&, const Factor&) = default;
};

class CreationMonomial {
 public:
  CreationMonomial() = default;
  // merges repeated (basis, mode) pairs; rejects mode < 1 or power < 1
  explicit CreationMonomial(std::vector<Factor> factors);

  static CreationMonomial single(int basis, int mode, int power = 1);

  std::span<const Factor> factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::int64_t degree() const;
  int power_of(int basis, int mode) const;
  int max_basis() const;

  // multiplies by β(-mode)^delta; delta may be negative if the power suffices
  CreationMonomial times(int basis, int mode, int delta) const;
  friend CreationMonomial operator*(const CreationMonomial& a, const CreationMonomial& b);

  friend auto operator<=>(const CreationMonomial&, const CreationMonomial&) = default;
  friend bool operator==(const CreationMonomial&, const CreationMonomial&) = default;

 private:
  std::vector<Factor> factors_;
};

struct LatticeKey {
  LatticeVector gamma;
  CreationMonomial monomial;
  friend auto operator<=>(const LatticeKey&, const LatticeKey&) = default;
  friend bool operator==(const LatticeKey&, const LatticeKey&) = default;
};

using LatticeFockState = SparseVector<LatticeKey>;
using CreationPolynomial = SparseVector<CreationMonomial>;

inline constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::min();

LatticeFockState lattice_vacuum(const LatticeVector& gamma);
int parity(const LatticeKey& key);

// the z^d coefficient of exp(Σ_{n>0} a(-n) z^n / n)
const CreationPolynomial& exp_minus_coefficient(const LatticeVector& a, std::int64_t d);

// modes only count factors β with (a, β) ≠ 0
std::int64_t visible_degree(const LatticeVector& a, const CreationMonomial& u);
std::int64_t max_visible_mode(const LatticeVector& a, const CreationMonomial& u);

LatticeFockState heisenberg_image(const LatticeVector& a, std::int64_t m, const LatticeKey& key);
LatticeFockState group_image(const LatticeVector& a, const LatticeKey& key);
// X_{mode2/2}(a) on a basis key
LatticeFockState vertex_mode_image(const LatticeVector& a, std::int64_t mode2, const LatticeKey& key);
std::int64_t vanishing_bound(const LatticeVector& a, const LatticeKey& key);

LatticeFockState heisenberg_apply(const LatticeVector& a, std::int64_t m, const LatticeFockState& s);
LatticeFockState group_multiply(const LatticeVector& a, const LatticeFockState& s);
LatticeFockState vertex_mode_apply(const LatticeVector& a, std::int64_t mode2,
                                   const LatticeFockState& s);
// largest doubled mode index whose vertex mode can act nontrivially; kNoBound on the zero state
std::int64_t vanishing_bound(const LatticeVector& a, const LatticeFockState& s);

}  // namespace torvo
