#pragma once

#include <torvo/scalar.hpp>
#include <torvo/sparse.hpp>

#include <compare>
#include <cstdint>
#include <vector>

namespace torvo {

struct GlConfig {
  int M = 1;
  int N = 1;
  int dim() const { return M + N; }
  void validate() const;
  friend bool operator==(const GlConfig&, const GlConfig&) = default;
};

// T_ij with 1-based i, j in 1..M+N
struct BasisSymbol {
  int i = 1;
  int j = 1;
  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;
  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

using GlElement = SparseVector<BasisSymbol>;

int parity(const GlConfig& cfg, const BasisSymbol& x);
std::vector<BasisSymbol> gl_basis(const GlConfig& cfg);

// which of the ten bracket clauses governs the ordered pair (1..10)
int bracket_clause(const GlConfig& cfg, const BasisSymbol& x, const BasisSymbol& y);
GlElement bracket_T(const GlConfig& cfg, const BasisSymbol& x, const BasisSymbol& y);
Scalar form_T(const GlConfig& cfg, const BasisSymbol& x, const BasisSymbol& y);

GlElement bracket(const GlConfig& cfg, const GlElement& x, const GlElement& y);
Scalar form(const GlConfig& cfg, const GlElement& x, const GlElement& y);
Scalar supertrace(const GlConfig& cfg, const GlElement& x);

// [[x,y],z] == [x,[y,z]] - (-1)^{|x||y|} [y,[x,z]]
bool jacobi_check(const GlConfig& cfg, const BasisSymbol& x, const BasisSymbol& y,
                  const BasisSymbol& z);

struct ToroidalConfig {
  GlConfig gl;
  int q = 1;
  void validate() const;
};

// T_ij ⊗ t^m̄ or t^m̄ K_direction (direction 1-based)
struct ToroidalKey {
  enum class Kind { T = 0, K = 1 };
  Kind kind = Kind::T;
  int i = 0;
  int j = 0;
  std::vector<std::int64_t> exponent;
  int direction = 0;
  friend auto operator<=>(const ToroidalKey&, const ToroidalKey&) = default;
  friend bool operator==(const ToroidalKey&, const ToroidalKey&) = default;
};

// Central terms are kept reduced modulo the exact forms: for m̄ ≠ 0 the direction of the
// last nonzero exponent coordinate is eliminated.
class ToroidalElement {
 public:
  ToroidalElement() = default;

  static ToroidalElement generator(const BasisSymbol& x, std::vector<std::int64_t> exponent,
                                   const Scalar& c = Scalar(1));
  static ToroidalElement central(std::vector<std::int64_t> exponent, int direction,
                                 const Scalar& c = Scalar(1));

  void add(const ToroidalKey& key, const Scalar& c);
  void add_scaled(const ToroidalElement& o, const Scalar& c);

  ToroidalElement& operator+=(const ToroidalElement& o) {
    add_scaled(o, Scalar(1));
    return *this;
  }
  ToroidalElement& operator-=(const ToroidalElement& o) {
    add_scaled(o, Scalar(-1));
    return *this;
  }
  friend ToroidalElement operator+(ToroidalElement a, const ToroidalElement& b) { return a += b; }
  friend ToroidalElement operator-(ToroidalElement a, const ToroidalElement& b) { return a -= b; }
  friend ToroidalElement operator*(const Scalar& c, const ToroidalElement& a) {
    ToroidalElement r;
    r.add_scaled(a, c);
    return r;
  }
  friend bool operator==(const ToroidalElement&, const ToroidalElement&) = default;

  bool empty() const { return terms_.empty(); }
  const SparseVector<ToroidalKey>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

 private:
  SparseVector<ToroidalKey> terms_;
};

// Σ_i m_i t^{m̄+n̄} K_i
ToroidalElement central_cocycle(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n);
ToroidalElement bracket_toroidal(const ToroidalConfig& cfg, const ToroidalElement& x,
                                 const ToroidalElement& y);
void validate(const ToroidalConfig& cfg, const ToroidalElement& x);

}  // namespace torvo
