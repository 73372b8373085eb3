#pragma once

#include <torvo/boson_fock.hpp>
#include <torvo/lattice_fock.hpp>
#include <torvo/superalgebra.hpp>

#include <compare>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace torvo {

struct TensorKey {
  LatticeKey lattice;
  BosonKey boson;
  friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

using TensorState = SparseVector<TensorKey>;

int parity(const TensorKey& key);

struct RepConfig {
  int M = 1;
  int N = 1;
  int q = 1;

  LatticeConfig lattice() const { return {M, q}; }
  BosonSpace bosons() const { return {N}; }
  GlConfig gl() const { return {M, N}; }
  ToroidalConfig toroidal() const { return {{M, N}, q}; }
  void validate() const;
  friend bool operator==(const RepConfig&, const RepConfig&) = default;
};

class RepOperator;

namespace op {

struct Vertex {          // X_{mode2/2}(alpha)
  LatticeVector alpha;
  std::int64_t mode2 = 0;
};
struct Current {         // alpha(mode)
  LatticeVector alpha;
  std::int64_t mode = 0;
};
struct Diagonal {        // T^alpha_mode(δ_m̲) = Σ_k alpha(k) X_{mode-k}(δ_m̲)
  LatticeVector alpha;
  std::vector<std::int64_t> m;
  std::int64_t mode = 0;
};
struct SMode {           // S^m̲_{ij}(mode), one of i, j > M
  int i = 1;
  int j = 1;
  std::vector<std::int64_t> m;
  std::int64_t mode = 0;
};
struct Central {         // image of t^m̄ K_direction
  std::vector<std::int64_t> exponent;
  int direction = 1;
};
struct Phi {             // φ^flavor_{r-1/2}
  int flavor = 1;
  std::int64_t r = 0;
};
struct PhiStar {
  int flavor = 1;
  std::int64_t r = 0;
};
struct Product {         // factors[0] ... factors[n-1]; the last acts first; empty = identity
  std::vector<RepOperator> factors;
};
struct Sum {
  std::vector<std::pair<Scalar, RepOperator>> terms;
};

}  // namespace op

class RepOperator {
 public:
  using Node = std::variant<op::Vertex, op::Current, op::Diagonal, op::SMode, op::Central, op::Phi,
                            op::PhiStar, op::Product, op::Sum>;

  RepOperator() : node_(op::Sum{}) {}
  template <class T>
  RepOperator(T node) : node_(std::move(node)) {}

  static RepOperator identity() { return op::Product{}; }
  static RepOperator zero() { return op::Sum{}; }

  const Node& node() const { return node_; }

 private:
  Node node_;
};

RepOperator operator*(const RepOperator& a, const RepOperator& b);
RepOperator operator+(const RepOperator& a, const RepOperator& b);
RepOperator operator-(const RepOperator& a, const RepOperator& b);
RepOperator operator*(const Scalar& c, const RepOperator& a);

class Representation {
 public:
  explicit Representation(RepConfig cfg);

  const RepConfig& config() const { return cfg_; }

  int parity(const RepOperator& a) const;
  TensorState apply(const RepOperator& a, const TensorState& s) const;
  RepOperator rho(const ToroidalElement& x) const;
  // [A,B] s = A(B s) - (-1)^{|A||B|} B(A s)
  TensorState super_commutator(const RepOperator& a, const RepOperator& b, const TensorState& s) const;
  TensorState s_mode_apply(int i, int j, const std::vector<std::int64_t>& m, std::int64_t n,
                           const TensorState& s) const;

  void validate(const TensorState& s) const;

 private:
  TensorState apply_key(const RepOperator& a, const TensorKey& key) const;
  TensorState vertex_key(const LatticeVector& alpha, std::int64_t mode2, const TensorKey& key) const;
  TensorState current_key(const LatticeVector& alpha, std::int64_t mode, const TensorKey& key) const;
  TensorState diagonal_key(const op::Diagonal& d, const TensorKey& key) const;
  TensorState s_mode_key(const op::SMode& s, const TensorKey& key) const;
  TensorState central_key(const op::Central& c, const TensorKey& key) const;
  LatticeVector delta_of(const std::vector<std::int64_t>& m) const;

  RepConfig cfg_;
};

// the generator-wise image of a toroidal basis key
RepOperator rho_key(const RepConfig& cfg, const ToroidalKey& key);

}  // namespace torvo
