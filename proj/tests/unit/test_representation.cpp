#include <doctest.h>

#include <torvo/representation.hpp>
#include <torvo/verifier.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

using namespace torvo;

namespace {

using Exp = std::vector<std::int64_t>;

constexpr std::int64_t kWide = 10;

TensorState vacuum(const RepConfig& cfg) {
  TensorState s;
  s.add(TensorKey{{LatticeVector(cfg.lattice()), {}}, {}}, Scalar(1));
  return s;
}

CheckConfig sampler(const RepConfig& rc) {
  CheckConfig c;
  c.M = rc.M;
  c.N = rc.N;
  c.q = rc.q;
  c.max_degree = 5;
  c.box = 1;
  c.seed = 77;
  return c;
}

// Σ_r X_{r-1/2}(±e) φ_{n-r+1/2}, summed over a window much wider than any support
TensorState mixed_oracle(const Representation& rep, int i, int j, std::int64_t n, const TensorState& s) {
  const auto& cfg = rep.config();
  const bool upper = i <= cfg.M;
  const auto alpha = upper ? LatticeVector::unit_e(cfg.lattice(), i)
                           : -LatticeVector::unit_e(cfg.lattice(), j);
  TensorState out;
  for (std::int64_t r = -kWide; r <= kWide; ++r) {
    const RepOperator boson = upper ? RepOperator(op::PhiStar{j - cfg.M, n - r + 1})
                                    : RepOperator(op::Phi{i - cfg.M, n - r + 1});
    out += rep.apply(RepOperator(op::Vertex{alpha, 2 * r - 1}) * boson, s);
  }
  return out;
}

// Σ_r :φ^i_{r-1/2} φ^{j*}_{n-r+1/2}:
TensorState odd_block_oracle(const Representation& rep, int i, int j, std::int64_t n,
                             const TensorState& s) {
  TensorState out;
  for (std::int64_t r = -kWide; r <= kWide; ++r) {
    const std::int64_t t = n - r + 1;
    const RepOperator a = op::Phi{i, r};
    const RepOperator b = op::PhiStar{j, t};
    out += rep.apply(r <= t ? a * b : b * a, s);
  }
  return out;
}

}  // namespace

TEST_CASE("representation examples") {
  const RepConfig cfg{3, 2, 2};
  const Representation rep(cfg);
  const auto lat = cfg.lattice();
  const auto a12 = LatticeVector::unit_e(lat, 1) - LatticeVector::unit_e(lat, 2);
  const auto vac = vacuum(cfg);
  CHECK(rep.apply(op::Vertex{a12, 0}, vac).empty());
  CHECK(rep.apply(op::Central{{0, 0}, 2}, vac) == vac);
  CHECK(rep.apply(op::SMode{cfg.M + 1, cfg.M + 1, {0}, 0}, vac).empty());
  for (std::int64_t m = 0; m <= 3; ++m) CHECK(rep.apply(op::SMode{1, 1 + cfg.M, {0}, m}, vac).empty());
  CHECK_FALSE(rep.apply(op::SMode{1, 1 + cfg.M, {0}, -1}, vac).empty());
  CHECK(rep.apply(op::Vertex{LatticeVector::unit_delta(lat, 1), 0}, vac) ==
        TensorState(TensorKey{{LatticeVector::unit_delta(lat, 1), {}}, {}}, Scalar(1)));
}

TEST_CASE("central identity and dictionary on random states") {
  const RepConfig cfg{3, 2, 2};
  const Representation rep(cfg);
  const auto sc = sampler(cfg);
  const auto lat = cfg.lattice();
  for (std::uint64_t k = 0; k < 40; ++k) {
    const auto s = gen_state(sc, k);
    CHECK(rep.apply(rep.rho(ToroidalElement::central({0, 0}, 2)), s) == s);
    CHECK(rep.apply(rep.rho(ToroidalElement::generator({1, 2}, {0, 0})), s) ==
          rep.apply(op::Vertex{LatticeVector::unit_e(lat, 1) - LatticeVector::unit_e(lat, 2), 0}, s));
    CHECK(rep.apply(rep.rho(ToroidalElement::generator({1, 1 + cfg.M}, {1, -1})), s) ==
          rep.s_mode_apply(1, 1 + cfg.M, {1}, -1, s));
    CHECK(rep.apply(RepOperator::identity(), s) == s);
    CHECK(rep.apply(RepOperator::zero(), s).empty());
  }
}

TEST_CASE("mixed S modes equal their defining sums") {
  const RepConfig cfg{2, 2, 1};
  const Representation rep(cfg);
  const auto sc = sampler(cfg);
  for (std::uint64_t k = 0; k < 25; ++k) {
    const auto s = gen_state(sc, k);
    for (std::int64_t n = -2; n <= 2; ++n) {
      CHECK(rep.s_mode_apply(1, 4, {}, n, s) == mixed_oracle(rep, 1, 4, n, s));
      CHECK(rep.s_mode_apply(3, 2, {}, n, s) == mixed_oracle(rep, 3, 2, n, s));
    }
  }
}

TEST_CASE("odd block S modes equal the normal-ordered sum") {
  const RepConfig cfg{1, 2, 1};
  const Representation rep(cfg);
  const auto sc = sampler(cfg);
  for (std::uint64_t k = 0; k < 25; ++k) {
    const auto s = gen_state(sc, k);
    for (std::int64_t n = -2; n <= 2; ++n)
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          CHECK(rep.s_mode_apply(1 + i, 1 + j, {}, n, s) == odd_block_oracle(rep, i, j, n, s));
  }
}

TEST_CASE("toroidal S modes and diagonal currents equal their convolution sums") {
  const RepConfig cfg{2, 1, 2};
  const Representation rep(cfg);
  const auto sc = sampler(cfg);
  const auto lat = cfg.lattice();
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto s = gen_state(sc, k);
    for (std::int64_t m1 : {-1, 2}) {
      const auto d = LatticeVector::delta_of(lat, Exp{m1});
      for (std::int64_t n = -1; n <= 1; ++n) {
        for (auto [i, j] : {std::pair{1, 3}, std::pair{3, 2}, std::pair{3, 3}}) {
          TensorState expected;
          for (std::int64_t kk = -kWide; kk <= kWide; ++kk)
            expected += rep.apply(RepOperator(op::SMode{i, j, {0}, kk}) * op::Vertex{d, 2 * (n - kk)}, s);
          CHECK(rep.s_mode_apply(i, j, {m1}, n, s) == expected);
        }
        const auto e1 = LatticeVector::unit_e(lat, 1);
        TensorState expected;
        for (std::int64_t kk = -kWide; kk <= kWide; ++kk)
          expected += rep.apply(RepOperator(op::Current{e1, kk}) * op::Vertex{d, 2 * (n - kk)}, s);
        CHECK(rep.apply(op::Diagonal{e1, {m1}, n}, s) == expected);
      }
    }
  }
}

TEST_CASE("operator parity") {
  const RepConfig cfg{2, 2, 1};
  const Representation rep(cfg);
  const auto lat = cfg.lattice();
  CHECK(rep.parity(op::SMode{1, 3, {}, 0}) == 1);
  CHECK(rep.parity(op::SMode{3, 4, {}, 0}) == 0);
  CHECK(rep.parity(op::Vertex{LatticeVector::unit_e(lat, 1), 1}) == 1);
  CHECK(rep.parity(op::Phi{1, 0}) == 0);
  CHECK(rep.parity(RepOperator(op::SMode{1, 3, {}, 0}) * op::SMode{3, 2, {}, 0}) == 0);
  CHECK_THROWS(rep.parity(RepOperator(op::SMode{1, 3, {}, 0}) + op::Phi{1, 0}));
  for (const auto& x : gl_basis(cfg.gl()))
    CHECK(rep.parity(rep.rho(ToroidalElement::generator(x, {1}))) == parity(cfg.gl(), x));
}

TEST_CASE("super commutator examples") {
  const RepConfig cfg{2, 2, 1};
  const Representation rep(cfg);
  const auto sc = sampler(cfg);
  const auto lat = cfg.lattice();
  const auto e1 = LatticeVector::unit_e(lat, 1);
  const auto e2 = LatticeVector::unit_e(lat, 2);
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto s = gen_state(sc, k);
    CHECK(rep.super_commutator(op::Current{e1, 2}, op::Current{e2, -2}, s).empty());
    for (std::int64_t m = -1; m <= 1; ++m)
      for (std::int64_t n = -1; n <= 1; ++n)
        CHECK(rep.super_commutator(op::SMode{3, 1, {}, m}, op::SMode{4, 2, {}, n}, s).empty());
  }
}

TEST_CASE("representation rejects malformed operators") {
  const RepConfig cfg{2, 1, 2};
  const Representation rep(cfg);
  const auto vac = vacuum(cfg);
  CHECK_THROWS(rep.apply(op::Central{{0}, 1}, vac));
  CHECK_THROWS(rep.apply(op::Central{{0, 0}, 3}, vac));
  CHECK_THROWS(rep.apply(op::Phi{2, 0}, vac));
  CHECK_THROWS(rep.rho(ToroidalElement::generator({1, 4}, {0, 0})));
  CHECK_THROWS((RepConfig{1, 0, 1}.validate()));
}
