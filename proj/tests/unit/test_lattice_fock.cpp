#include <doctest.h>

#include <torvo/lattice_fock.hpp>
#include <torvo/rng.hpp>

#include <map>
#include <stdexcept>
#include <vector>

using namespace torvo;

namespace {

using Series = std::map<std::int64_t, LatticeFockState>;

// exp(sign * Σ_{n=1}^{top} a(sign' n) w^n / n) applied term by term, truncated at degree `cap`
Series exp_heisenberg(const LatticeVector& a, int mode_sign, int coeff_sign, std::int64_t top,
                      std::int64_t cap, const LatticeFockState& s) {
  Series series{{0, s}};
  for (std::int64_t n = 1; n <= top; ++n) {
    Series next;
    for (const auto& [deg, state] : series) {
      LatticeFockState power = state;
      Scalar weight(1);
      for (std::int64_t k = 0; deg + n * k <= cap; ++k) {
        if (k > 0) {
          power = heisenberg_apply(a, mode_sign * n, power);
          weight *= Scalar(coeff_sign);
          weight /= n * k;
        }
        if (power.empty()) break;
        next[deg + n * k].add_scaled(power, weight);
      }
    }
    series = std::move(next);
  }
  return series;
}

// z^p coefficient of Y(a,z) on a basis key, expanded directly from the two exponentials
LatticeFockState brute_vertex(const LatticeVector& a, std::int64_t mode2, const LatticeKey& key) {
  const std::int64_t p = -(mode2 + bilinear(a, a)) / 2;
  const std::int64_t ag = bilinear(a, key.gamma);
  LatticeFockState start;
  start.add(key, Scalar(1));
  start = group_multiply(a, start);
  const std::int64_t deg = key.monomial.degree();
  const Series plus = exp_heisenberg(a, 1, -1, deg, deg, start);
  LatticeFockState out;
  for (const auto& [dplus, state] : plus) {
    const std::int64_t dminus = p - ag + dplus;
    if (dminus < 0) continue;
    const Series minus = exp_heisenberg(a, -1, 1, dminus, dminus, state);
    auto it = minus.find(dminus);
    if (it != minus.end()) out += it->second;
  }
  return out;
}

LatticeKey vac(const LatticeConfig& cfg) { return {LatticeVector(cfg), {}}; }

LatticeFockState single(const LatticeKey& k, const Scalar& c = Scalar(1)) {
  LatticeFockState s;
  s.add(k, c);
  return s;
}

LatticeVector random_vector(Rng& rng, const LatticeConfig& cfg, int box, bool q_only) {
  LatticeVector v(cfg);
  for (int b = 0; b < cfg.rank(); ++b) v[b] = rng.uniform(-box, box);
  if (q_only)
    for (int j = 1; j < cfg.q; ++j) v[cfg.d_index(j)] = 0;
  return v;
}

CreationMonomial random_monomial(Rng& rng, const LatticeConfig& cfg, int budget) {
  std::vector<Factor> f;
  while (budget > 0 && rng.uniform(0, 2) != 0) {
    const int mode = static_cast<int>(rng.uniform(1, budget));
    f.push_back({static_cast<int>(rng.uniform(0, cfg.rank() - 1)), mode, 1});
    budget -= mode;
  }
  return CreationMonomial(std::move(f));
}

}  // namespace

TEST_CASE("creation monomials merge and order factors") {
  const CreationMonomial u({{1, 2, 1}, {0, 1, 1}, {1, 2, 2}});
  REQUIRE(u.factors().size() == 2);
  CHECK(u.factors()[0] == Factor{0, 1, 1});
  CHECK(u.factors()[1] == Factor{1, 2, 3});
  CHECK(u.degree() == 7);
  CHECK(u.power_of(1, 2) == 3);
  CHECK(u.power_of(1, 1) == 0);
  CHECK(u.times(1, 2, -3) == CreationMonomial::single(0, 1));
  CHECK(u == CreationMonomial::single(0, 1) * CreationMonomial::single(1, 2, 3));
  CHECK_THROWS_AS(CreationMonomial({{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS(u.times(0, 1, -2));
}

TEST_CASE("heisenberg action examples") {
  const LatticeConfig cfg{2, 1};
  const auto e1 = LatticeVector::unit_e(cfg, 1);
  const LatticeKey k{e1, {}};
  CHECK(heisenberg_image(e1, 0, k) == single(k));
  CHECK(heisenberg_image(e1, 2, vac(cfg)).empty());
  const LatticeKey two{LatticeVector(cfg), CreationMonomial::single(0, 1, 2)};
  CHECK(heisenberg_image(e1, 1, two) ==
        single({LatticeVector(cfg), CreationMonomial::single(0, 1)}, Scalar(2)));
  const auto e2 = LatticeVector::unit_e(cfg, 2);
  CHECK(heisenberg_image(e2, 1, two).empty());
  CHECK(heisenberg_image(e1 - e2, -3, vac(cfg)) ==
        single({LatticeVector(cfg), CreationMonomial::single(0, 3)}) -
            single({LatticeVector(cfg), CreationMonomial::single(1, 3)}));
}

TEST_CASE("heisenberg annihilators act as derivations") {
  const LatticeConfig cfg{2, 2};
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_vector(rng, cfg, 2, false);
    const auto u = random_monomial(rng, cfg, 6);
    const auto v = random_monomial(rng, cfg, 6);
    const std::int64_t m = rng.uniform(1, 3);
    const LatticeVector g(cfg);
    // a(m)(uv) = (a(m)u) v + u (a(m)v)
    LatticeFockState expected;
    for (const auto& [key, c] : heisenberg_image(a, m, {g, u}))
      expected.add({g, key.monomial * v}, c);
    for (const auto& [key, c] : heisenberg_image(a, m, {g, v}))
      expected.add({g, u * key.monomial}, c);
    CHECK(heisenberg_image(a, m, {g, u * v}) == expected);
  }
}

TEST_CASE("heisenberg commutator is m (a,b) delta") {
  const LatticeConfig cfg{2, 2};
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_vector(rng, cfg, 2, false);
    const auto b = random_vector(rng, cfg, 2, false);
    const std::int64_t m = rng.uniform(-3, 3);
    const std::int64_t n = rng.uniform(-3, 3);
    const auto s = single({random_vector(rng, cfg, 1, true), random_monomial(rng, cfg, 5)});
    const auto lhs = heisenberg_apply(a, m, heisenberg_apply(b, n, s)) -
                     heisenberg_apply(b, n, heisenberg_apply(a, m, s));
    const Scalar c = m + n == 0 ? Scalar(m * bilinear(a, b)) : Scalar(0);
    CHECK(lhs == c * s);
  }
}

TEST_CASE("group algebra multiplication") {
  const LatticeConfig cfg{2, 2};
  const auto e1 = LatticeVector::unit_e(cfg, 1);
  const auto e2 = LatticeVector::unit_e(cfg, 2);
  const auto d1 = LatticeVector::unit_delta(cfg, 1);
  CHECK(group_image(e2, vac(cfg)) == single({e2, {}}));
  CHECK(group_image(e2, {e1, {}}) == single({e1 + e2, {}}, Scalar(-1)));
  CHECK(group_image(d1, {e1, {}}) == single({e1 + d1, {}}));
}

TEST_CASE("exponential coefficients") {
  const LatticeConfig cfg{2, 1};
  const auto e1 = LatticeVector::unit_e(cfg, 1);
  CHECK(exp_minus_coefficient(e1, 0) == CreationPolynomial(CreationMonomial{}, Scalar(1)));
  CHECK(exp_minus_coefficient(e1, 1) == CreationPolynomial(CreationMonomial::single(0, 1), Scalar(1)));
  CreationPolynomial h2(CreationMonomial::single(0, 1, 2), Scalar(1, 2));
  h2.add(CreationMonomial::single(0, 2), Scalar(1, 2));
  CHECK(exp_minus_coefficient(e1, 2) == h2);
  CHECK_THROWS_AS(exp_minus_coefficient(e1, -1), std::invalid_argument);
}

TEST_CASE("vertex mode examples") {
  const LatticeConfig cfg{2, 2};
  const auto e1 = LatticeVector::unit_e(cfg, 1);
  const auto e2 = LatticeVector::unit_e(cfg, 2);
  const auto a = e1 - e2;
  CHECK(vertex_mode_image(a, -2, vac(cfg)) == single({a, {}}));
  CHECK(vertex_mode_image(a, 0, vac(cfg)).empty());
  const std::vector<std::int64_t> m{3};
  const auto dm = LatticeVector::delta_of(cfg, m);
  CHECK(vertex_mode_image(dm, 0, vac(cfg)) == single({dm, {}}));
  CHECK_THROWS_AS(vertex_mode_image(e1, 0, vac(cfg)), std::invalid_argument);
  CHECK_THROWS_AS(vertex_mode_image(LatticeVector::unit_d(cfg, 1), 0, vac(cfg)),
                  std::invalid_argument);
}

TEST_CASE("vanishing bound examples") {
  const LatticeConfig cfg{2, 2};
  const auto e1 = LatticeVector::unit_e(cfg, 1);
  const auto e2 = LatticeVector::unit_e(cfg, 2);
  CHECK(vanishing_bound(e1 - e2, vac(cfg)) == -2);
  CHECK(vanishing_bound(LatticeVector::unit_delta(cfg, 1), vac(cfg)) == 0);
  CHECK(vanishing_bound(e1, vac(cfg)) == -1);
  CHECK(vanishing_bound(e1, LatticeFockState{}) == kNoBound);
}

TEST_CASE("vertex modes agree with the brute-force series expansion") {
  Rng rng(13);
  for (int q = 1; q <= 2; ++q) {
    const LatticeConfig cfg{3, q};
    for (int trial = 0; trial < 150; ++trial) {
      const auto a = random_vector(rng, cfg, 1, true);
      const LatticeKey key{random_vector(rng, cfg, 1, true), random_monomial(rng, cfg, 4)};
      const std::int64_t norm = bilinear(a, a);
      const std::int64_t bound = vanishing_bound(a, key);
      for (std::int64_t mode2 = bound + 6; mode2 >= bound - 6; --mode2) {
        if (((mode2 - norm) % 2 + 2) % 2 != 0) continue;
        const auto fast = vertex_mode_image(a, mode2, key);
        CHECK(fast == brute_vertex(a, mode2, key));
        if (mode2 > bound) CHECK(fast.empty());
      }
    }
  }
}

TEST_CASE("vertex modes commute with heisenberg modes up to (a,b) X") {
  const LatticeConfig cfg{3, 2};
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_vector(rng, cfg, 1, true);
    const auto b = random_vector(rng, cfg, 1, false);
    const std::int64_t m = rng.uniform(-2, 2);
    const auto s = single({random_vector(rng, cfg, 1, true), random_monomial(rng, cfg, 4)});
    const std::int64_t mode2 = 2 * rng.uniform(-3, 2) + (bilinear(a, a) % 2 != 0 ? 1 : 0);
    // [b(m), X_n(a)] = (a,b) X_{n+m}(a)
    const auto lhs = heisenberg_apply(b, m, vertex_mode_apply(a, mode2, s)) -
                     vertex_mode_apply(a, mode2, heisenberg_apply(b, m, s));
    const auto rhs = Scalar(bilinear(a, b)) * vertex_mode_apply(a, mode2 + 2 * m, s);
    CHECK(lhs == rhs);
  }
}
