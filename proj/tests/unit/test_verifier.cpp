#include <doctest.h>

#include <torvo/verifier.hpp>

#include <stdexcept>

using namespace torvo;

namespace {

CheckConfig small(std::vector<std::string> families, int q) {
  CheckConfig c;
  c.families = std::move(families);
  c.M = 3;
  c.N = 1;
  c.q = q;
  c.max_degree = 4;
  c.box = 1;
  c.samples = 10;
  c.seed = 5;
  return c;
}

}  // namespace

TEST_CASE("state generation honours the budgets") {
  CheckConfig c;
  c.max_degree = 0;
  c.box = 0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto s = gen_state(c, k);
    REQUIRE(s.size() == 1);
    const auto& key = s.begin()->first;
    CHECK(key.lattice.monomial.empty());
    CHECK(key.boson.phi.empty());
    CHECK(key.boson.phi_star.empty());
  }
  c.max_degree = 4;
  c.box = 2;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const auto s = gen_state(c, k);
    CHECK(s == gen_state(c, k));
    int par = -1;
    for (const auto& [key, v] : s) {
      CHECK(2 * key.lattice.monomial.degree() + key.boson.energy2() <= 4);
      for (auto x : key.lattice.gamma.coords()) CHECK(std::abs(x) <= 2);
      if (par < 0) par = parity(key);
      CHECK(parity(key) == par);
    }
  }
}

TEST_CASE("clauses that cannot be realized count as zero hits") {
  auto c = small({"prop33"}, 1);
  c.M = 2;
  const auto r = run_family("prop33", c);
  CHECK_FALSE(r.passed);
  bool empty = false;
  for (const auto& t : r.clauses) empty = empty || t.hits == 0;
  CHECK(empty);
}

TEST_CASE("check configuration validation") {
  auto c = small({"nope"}, 1);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = small({"cocycle"}, 1);
  c.samples = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = small({"cocycle"}, 1);
  c.jobs = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(family_ids().size() == 12);
}

TEST_CASE("every family passes on a small configuration") {
  for (const auto& f : family_ids()) {
    const int q = (f == "prop33" || f == "R-tables") ? 1 : 2;
    const auto r = run_family(f, small({f}, q));
    CHECK_MESSAGE(r.passed, f);
    for (const auto& c : r.clauses) {
      const std::string where = f + " " + c.clause;
      CHECK_MESSAGE(c.hits > 0, where);
      CHECK_MESSAGE(c.failed == 0, where);
    }
  }
}

TEST_CASE("reports are deterministic and independent of the worker count") {
  auto c = small({"cocycle", "ST-tables", "lemma49", "identity110"}, 2);
  const auto a = run_check(c).to_json(false).dump();
  const auto b = run_check(c).to_json(false).dump();
  CHECK(a == b);
  c.jobs = 3;
  CHECK(run_check(c).to_json(false).dump() == a);
  CHECK(run_check(c).to_json(true).contains("families"));
}

TEST_CASE("adjudicated counterexamples replay exactly") {
  auto cfg = small({"R-tables"}, 1);
  cfg.N = 2;
  const auto r = run_family("R-tables", cfg);
  bool seen = false;
  for (const auto& c : r.clauses) {
    if (c.adjudicated == 0) continue;
    seen = true;
    CHECK_FALSE(c.adjudication.empty());
    const auto rep = replay(c.counterexample);
    CHECK(rep.found);
    CHECK_FALSE(rep.passed);
    CHECK(rep.reproduced);
    CHECK(rep.clause == c.clause);
  }
  CHECK(seen);
}

TEST_CASE("replay of a passing item reports the clause as holding") {
  const auto cfg = small({"cocycle"}, 1);
  nlohmann::json ce = {{"family", "cocycle"}, {"config", encode(cfg)}};
  ce["clause"] = "basis-table";
  ce["item"] = {{"kind", "basis"}};
  ce["detail"] = nullptr;
  const auto rep = replay(ce);
  CHECK(rep.found);
  CHECK(rep.passed);
  CHECK_FALSE(rep.reproduced);
}

TEST_CASE("check config encoding round-trips") {
  auto c = small({"jacobi", "form"}, 2);
  auto j = encode(c);
  j["families"] = c.families;
  const auto d = decode_check_config(j);
  CHECK(d.families == c.families);
  CHECK(encode(d) == encode(c));
}
