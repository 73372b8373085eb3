#include <torvo/clause_tables.hpp>
#include <torvo/codec.hpp>
#include <torvo/rng.hpp>
#include <torvo/verifier.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

using namespace torvo;
using codec::json;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& why) {
    if (cond) return;
    if (ok) note = why;
    ok = false;
  }
};

CheckConfig config(std::vector<std::string> families, int M, int N, int q) {
  CheckConfig c;
  c.families = std::move(families);
  c.M = M;
  c.N = N;
  c.q = q;
  c.max_degree = 6;
  c.box = 2;
  c.samples = 100;
  c.seed = 1;
  return c;
}

const ClauseTally* find(const FamilyReport& r, const std::string& clause) {
  for (const auto& c : r.clauses)
    if (c.clause == clause) return &c;
  return nullptr;
}

// every clause of the family hit at least `min_hits` times with zero failures
void require_family(Verdict& v, const FamilyReport& r, std::size_t min_hits) {
  v.require(r.passed, r.family + " reported failure");
  for (const auto& c : r.clauses) {
    v.require(c.failed == 0, r.family + "/" + c.clause + " has failures");
    v.require(c.hits >= min_hits, r.family + "/" + c.clause + " hit " + std::to_string(c.hits) + " times");
  }
}

void require_clause(Verdict& v, const FamilyReport& r, const std::string& clause, std::size_t min_hits) {
  const auto* c = find(r, clause);
  v.require(c != nullptr, r.family + "/" + clause + " missing");
  if (!c) return;
  v.require(c->failed == 0 && c->adjudicated == 0, r.family + "/" + clause + " not clean");
  v.require(c->hits >= min_hits, r.family + "/" + clause + " hit " + std::to_string(c->hits) + " times");
}

std::string summary(const FamilyReport& r) {
  std::size_t hits = 0, adjudicated = 0;
  for (const auto& c : r.clauses) {
    hits += c.hits;
    adjudicated += c.adjudicated;
  }
  std::string s = r.family + " " + std::to_string(hits) + " checks";
  if (adjudicated) s += ", " + std::to_string(adjudicated) + " adjudicated";
  return s;
}

Verdict cocycle_suite() {
  Verdict v;
  const auto r = run_family("cocycle", config({"cocycle"}, 4, 1, 1));
  require_family(v, r, 16);
  require_clause(v, r, "sign-law", 10000);
  require_clause(v, r, "identity", 10000);
  v.note = v.ok ? summary(r) : v.note;
  return v;
}

Verdict jacobi_suite() {
  Verdict v;
  const auto small = run_family("jacobi", config({"jacobi"}, 2, 2, 1));
  require_family(v, small, 1);
  const auto* exhaustive = find(small, "super-jacobi");
  v.require(exhaustive && exhaustive->hits == 4096 && exhaustive->passed == 4096,
            "M=N=2 super-jacobi is not 4096/4096");
  const auto large = run_family("jacobi", config({"jacobi"}, 3, 3, 1));
  require_family(v, large, 1);
  require_clause(v, large, "super-jacobi", 10000);
  v.note = v.ok ? summary(small) + "; " + summary(large) : v.note;
  return v;
}

Verdict form_suite() {
  Verdict v;
  const auto r = run_family("form", config({"form"}, 3, 3, 1));
  require_family(v, r, 1);
  require_clause(v, r, "supersymmetry", 36 * 36);
  require_clause(v, r, "evenness", 1);
  require_clause(v, r, "invariance", 10000);
  v.note = v.ok ? summary(r) : v.note;
  return v;
}

Verdict table_suite() {
  Verdict v;
  std::vector<std::string> adjudicated;
  for (const auto& [family, q] : {std::pair{"R-tables", 1}, std::pair{"ST-tables", 2}}) {
    const auto r = run_family(family, config({family}, 3, 2, q));
    v.require(r.passed, std::string(family) + " reported failure");
    v.require(r.clauses.size() == table_clauses().size(), std::string(family) + " clause count");
    for (const auto& c : r.clauses) {
      v.require(c.failed == 0, c.clause + " has failures");
      v.require(c.hits >= 5, c.clause + " has fewer than 5 instantiations");
      if (c.adjudicated == 0) continue;
      v.require(known_misprint(c.clause).has_value(), c.clause + " disagrees without adjudication");
      v.require(!c.adjudication.empty() && !c.counterexample.is_null(),
                c.clause + " adjudication is not reported");
      adjudicated.push_back(c.clause);
    }
  }
  if (v.ok) {
    v.note = "all clauses agree";
    if (!adjudicated.empty()) {
      v.note += " except adjudicated misprints";
      for (const auto& c : adjudicated) v.note += " " + c;
    }
  }
  return v;
}

Verdict prop33_suite() {
  Verdict v;
  const auto r = run_family("prop33", config({"prop33"}, 3, 2, 1));
  require_family(v, r, 100);
  for (const auto& c : r.clauses) v.require(c.adjudicated == 0, c.clause + " adjudicated");
  v.note = v.ok ? summary(r) : v.note;
  return v;
}

Verdict thm46_suite() {
  Verdict v;
  const auto r = run_family("thm46", config({"thm46"}, 3, 2, 2));
  v.require(r.passed, "thm46 reported failure");
  for (const auto& c : r.clauses) {
    v.require(c.failed == 0, c.clause + " has failures");
    if (c.clause.rfind("ST", 0) == 0) {
      v.require(c.hits >= 100, c.clause + " hit fewer than 100 times");
      v.require(c.adjudicated == 0, c.clause + " adjudicated");
    }
  }
  require_clause(v, r, "K_q-identity", 100);
  require_clause(v, r, "central-witness", 1);
  require_clause(v, r, "central-image", 100);
  v.note = v.ok ? summary(r) : v.note;
  return v;
}

Verdict mode_identity_suite() {
  Verdict v;
  std::string note;
  for (const char* family : {"corollary19", "identity110", "lemma28", "lemma49"}) {
    const auto r = run_family(family, config({family}, 3, 2, 2));
    require_family(v, r, 100);
    note += (note.empty() ? "" : "; ") + summary(r);
  }
  v.note = v.ok ? note : v.note;
  return v;
}

Verdict determinism_suite() {
  Verdict v;
  for (int q = 1; q <= 2; ++q) {
    std::vector<std::string> families;
    for (const auto& f : family_ids())
      if ((f == "prop33" || f == "R-tables") == (q == 1)) families.push_back(f);
    auto c = config(families, 3, 2, q);
    c.samples = 20;
    const auto first = run_check(c).to_json(false).dump();
    const auto second = run_check(c).to_json(false).dump();
    v.require(first == second, "repeated runs differ at q=" + std::to_string(q));
    c.jobs = 4;
    const auto parallel = run_check(c).to_json(false).dump();
    v.require(parallel == first, "jobs=4 differs from jobs=1 at q=" + std::to_string(q));
  }
  v.note = v.ok ? "reports identical across reruns and jobs=1/4" : v.note;
  return v;
}

ToroidalElement random_toroidal(Rng& rng, const RepConfig& rc) {
  ToroidalElement x;
  const int terms = static_cast<int>(rng.uniform(1, 4));
  for (int t = 0; t < terms; ++t) {
    std::vector<std::int64_t> m(rc.q);
    for (auto& e : m) e = rng.uniform(-3, 3);
    const Scalar c = ratio(rng.uniform(-9, 9), rng.uniform(1, 9));
    if (rng.uniform(0, 3) == 0)
      x += ToroidalElement::central(m, static_cast<int>(rng.uniform(1, rc.q)), c);
    else
      x += ToroidalElement::generator({static_cast<int>(rng.uniform(1, rc.M + rc.N)),
                                       static_cast<int>(rng.uniform(1, rc.M + rc.N))},
                                      m, c);
  }
  return x;
}

GlElement random_gl(Rng& rng, const RepConfig& rc) {
  GlElement x;
  const int terms = static_cast<int>(rng.uniform(1, 4));
  for (int t = 0; t < terms; ++t)
    x.add({static_cast<int>(rng.uniform(1, rc.M + rc.N)), static_cast<int>(rng.uniform(1, rc.M + rc.N))},
          ratio(rng.uniform(-9, 9), rng.uniform(1, 9)));
  return x;
}

template <class T, class Decode>
bool round_trips(const T& x, Decode decode) {
  const std::string text = codec::encode(x).dump();
  const T back = decode(json::parse(text));
  return back == x && codec::encode(back).dump() == text;
}

Verdict serialization_suite() {
  Verdict v;
  std::size_t n = 0;
  for (int q = 1; q <= 3; ++q) {
    const RepConfig rc{3, 2, q};
    auto c = config({}, rc.M, rc.N, rc.q);
    c.seed = 1000 + q;
    Rng rng(4242 + q);
    for (std::uint64_t k = 0; k < 400; ++k, ++n) {
      const auto s = gen_state(c, k);
      v.require(round_trips(s, [&](const json& j) { return codec::decode_tensor_state(j, rc); }),
                "tensor state round trip");
      const auto x = random_toroidal(rng, rc);
      v.require(round_trips(x, [&](const json& j) { return codec::decode_toroidal(j, rc.toroidal()); }),
                "toroidal element round trip");
      const auto g = random_gl(rng, rc);
      v.require(round_trips(g, [&](const json& j) { return codec::decode_gl_element(j, rc.gl()); }),
                "gl element round trip");
      const auto op = Representation(rc).rho(x);
      const auto text = codec::encode(op).dump();
      v.require(codec::encode(codec::decode_operator(json::parse(text), rc)).dump() == text,
                "operator round trip");
    }
  }
  v.note = v.ok ? std::to_string(n) + " states, toroidal elements, gl elements and operators" : v.note;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"cocycle laws", cocycle_suite},
      {"super Jacobi", jacobi_suite},
      {"invariant form", form_suite},
      {"bracket tables", table_suite},
      {"affine representation", prop33_suite},
      {"toroidal representation", thm46_suite},
      {"mode identities", mode_identity_suite},
      {"determinism", determinism_suite},
      {"serialization", serialization_suite},
  };
  // with an argument, run only that criterion
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "criterion must be in 1..%zu\n", criteria.size());
    return 2;
  }
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    if (only != 0 && index != only) {
      ++index;
      continue;
    }
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d %s: %s (%s)\n", index++, name, v.ok ? "PASS" : "FAIL", v.note.c_str());
    std::fflush(stdout);
    if (!v.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
