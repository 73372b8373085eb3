#include <torvo/codec.hpp>
#include <torvo/rng.hpp>
#include <torvo/verifier.hpp>

#include "families.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

namespace torvo {

using nlohmann::json;

void CheckConfig::validate() const {
  rep().validate();
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  if (box < 0) throw std::invalid_argument("box must be non-negative");
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
  for (const auto& f : families)
    if (std::find(family_ids().begin(), family_ids().end(), f) == family_ids().end())
      throw std::invalid_argument("unknown family id '" + f + "'");
}

const std::vector<std::string>& family_ids() {
  static const std::vector<std::string> ids = {"cocycle",     "jacobi",      "form",   "R-tables",
                                               "ST-tables",   "prop33",      "thm46",  "lemma49",
                                               "corollary19", "identity110", "boson",  "lemma28"};
  return ids;
}

TensorState gen_state(const CheckConfig& cfg, std::uint64_t stream) {
  const RepConfig rc = cfg.rep();
  const LatticeConfig lat = rc.lattice();
  Rng rng = Rng::derive(cfg.seed, stream, 0x57a7e);
  const int want = rng.coin() ? 1 : 0;
  const int terms = static_cast<int>(rng.uniform(1, 3));
  TensorState s;
  LatticeVector first_gamma(lat);
  for (int t = 0; t < terms; ++t) {
    LatticeVector gamma(lat);
    for (int k = 0; k < gamma.rank(); ++k) gamma[k] = rng.uniform(-cfg.box, cfg.box);
    if (parity(gamma) != want) gamma[0] += gamma[0] < cfg.box ? 1 : -1;
    if (t == 0) first_gamma = gamma;

    std::int64_t budget = rng.uniform(0, cfg.max_degree);
    std::vector<Factor> factors;
    BosonKey boson;
    while (budget > 0 && rng.uniform(0, 3) != 0) {
      const auto kind = rng.uniform(0, 2);
      if (kind == 0) {
        if (budget < 2) continue;
        const int mode = static_cast<int>(rng.uniform(1, budget / 2));
        factors.push_back({static_cast<int>(rng.uniform(0, lat.rank() - 1)), mode, 1});
        budget -= 2 * mode;
      } else {
        const int mag = static_cast<int>(2 * rng.uniform(0, (budget - 1) / 2) + 1);
        BosonMode b{static_cast<int>(rng.uniform(1, rc.N)), -mag};
        (kind == 1 ? boson.phi : boson.phi_star).push_back(b);
        budget -= mag;
      }
    }
    boson.canonicalize();
    const Scalar c = ratio(rng.uniform(1, 3) * (rng.coin() ? 1 : -1), rng.uniform(1, 3));
    s.add(TensorKey{{gamma, CreationMonomial(std::move(factors))}, std::move(boson)}, c);
  }
  if (s.empty()) s.add(TensorKey{{first_gamma, {}}, {}}, Scalar(1));
  return s;
}

namespace {

struct Tally {
  ClauseTally out;
  bool has_example = false;
};

}  // namespace

FamilyReport run_family(const std::string& family, const CheckConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto fam = detail::make_family(family, cfg);
  const std::size_t n = fam->size();
  std::vector<std::vector<detail::Outcome>> results(n);
  std::vector<std::string> errors(n);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        const auto item = fam->item(i);
        results[i] = fam->evaluate(item);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  FamilyReport report;
  report.family = family;
  std::map<std::string, Tally> tallies;
  std::vector<std::string> order = fam->clauses();
  for (const auto& c : order) tallies[c].out.clause = c;

  auto record_example = [&](Tally& t, std::size_t index, const detail::Outcome& o) {
    if (t.has_example) return;
    t.has_example = true;
    t.out.counterexample = {{"family", family},
                            {"clause", o.clause},
                            {"config", encode(cfg)},
                            {"item", fam->item(index)},
                            {"detail", o.detail}};
  };

  bool errored = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      errored = true;
      auto& t = tallies["error"];
      t.out.clause = "error";
      ++t.out.hits;
      ++t.out.failed;
      record_example(t, i, detail::Outcome{"error", detail::Status::fail, json{{"message", errors[i]}}});
      continue;
    }
    for (const auto& o : results[i]) {
      auto it = tallies.find(o.clause);
      if (it == tallies.end()) {
        order.push_back(o.clause);
        it = tallies.emplace(o.clause, Tally{}).first;
        it->second.out.clause = o.clause;
      }
      auto& t = it->second;
      ++t.out.hits;
      if (o.status == detail::Status::pass) {
        ++t.out.passed;
      } else {
        if (o.status == detail::Status::fail)
          ++t.out.failed;
        else
          ++t.out.adjudicated;
        record_example(t, i, o);
      }
    }
  }
  if (errored) order.push_back("error");

  report.passed = true;
  for (const auto& c : order) {
    auto& t = tallies[c].out;
    if (t.adjudicated > 0) t.adjudication = fam->adjudication(c);
    if (t.hits == 0 || t.failed > 0) report.passed = false;
    report.clauses.push_back(std::move(t));
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CheckReport run_check(const CheckConfig& cfg) {
  cfg.validate();
  CheckReport report;
  report.config = cfg;
  report.passed = true;
  for (const auto& f : cfg.families) {
    report.families.push_back(run_family(f, cfg));
    report.passed = report.passed && report.families.back().passed;
  }
  return report;
}

json encode(const CheckConfig& cfg) {
  return {{"M", cfg.M},
          {"N", cfg.N},
          {"q", cfg.q},
          {"max_degree", cfg.max_degree},
          {"box", cfg.box},
          {"samples", cfg.samples},
          {"seed", cfg.seed}};
}

CheckConfig decode_check_config(const json& j) {
  CheckConfig cfg;
  cfg.M = j.at("M").get<int>();
  cfg.N = j.at("N").get<int>();
  cfg.q = j.value("q", 1);
  cfg.max_degree = j.value("max_degree", cfg.max_degree);
  cfg.box = j.value("box", cfg.box);
  cfg.samples = j.value("samples", cfg.samples);
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("families")) cfg.families = j.at("families").get<std::vector<std::string>>();
  return cfg;
}

json CheckReport::to_json(bool include_timings) const {
  json fams = json::array();
  for (const auto& f : families) {
    json clauses = json::array();
    for (const auto& c : f.clauses) {
      json cj = {{"clause", c.clause}, {"hits", c.hits},     {"passed", c.passed},
                 {"failed", c.failed}, {"adjudicated", c.adjudicated}};
      if (!c.adjudication.empty()) cj["adjudication"] = c.adjudication;
      cj["counterexample"] = c.counterexample;
      clauses.push_back(std::move(cj));
    }
    json fj = {{"family", f.family}, {"passed", f.passed}, {"clauses", std::move(clauses)}};
    if (include_timings) fj["elapsed_ms"] = f.elapsed_ms;
    fams.push_back(std::move(fj));
  }
  json cfg = encode(config);
  cfg["families"] = config.families;
  return {{"config", cfg}, {"families", std::move(fams)}, {"passed", passed}};
}

ReplayResult replay(const json& counterexample) {
  ReplayResult r;
  r.family = counterexample.at("family").get<std::string>();
  r.clause = counterexample.at("clause").get<std::string>();
  const auto cfg = decode_check_config(counterexample.at("config"));
  cfg.rep().validate();
  const auto fam = detail::make_family(r.family, cfg);
  const json stored = counterexample.value("detail", json());
  std::vector<detail::Outcome> outcomes;
  try {
    outcomes = fam->evaluate(counterexample.at("item"));
  } catch (const std::exception& e) {
    r.found = r.clause == "error";
    r.detail = {{"message", e.what()}};
    r.reproduced = r.found && r.detail == stored;
    return r;
  }
  r.passed = true;
  bool have_detail = false;
  for (const auto& o : outcomes) {
    if (o.clause != r.clause) continue;
    r.found = true;
    if (o.status != detail::Status::pass) {
      r.passed = false;
      if (!have_detail) {
        r.detail = o.detail;
        have_detail = true;
      }
    }
  }
  if (!r.found) r.passed = false;
  r.reproduced = have_detail && r.detail == stored;
  return r;
}

}  // namespace torvo
