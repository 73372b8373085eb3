#include <torvo/codec.hpp>
#include <torvo/verifier.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace torvo;

// an argument is either inline JSON or a path to a JSON file
json load_json(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open " + arg);
    return json::parse(in);
  }
  return json::parse(arg);
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << "\n";
}

void print_summary(const CheckReport& report) {
  for (const auto& f : report.families) {
    std::cout << (f.passed ? "PASS " : "FAIL ") << f.family << "\n";
    for (const auto& c : f.clauses) {
      std::cout << "  " << c.clause << ": " << c.passed << "/" << c.hits << " passed";
      if (c.failed) std::cout << ", " << c.failed << " failed";
      if (c.adjudicated) std::cout << ", " << c.adjudicated << " adjudicated";
      if (c.hits == 0) std::cout << " (no coverage)";
      std::cout << "\n";
    }
  }
  std::cout << (report.passed ? "all checks passed" : "some checks failed") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact vertex-operator representation engine"};
  app.require_subcommand(1);

  CheckConfig check_cfg;
  std::string report_path;
  auto* check = app.add_subcommand("check", "run verification families");
  check->add_option("--family", check_cfg.families, "family ids")->required();
  check->add_option("--M", check_cfg.M)->required();
  check->add_option("--N", check_cfg.N)->required();
  check->add_option("--q", check_cfg.q)->required();
  check->add_option("--max-degree", check_cfg.max_degree)->required();
  check->add_option("--box", check_cfg.box)->required();
  check->add_option("--samples", check_cfg.samples)->required();
  check->add_option("--seed", check_cfg.seed)->required();
  check->add_option("--jobs", check_cfg.jobs);
  check->add_option("--report", report_path, "write the JSON report here");

  std::string op_arg, state_arg, out_path;
  auto* act = app.add_subcommand("act", "apply an operator to a state");
  act->add_option("--op", op_arg, "operator JSON or file")->required();
  act->add_option("--state", state_arg, "state file with config and terms")->required();
  act->add_option("--out", out_path);

  std::string x_arg, y_arg;
  RepConfig br_cfg;
  auto* br = app.add_subcommand("bracket", "bracket two toroidal elements");
  br->add_option("--x", x_arg)->required();
  br->add_option("--y", y_arg)->required();
  br->add_option("--M", br_cfg.M)->required();
  br->add_option("--N", br_cfg.N)->required();
  br->add_option("--q", br_cfg.q)->required();

  GlConfig gl_cfg;
  auto* ex = app.add_subcommand("export-constants", "write gl(M|N) structure constants and form");
  ex->add_option("--M", gl_cfg.M)->required();
  ex->add_option("--N", gl_cfg.N)->required();
  ex->add_option("--out", out_path);

  std::string cx_path;
  auto* rp = app.add_subcommand("replay", "re-run a recorded counterexample");
  rp->add_option("--counterexample", cx_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      const auto report = run_check(check_cfg);
      print_summary(report);
      if (!report_path.empty()) emit(report.to_json(), report_path);
      return report.passed ? 0 : 1;
    }
    if (*act) {
      const json state_file = load_json(state_arg);
      const auto cfg = codec::decode_config(state_file.at("config"));
      const Representation rep(cfg);
      const auto s = codec::decode_tensor_state(state_file.at("state"), cfg);
      rep.validate(s);
      const auto a = codec::decode_operator(load_json(op_arg), cfg);
      emit({{"config", codec::encode(cfg)}, {"state", codec::encode(rep.apply(a, s))}}, out_path);
      return 0;
    }
    if (*br) {
      br_cfg.validate();
      const auto tc = br_cfg.toroidal();
      const auto x = codec::decode_toroidal(load_json(x_arg), tc);
      const auto y = codec::decode_toroidal(load_json(y_arg), tc);
      std::cout << codec::encode(bracket_toroidal(tc, x, y)).dump(2) << "\n";
      return 0;
    }
    if (*ex) {
      gl_cfg.validate();
      json brackets = json::array(), forms = json::array();
      for (const auto& x : gl_basis(gl_cfg))
        for (const auto& y : gl_basis(gl_cfg)) {
          const auto b = bracket_T(gl_cfg, x, y);
          if (!b.empty())
            brackets.push_back({{"x", {x.i, x.j}}, {"y", {y.i, y.j}}, {"result", codec::encode(b)}});
          const auto f = form_T(gl_cfg, x, y);
          if (!is_zero(f)) forms.push_back({{"x", {x.i, x.j}}, {"y", {y.i, y.j}}, {"value", codec::encode(f)}});
        }
      emit({{"M", gl_cfg.M}, {"N", gl_cfg.N}, {"brackets", brackets}, {"form", forms}}, out_path);
      return 0;
    }
    if (*rp) {
      const auto r = replay(load_json(cx_path));
      json out = {{"family", r.family}, {"clause", r.clause}, {"found", r.found},
                  {"passed", r.passed}, {"reproduced", r.reproduced}, {"detail", r.detail}};
      std::cout << out.dump(2) << "\n";
      return r.passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
