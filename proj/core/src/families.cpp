#include "families.hpp"

#include <torvo/clause_tables.hpp>
#include <torvo/codec.hpp>
#include <torvo/rng.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace torvo::detail {

using nlohmann::json;

std::uint64_t stream_id(const std::string& family, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : family) h = (h ^ c) * 1099511628211ULL;
  h ^= a * 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 29)) * 0xbf58476d1ce4e5b9ULL;
  h ^= b * 0xd6e8feb86659fd93ULL;
  return h ^ (h >> 32);
}

namespace {

constexpr std::size_t kChunk = 256;

Outcome verdict(std::string clause, bool ok, const std::function<json()>& detail) {
  Outcome o{std::move(clause), ok ? Status::pass : Status::fail, nullptr};
  if (!ok) o.detail = detail();
  return o;
}

std::vector<std::int64_t> random_exponent(Rng& rng, int len, int box) {
  std::vector<std::int64_t> v(len);
  for (auto& x : v) x = rng.uniform(-box, box);
  return v;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int k = 0; k < e; ++k) {
    if (r > (std::int64_t{1} << 40)) return std::int64_t{1} << 50;
    r *= b;
  }
  return r;
}

std::uint64_t item_seed(const json& item) { return item.at("stream").get<std::uint64_t>(); }

// ---------------------------------------------------------------- cocycle

class CocycleFamily final : public Family {
 public:
  explicit CocycleFamily(const CheckConfig& cfg) : cfg_(cfg), lat_{cfg.M, cfg.q} {
    dims_ = cfg.M + cfg.q - 1;
    side_ = 2 * cfg.box + 1;
    count_ = ipow(side_, dims_);
    pairs_exhaustive_ = count_ * count_ <= 1000000;
    triples_exhaustive_ = count_ * count_ * count_ <= 1000000;
    pair_items_ = pairs_exhaustive_ ? count_ : (std::max<std::int64_t>(10000, cfg.samples) + kChunk - 1) / kChunk;
    triple_items_ = triples_exhaustive_ ? count_
                                        : (std::max<std::int64_t>(10000, cfg.samples) + kChunk - 1) / kChunk;
  }

  std::vector<std::string> clauses() const override {
    return {"basis-table", "sign-law", "identity", "bimultiplicative-left", "bimultiplicative-right"};
  }

  std::size_t size() const override { return 1 + pair_items_ + triple_items_; }

  json item(std::size_t index) const override {
    if (index == 0) return {{"kind", "basis"}};
    index -= 1;
    if (index < static_cast<std::size_t>(pair_items_)) {
      if (pairs_exhaustive_) return {{"kind", "pairs"}, {"alpha", codec::encode(vec(index))}};
      return {{"kind", "random-pairs"}, {"stream", stream_id("cocycle-pairs", cfg_.seed, index)}};
    }
    index -= pair_items_;
    if (triples_exhaustive_) return {{"kind", "triples"}, {"alpha", codec::encode(vec(index))}};
    return {{"kind", "random-triples"}, {"stream", stream_id("cocycle-triples", cfg_.seed, index)}};
  }

  std::vector<Outcome> evaluate(const json& item) const override {
    std::vector<Outcome> out;
    const auto kind = item.at("kind").get<std::string>();
    if (kind == "basis") {
      for (int i = 0; i < lat_.M + lat_.extra(); ++i)
        for (int j = 0; j < lat_.M + lat_.extra(); ++j) {
          const int expected = (i < lat_.M && j < lat_.M && i > j) ? -1 : 1;
          const int got = cocycle(LatticeVector::basis(lat_, q_index(i)), LatticeVector::basis(lat_, q_index(j)));
          out.push_back(verdict("basis-table", got == expected, [&] {
            return json{{"i", i}, {"j", j}, {"lhs", got}, {"rhs", expected}};
          }));
        }
    } else if (kind == "pairs" || kind == "random-pairs") {
      auto check = [&](const LatticeVector& a, const LatticeVector& b) {
        const int lhs = cocycle(a, b) * cocycle(b, a);
        const std::int64_t e = bilinear(a, b) + bilinear(a, a) * bilinear(b, b);
        const int rhs = (e % 2 == 0) ? 1 : -1;
        out.push_back(verdict("sign-law", lhs == rhs, [&] {
          return json{{"alpha", codec::encode(a)}, {"beta", codec::encode(b)}, {"lhs", lhs}, {"rhs", rhs}};
        }));
      };
      if (kind == "pairs") {
        const auto a = codec::decode_lattice_vector(item.at("alpha"), lat_);
        for (std::int64_t k = 0; k < count_; ++k) check(a, vec(k));
      } else {
        Rng rng(item_seed(item));
        for (std::size_t t = 0; t < kChunk; ++t) check(random_vec(rng), random_vec(rng));
      }
    } else {
      auto check = [&](const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
        auto describe = [&](int lhs, int rhs) {
          return json{{"alpha", codec::encode(a)}, {"beta", codec::encode(b)}, {"gamma", codec::encode(c)},
                      {"lhs", lhs}, {"rhs", rhs}};
        };
        int lhs = cocycle(a, b) * cocycle(a + b, c), rhs = cocycle(b, c) * cocycle(a, b + c);
        out.push_back(verdict("identity", lhs == rhs, [&] { return describe(lhs, rhs); }));
        lhs = cocycle(a + b, c);
        rhs = cocycle(a, c) * cocycle(b, c);
        out.push_back(verdict("bimultiplicative-left", lhs == rhs, [&] { return describe(lhs, rhs); }));
        lhs = cocycle(a, b + c);
        rhs = cocycle(a, b) * cocycle(a, c);
        out.push_back(verdict("bimultiplicative-right", lhs == rhs, [&] { return describe(lhs, rhs); }));
      };
      if (kind == "triples") {
        const auto a = codec::decode_lattice_vector(item.at("alpha"), lat_);
        for (std::int64_t k = 0; k < count_; ++k)
          for (std::int64_t l = 0; l < count_; ++l) check(a, vec(k), vec(l));
      } else {
        Rng rng(item_seed(item));
        for (std::size_t t = 0; t < kChunk; ++t) {
          auto a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
          check(a, b, c);
        }
      }
    }
    return out;
  }

 private:
  int q_index(int k) const { return k; }  // Q coordinates come first in the basis order

  LatticeVector vec(std::int64_t index) const {
    LatticeVector v(lat_);
    for (int k = 0; k < dims_; ++k) {
      v[k] = index % side_ - cfg_.box;
      index /= side_;
    }
    return v;
  }

  LatticeVector random_vec(Rng& rng) const {
    LatticeVector v(lat_);
    for (int k = 0; k < dims_; ++k) v[k] = rng.uniform(-cfg_.box, cfg_.box);
    return v;
  }

  CheckConfig cfg_;
  LatticeConfig lat_;
  int dims_ = 0;
  std::int64_t side_ = 0, count_ = 0, pair_items_ = 0, triple_items_ = 0;
  bool pairs_exhaustive_ = false, triples_exhaustive_ = false;
};

// ---------------------------------------------------------------- gl(M|N) bracket and form

json symbol_json(const BasisSymbol& x) { return json::array({x.i, x.j}); }
BasisSymbol symbol_of(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

class GlFamily : public Family {
 public:
  explicit GlFamily(const CheckConfig& cfg) : cfg_(cfg), gl_{cfg.M, cfg.N}, basis_(gl_basis(gl_)) {
    b_ = basis_.size();
    triples_exhaustive_ = b_ * b_ * b_ <= 100000;
    triple_items_ = triples_exhaustive_ ? b_ * b_
                                        : (std::max<std::size_t>(10000, cfg.samples) + kChunk - 1) / kChunk;
  }

  std::size_t size() const override { return b_ + triple_items_; }

  json item(std::size_t index) const override {
    if (index < b_) return {{"kind", "pairs"}, {"x", symbol_json(basis_[index])}};
    index -= b_;
    if (triples_exhaustive_)
      return {{"kind", "triples"}, {"x", symbol_json(basis_[index / b_])}, {"y", symbol_json(basis_[index % b_])}};
    return {{"kind", "random-triples"}, {"stream", stream_id("gl-triples", cfg_.seed, index)}};
  }

  std::vector<Outcome> evaluate(const json& item) const override {
    std::vector<Outcome> out;
    const auto kind = item.at("kind").get<std::string>();
    if (kind == "pairs") {
      const auto x = symbol_of(item.at("x"));
      for (const auto& y : basis_) pair_check(x, y, out);
    } else if (kind == "triples") {
      const auto x = symbol_of(item.at("x")), y = symbol_of(item.at("y"));
      for (const auto& z : basis_) triple_check(x, y, z, out);
    } else {
      Rng rng(item_seed(item));
      for (std::size_t t = 0; t < kChunk; ++t) {
        const auto& x = basis_[rng.uniform(0, b_ - 1)];
        const auto& y = basis_[rng.uniform(0, b_ - 1)];
        const auto& z = basis_[rng.uniform(0, b_ - 1)];
        triple_check(x, y, z, out);
      }
    }
    return out;
  }

 protected:
  virtual void pair_check(const BasisSymbol& x, const BasisSymbol& y, std::vector<Outcome>& out) const = 0;
  virtual void triple_check(const BasisSymbol& x, const BasisSymbol& y, const BasisSymbol& z,
                            std::vector<Outcome>& out) const = 0;

  json triple_json(const BasisSymbol& x, const BasisSymbol& y, const BasisSymbol& z) const {
    return {{"x", symbol_json(x)}, {"y", symbol_json(y)}, {"z", symbol_json(z)}};
  }

  CheckConfig cfg_;
  GlConfig gl_;
  std::vector<BasisSymbol> basis_;
  std::size_t b_ = 0, triple_items_ = 0;
  bool triples_exhaustive_ = false;
};

class JacobiFamily final : public GlFamily {
 public:
  using GlFamily::GlFamily;

  std::vector<std::string> clauses() const override {
    std::vector<std::string> c;
    for (int k = 1; k <= 10; ++k) c.push_back("T" + std::to_string(k));
    c.push_back("supertrace");
    c.push_back("super-jacobi");
    return c;
  }

 protected:
  void pair_check(const BasisSymbol& x, const BasisSymbol& y, std::vector<Outcome>& out) const override {
    const auto lhs = bracket_T(gl_, x, y);
    auto rhs = bracket_T(gl_, y, x);
    rhs *= Scalar((parity(gl_, x) & parity(gl_, y)) ? 1 : -1);
    out.push_back(verdict("T" + std::to_string(bracket_clause(gl_, x, y)), lhs == rhs, [&] {
      return json{{"x", symbol_json(x)}, {"y", symbol_json(y)}, {"lhs", codec::encode(lhs)}, {"rhs", codec::encode(rhs)}};
    }));
    const auto st = supertrace(gl_, lhs);
    out.push_back(verdict("supertrace", is_zero(st), [&] {
      return json{{"x", symbol_json(x)}, {"y", symbol_json(y)}, {"lhs", codec::encode(st)}, {"rhs", "0"}};
    }));
  }

  void triple_check(const BasisSymbol& x, const BasisSymbol& y, const BasisSymbol& z,
                    std::vector<Outcome>& out) const override {
    const GlElement X(x, Scalar(1)), Y(y, Scalar(1)), Z(z, Scalar(1));
    const auto lhs = bracket(gl_, bracket(gl_, X, Y), Z);
    auto rhs = bracket(gl_, X, bracket(gl_, Y, Z));
    const int sign = (parity(gl_, x) & parity(gl_, y)) ? -1 : 1;
    rhs.add_scaled(bracket(gl_, Y, bracket(gl_, X, Z)), Scalar(-sign));
    out.push_back(verdict("super-jacobi", lhs == rhs, [&] {
      auto d = triple_json(x, y, z);
      d["lhs"] = codec::encode(lhs);
      d["rhs"] = codec::encode(rhs);
      return d;
    }));
  }
};

class FormFamily final : public GlFamily {
 public:
  using GlFamily::GlFamily;

  std::vector<std::string> clauses() const override { return {"supersymmetry", "evenness", "invariance"}; }

 protected:
  void pair_check(const BasisSymbol& x, const BasisSymbol& y, std::vector<Outcome>& out) const override {
    const auto lhs = form_T(gl_, x, y);
    const Scalar rhs = form_T(gl_, y, x) * ((parity(gl_, x) & parity(gl_, y)) ? -1 : 1);
    auto describe = [&](const Scalar& a, const Scalar& b) {
      return json{{"x", symbol_json(x)}, {"y", symbol_json(y)}, {"lhs", codec::encode(a)}, {"rhs", codec::encode(b)}};
    };
    out.push_back(verdict("supersymmetry", lhs == rhs, [&] { return describe(lhs, rhs); }));
    if (parity(gl_, x) != parity(gl_, y))
      out.push_back(verdict("evenness", is_zero(lhs), [&] { return describe(lhs, Scalar(0)); }));
  }

  void triple_check(const BasisSymbol& x, const BasisSymbol& y, const BasisSymbol& z,
                    std::vector<Outcome>& out) const override {
    const GlElement X(x, Scalar(1)), Y(y, Scalar(1)), Z(z, Scalar(1));
    const auto lhs = form(gl_, bracket(gl_, X, Y), Z);
    const auto rhs = form(gl_, X, bracket(gl_, Y, Z));
    out.push_back(verdict("invariance", lhs == rhs, [&] {
      auto d = triple_json(x, y, z);
      d["lhs"] = codec::encode(lhs);
      d["rhs"] = codec::encode(rhs);
      return d;
    }));
  }
};

// ---------------------------------------------------------------- printed tables

std::string table_prefix(bool toroidal) { return toroidal ? "ST" : "R"; }

class TableFamily final : public Family {
 public:
  TableFamily(const CheckConfig& cfg, bool toroidal)
      : cfg_(cfg), toroidal_(toroidal), tcfg_{{cfg.M, cfg.N}, toroidal ? cfg.q : 1} {
    for (std::size_t c = 0; c < table_clauses().size(); ++c)
      for (const auto& t : table_clauses()[c].tuples(tcfg_.gl)) items_.push_back({c, t});
  }

  std::vector<std::string> clauses() const override {
    std::vector<std::string> out;
    for (const auto& c : table_clauses()) out.push_back(table_prefix(toroidal_) + c.id);
    return out;
  }

  std::size_t size() const override { return items_.size(); }

  json item(std::size_t index) const override {
    const auto& [c, t] = items_[index];
    Rng rng = Rng::derive(cfg_.seed, stream_id(table_prefix(toroidal_) + "-table", c, index));
    json pairs = json::array();
    for (int p = 0; p < 5; ++p) {
      auto m = random_exponent(rng, tcfg_.q, cfg_.box);
      auto n = random_exponent(rng, tcfg_.q, cfg_.box);
      if (p % 2 == 0)
        for (int k = 0; k < tcfg_.q; ++k) n[k] = -m[k];
      pairs.push_back({{"m", m}, {"n", n}});
    }
    return {{"clause", table_clauses()[c].id}, {"tuple", {t.i, t.j, t.k, t.l}}, {"pairs", pairs}};
  }

  std::vector<Outcome> evaluate(const json& item) const override {
    const auto& clause = table_clause(item.at("clause").get<std::string>());
    const auto& tj = item.at("tuple");
    if (tj.is_null()) return {};
    const IndexTuple t{tj.at(0).get<int>(), tj.at(1).get<int>(), tj.at(2).get<int>(), tj.at(3).get<int>()};
    const std::string id = table_prefix(toroidal_) + clause.id;
    std::vector<Outcome> out;
    for (const auto& p : item.at("pairs")) {
      const auto m = p.at("m").get<std::vector<std::int64_t>>(), n = p.at("n").get<std::vector<std::int64_t>>();
      const auto inst = clause.instantiate(tcfg_, t, m, n, toroidal_);
      const auto generic = bracket_toroidal(tcfg_, inst.x, inst.y);
      Outcome o{id, Status::pass, nullptr};
      if (!(generic == inst.printed)) {
        o.status = known_misprint(id) ? Status::adjudicated : Status::fail;
        o.detail = {{"m", m}, {"n", n}, {"x", codec::encode(inst.x)}, {"y", codec::encode(inst.y)},
                    {"printed", codec::encode(inst.printed)}, {"generic", codec::encode(generic)}};
      }
      out.push_back(std::move(o));
    }
    return out;
  }

  std::string adjudication(const std::string& clause) const override {
    return known_misprint(clause).value_or("");
  }

 private:
  CheckConfig cfg_;
  bool toroidal_;
  ToroidalConfig tcfg_;
  std::vector<std::pair<std::size_t, IndexTuple>> items_;
};

// ---------------------------------------------------------------- representation checks

json state_json(const TensorState& s) { return codec::encode(s); }

class StateFamily : public Family {
 public:
  StateFamily(const CheckConfig& cfg, std::string id, int q)
      : cfg_(cfg), id_(std::move(id)), rcfg_{cfg.M, cfg.N, q}, rep_(rcfg_) {
    cfg_.q = q;
  }

 protected:
  TensorState state_for(std::uint64_t clause, std::uint64_t sample) const {
    return gen_state(cfg_, stream_id(id_ + "-state", clause, sample));
  }
  Rng rng_for(std::uint64_t clause, std::uint64_t sample) const {
    return Rng::derive(cfg_.seed, stream_id(id_, clause, sample));
  }
  TensorState decode_state(const json& item) const { return codec::decode_tensor_state(item.at("state"), rcfg_); }

  Outcome compare(std::string clause, const TensorState& lhs, const TensorState& rhs) const {
    return verdict(std::move(clause), lhs == rhs, [&] {
      return json{{"lhs", state_json(lhs)}, {"rhs", state_json(rhs)}};
    });
  }

  LatticeVector e(int i) const { return LatticeVector::unit_e(rcfg_.lattice(), i); }

  LatticeVector random_q(Rng& rng) const {
    LatticeVector v(rcfg_.lattice());
    for (int k = 0; k < rcfg_.M + rcfg_.q - 1; ++k) v[k] = rng.uniform(-cfg_.box, cfg_.box);
    return v;
  }

  LatticeVector random_full(Rng& rng) const {
    LatticeVector v(rcfg_.lattice());
    for (int k = 0; k < v.rank(); ++k) v[k] = rng.uniform(-cfg_.box, cfg_.box);
    return v;
  }

  std::int64_t lattice_bound(const LatticeVector& a, const TensorState& s) const {
    std::int64_t b = kNoBound;
    for (const auto& [k, c] : s) b = std::max(b, vanishing_bound(a, k.lattice));
    return b;
  }

  CheckConfig cfg_;
  std::string id_;
  RepConfig rcfg_;
  Representation rep_;
};

// commutator checks against the bracket, clause by clause
class HomomorphismFamily final : public StateFamily {
 public:
  HomomorphismFamily(const CheckConfig& cfg, bool toroidal)
      : StateFamily(cfg, toroidal ? "thm46" : "prop33", toroidal ? cfg.q : 1), toroidal_(toroidal) {
    const auto& all = table_clauses();
    for (std::size_t c = 0; c < all.size(); ++c) {
      std::map<int, std::vector<IndexTuple>> groups;
      for (const auto& t : all[c].tuples(rcfg_.gl())) groups[pattern(t)].push_back(t);
      std::vector<std::vector<IndexTuple>> g;
      for (auto& [k, v] : groups) g.push_back(std::move(v));
      patterns_.push_back(std::move(g));
    }
    extras_ = toroidal ? std::vector<std::string>{"K_q-identity", "central-witness", "central-image",
                                                  "central-image-printed"}
                       : std::vector<std::string>{};
    for (int dir = 1; dir <= rcfg_.q; ++dir)
      for (int k = 0; k < 10; ++k) witness_.push_back(dir);
  }

  std::vector<std::string> clauses() const override {
    std::vector<std::string> out;
    for (const auto& c : table_clauses()) out.push_back(table_prefix(toroidal_) + c.id);
    out.insert(out.end(), extras_.begin(), extras_.end());
    return out;
  }

  std::size_t size() const override {
    std::size_t n = table_clauses().size() * cfg_.samples;
    if (toroidal_) n += 3 * cfg_.samples + witness_.size();
    return n;
  }

  json item(std::size_t index) const override {
    const std::size_t per = cfg_.samples;
    const std::size_t table_items = table_clauses().size() * per;
    if (index < table_items) {
      const std::size_t c = index / per, s = index % per;
      auto rng = rng_for(c, s);
      const auto& groups = patterns_[c];
      if (groups.empty()) return {{"clause", table_prefix(toroidal_) + table_clauses()[c].id}, {"tuple", nullptr}};
      const auto& group = groups[s % groups.size()];
      const auto& t = group[rng.uniform(0, group.size() - 1)];
      auto m = random_exponent(rng, rcfg_.q, cfg_.box);
      auto n = random_exponent(rng, rcfg_.q, cfg_.box);
      if (rng.coin())
        for (int k = 0; k < rcfg_.q; ++k) n[k] = -m[k];
      return {{"clause", table_prefix(toroidal_) + table_clauses()[c].id},
              {"tuple", {t.i, t.j, t.k, t.l}},
              {"m", m},
              {"n", n},
              {"state", state_json(state_for(c, s))}};
    }
    index -= table_items;
    if (index < witness_.size()) {
      const int dir = witness_[index];
      auto rng = rng_for(1000 + dir, index);
      // canonical directions only: the pivot direction of a nonzero exponent is not a basis element
      std::vector<std::int64_t> m(rcfg_.q, 0);
      if (index % 10 != 0) {
        do {
          m = random_exponent(rng, rcfg_.q, cfg_.box);
        } while (pivot(m) == dir);
      }
      return {{"clause", "central-witness"}, {"exponent", m}, {"direction", dir}, {"index", index}};
    }
    index -= witness_.size();
    const std::size_t kind = index / per, s = index % per;
    static const char* names[] = {"K_q-identity", "central-image", "central-image-printed"};
    auto rng = rng_for(2000 + kind, s);
    json j = {{"clause", names[kind]}, {"state", state_json(state_for(2000 + kind, s))}};
    if (kind > 0) {
      j["m"] = random_exponent(rng, rcfg_.q, cfg_.box);
      j["n"] = random_exponent(rng, rcfg_.q, cfg_.box);
    }
    return j;
  }

  std::vector<Outcome> evaluate(const json& item) const override {
    const auto clause = item.at("clause").get<std::string>();
    if (clause == "central-witness") return {witness(item)};
    if (clause == "K_q-identity") {
      const auto s = decode_state(item);
      std::vector<std::int64_t> zero(rcfg_.q, 0);
      return {compare(clause, rep_.apply(op::Central{zero, rcfg_.q}, s), s)};
    }
    if (clause == "central-image" || clause == "central-image-printed") return {central_image(item, clause)};

    const auto& tc = table_clause(clause.substr(table_prefix(toroidal_).size()));
    const auto& tj = item.at("tuple");
    if (tj.is_null()) return {};
    const IndexTuple t{tj.at(0).get<int>(), tj.at(1).get<int>(), tj.at(2).get<int>(), tj.at(3).get<int>()};
    const auto m = item.at("m").get<std::vector<std::int64_t>>(), n = item.at("n").get<std::vector<std::int64_t>>();
    const auto inst = tc.instantiate(rcfg_.toroidal(), t, m, n, toroidal_);
    const auto s = decode_state(item);
    const auto lhs = rep_.super_commutator(rep_.rho(inst.x), rep_.rho(inst.y), s);
    const auto rhs = rep_.apply(rep_.rho(bracket_toroidal(rcfg_.toroidal(), inst.x, inst.y)), s);
    return {compare(clause, lhs, rhs)};
  }

  std::string adjudication(const std::string& clause) const override {
    if (clause == "central-image-printed")
      return "the printed image of d(t^m)t^n exchanges the roles of X and T^{δ_m}; the generator-wise "
             "central images agree with the corrected form T^{δ_m}_N(δ_{m+n}) + m_q X_N(δ_{m+n})";
    return {};
  }

 private:
  static int pattern(const IndexTuple& t) {
    const int v[4] = {t.i, t.j, t.k, t.l};
    int mask = 0, bit = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b, ++bit)
        if (v[a] == v[b]) mask |= 1 << bit;
    return mask;
  }

  static int pivot(const std::vector<std::int64_t>& m) {
    for (int p = static_cast<int>(m.size()) - 1; p >= 0; --p)
      if (m[p] != 0) return p + 1;
    return 0;
  }

  Outcome witness(const json& item) const {
    const auto m = item.at("exponent").get<std::vector<std::int64_t>>();
    const int dir = item.at("direction").get<int>();
    const auto index = item.at("index").get<std::uint64_t>();
    const RepOperator a = op::Central{m, dir};
    const auto lat = rcfg_.lattice();
    std::vector<TensorState> candidates;
    const int n = static_cast<int>(std::max<std::int64_t>(1, std::abs(m.back())));
    candidates.emplace_back(TensorKey{{LatticeVector(lat), {}}, {}}, Scalar(1));
    if (dir < rcfg_.q) {
      const auto d = LatticeVector::unit_d(lat, dir);
      candidates.emplace_back(TensorKey{{d, {}}, {}}, Scalar(1));
      candidates.emplace_back(TensorKey{{LatticeVector(lat), CreationMonomial::single(lat.d_index(dir), n)}, {}},
                              Scalar(1));
      candidates.emplace_back(TensorKey{{d, CreationMonomial::single(lat.d_index(dir), n)}, {}}, Scalar(1));
    }
    for (int k = 0; k < 20; ++k) candidates.push_back(state_for(3000 + index, k));
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (!rep_.apply(a, candidates[k]).empty()) return {"central-witness", Status::pass, nullptr};
    return {"central-witness", Status::fail, json{{"exponent", m}, {"direction", dir}, {"lhs", "all candidates annihilated"}}};
  }

  Outcome central_image(const json& item, const std::string& clause) const {
    const auto m = item.at("m").get<std::vector<std::int64_t>>(), n = item.at("n").get<std::vector<std::int64_t>>();
    const auto s = decode_state(item);
    const int q = rcfg_.q;
    std::vector<std::int64_t> sum(q);
    for (int k = 0; k < q; ++k) sum[k] = m[k] + n[k];
    // Σ_i m_i ρ(t^{m+n} K_i), without reducing modulo exact forms
    TensorState generatorwise;
    for (int i = 1; i <= q; ++i)
      generatorwise.add_scaled(rep_.apply(op::Central{sum, i}, s), Scalar(m[i - 1]));
    const std::vector<std::int64_t> m_low(m.begin(), m.end() - 1), sum_low(sum.begin(), sum.end() - 1);
    const auto delta_m = LatticeVector::delta_of(rcfg_.lattice(), m_low);
    const auto delta_sum = LatticeVector::delta_of(rcfg_.lattice(), sum_low);
    const RepOperator T = op::Diagonal{delta_m, sum_low, sum.back()};
    const RepOperator X = op::Vertex{delta_sum, 2 * sum.back()};
    if (clause == "central-image") {
      auto closed = rep_.apply(T, s);
      closed.add_scaled(rep_.apply(X, s), Scalar(m.back()));
      const auto reduced = rep_.apply(rep_.rho(central_cocycle(m, n)), s);
      const bool ok = generatorwise == closed && generatorwise == reduced;
      return verdict(clause, ok, [&] {
        return json{{"lhs", state_json(generatorwise)}, {"rhs", state_json(closed)}, {"reduced", state_json(reduced)}};
      });
    }
    auto printed = rep_.apply(X, s);
    printed.add_scaled(rep_.apply(T, s), Scalar(m.back()));
    Outcome o{clause, Status::pass, nullptr};
    if (!(printed == generatorwise)) {
      o.status = Status::adjudicated;
      o.detail = {{"lhs", state_json(generatorwise)}, {"rhs", state_json(printed)}};
    }
    return o;
  }

  bool toroidal_;
  std::vector<std::vector<std::vector<IndexTuple>>> patterns_;
  std::vector<std::string> extras_;
  std::vector<int> witness_;
};

// a family whose items are (clause, sample) pairs with a random state
class SampledFamily : public StateFamily {
 public:
  SampledFamily(const CheckConfig& cfg, std::string id, std::vector<std::string> names)
      : StateFamily(cfg, std::move(id), cfg.q), names_(std::move(names)) {}

  std::vector<std::string> clauses() const override { return names_; }
  std::size_t size() const override { return names_.size() * cfg_.samples; }

  json item(std::size_t index) const override {
    const std::size_t c = index / cfg_.samples, s = index % cfg_.samples;
    auto rng = rng_for(c, s);
    json j = {{"clause", names_[c]}, {"state", state_json(state_for(c, s))}};
    j["params"] = params(names_[c], rng);
    return j;
  }

  std::vector<Outcome> evaluate(const json& item) const override {
    const auto clause = item.at("clause").get<std::string>();
    const auto s = decode_state(item);
    auto [lhs, rhs] = sides(clause, item.at("params"), s);
    return {compare(clause, lhs, rhs)};
  }

 protected:
  virtual json params(const std::string& clause, Rng& rng) const = 0;
  virtual std::pair<TensorState, TensorState> sides(const std::string& clause, const json& p,
                                                    const TensorState& s) const = 0;

  json vec_json(const LatticeVector& v) const { return codec::encode(v); }
  LatticeVector vec(const json& j) const { return codec::decode_lattice_vector(j, rcfg_.lattice()); }

  std::vector<std::string> names_;
};

class CentralRelationFamily final : public SampledFamily {
 public:
  explicit CentralRelationFamily(const CheckConfig& cfg) : SampledFamily(cfg, "lemma49", {"lemma4.9"}) {}

 protected:
  json params(const std::string&, Rng& rng) const override {
    return {{"m", random_exponent(rng, rcfg_.q - 1, cfg_.box)}, {"n", rng.uniform(-cfg_.box, cfg_.box)}};
  }
  std::pair<TensorState, TensorState> sides(const std::string&, const json& p, const TensorState& s) const override {
    const auto m = p.at("m").get<std::vector<std::int64_t>>();
    const auto n = p.at("n").get<std::int64_t>();
    const auto delta = LatticeVector::delta_of(rcfg_.lattice(), m);
    auto lhs = rep_.apply(op::Diagonal{delta, m, n}, s);
    lhs.add_scaled(rep_.apply(op::Vertex{delta, 2 * n}, s), Scalar(n));
    return {lhs, TensorState{}};
  }
};

class BosonFamily final : public SampledFamily {
 public:
  explicit BosonFamily(const CheckConfig& cfg) : SampledFamily(cfg, "boson", {"3.1(1)", "3.1(2)", "3.1(3)"}) {}

 protected:
  json params(const std::string&, Rng& rng) const override {
    const int hi = cfg_.max_degree / 2 + 1;
    return {{"i", rng.uniform(1, rcfg_.N)}, {"j", rng.uniform(1, rcfg_.N)},
            {"r", rng.uniform(-hi, hi)}, {"s", rng.uniform(-hi, hi)}};
  }
  std::pair<TensorState, TensorState> sides(const std::string& clause, const json& p,
                                            const TensorState& s) const override {
    const int i = p.at("i"), j = p.at("j");
    const std::int64_t r = p.at("r"), t = p.at("s");
    if (clause == "3.1(1)") return {rep_.super_commutator(op::Phi{i, r}, op::Phi{j, t}, s), {}};
    if (clause == "3.1(2)") return {rep_.super_commutator(op::PhiStar{i, r}, op::PhiStar{j, t}, s), {}};
    TensorState rhs = s;
    rhs *= Scalar((r + t - 1 == 0 && i == j) ? -1 : 0);
    return {rep_.super_commutator(op::Phi{i, r}, op::PhiStar{j, t}, s), rhs};
  }
};

class VertexCommutatorFamily final : public SampledFamily {
 public:
  explicit VertexCommutatorFamily(const CheckConfig& cfg)
      : SampledFamily(cfg, "corollary19", {"1.9(1)", "1.9(2)", "1.9(3)"}) {}

 protected:
  json params(const std::string& clause, Rng& rng) const override {
    const int M = rcfg_.M;
    json p = {{"m", rng.uniform(-cfg_.box, cfg_.box)}, {"n", rng.uniform(-cfg_.box, cfg_.box)}};
    if (clause == "1.9(1)") {
      p["i"] = rng.uniform(1, M);
      if (M >= 2) {
        int j = rng.uniform(1, M), k;
        do {
          k = rng.uniform(1, M);
        } while (k == j);
        p["j"] = j;
        p["k"] = k;
        if (rng.coin()) p["i"] = k;  // make the Kronecker delta fire often
      }
    } else if (clause == "1.9(2)") {
      p["i"] = rng.uniform(1, M);
      p["j"] = rng.coin() ? p["i"].get<int>() : static_cast<int>(rng.uniform(1, M));
      if (rng.coin()) p["n"] = -p["m"].get<std::int64_t>();
    } else {
      p["alpha"] = vec_json(random_full(rng));
      auto beta = random_q(rng);
      p["beta"] = vec_json(beta);
      p["mode2"] = 2 * rng.uniform(-cfg_.box, cfg_.box) + parity(beta);
    }
    return p;
  }

  std::pair<TensorState, TensorState> sides(const std::string& clause, const json& p,
                                            const TensorState& s) const override {
    const std::int64_t m = p.at("m"), n = p.at("n");
    if (clause == "1.9(1)") {
      if (!p.contains("j")) throw std::invalid_argument("1.9(1) needs M >= 2");
      const int i = p.at("i"), j = p.at("j"), k = p.at("k");
      const auto b = e(j) - e(k);
      const auto lhs = rep_.super_commutator(op::Vertex{e(i), 2 * m - 1}, op::Vertex{b, 2 * n}, s);
      TensorState rhs;
      if (i == k) rhs = Scalar(cocycle(e(i), b)) * rep_.apply(op::Vertex{e(j), 2 * (m + n) - 1}, s);
      return {lhs, rhs};
    }
    if (clause == "1.9(2)") {
      const int i = p.at("i"), j = p.at("j");
      const auto lhs = rep_.super_commutator(op::Vertex{e(i), 2 * m - 1}, op::Vertex{-e(j), 2 * n + 1}, s);
      TensorState rhs;
      if (i == j && m + n == 0) rhs = Scalar(cocycle(e(i), -e(j))) * s;
      return {lhs, rhs};
    }
    const auto alpha = vec(p.at("alpha")), beta = vec(p.at("beta"));
    const std::int64_t k = p.at("mode2");
    const auto lhs = rep_.super_commutator(op::Current{alpha, m}, op::Vertex{beta, k}, s);
    const auto rhs = Scalar(bilinear(alpha, beta)) * rep_.apply(op::Vertex{beta, k + 2 * m}, s);
    return {lhs, rhs};
  }
};

class NormalOrderFamily final : public SampledFamily {
 public:
  explicit NormalOrderFamily(const CheckConfig& cfg)
      : SampledFamily(cfg, "identity110",
                      {"1.10(1)", "1.10(2)", "1.10(2')", "1.10(3)", "vertex-product", "heisenberg"}) {}

 protected:
  json params(const std::string& clause, Rng& rng) const override {
    const int M = rcfg_.M;
    json p = {{"m", rng.uniform(-cfg_.box, cfg_.box)}, {"n", rng.uniform(-cfg_.box, cfg_.box)}};
    if (clause == "1.10(1)" || clause == "1.10(2)" || clause == "1.10(2')") {
      if (M >= 2) {
        int i = rng.uniform(1, M), j;
        do {
          j = rng.uniform(1, M);
        } while (j == i);
        p["i"] = i;
        p["j"] = j;
      }
      if (clause == "1.10(1)" && rng.coin()) p["n"] = -p["m"].get<std::int64_t>();
    } else if (clause == "1.10(3)") {
      p["i"] = rng.uniform(1, M);
    } else if (clause == "vertex-product") {
      auto alpha = random_q(rng);
      p["alpha"] = vec_json(alpha);
      p["delta"] = random_exponent(rng, rcfg_.q - 1, cfg_.box);
      p["mode2"] = 2 * rng.uniform(-cfg_.box, cfg_.box) + parity(alpha);
    } else {
      p["alpha"] = vec_json(random_full(rng));
      p["beta"] = vec_json(random_full(rng));
      if (rng.coin()) p["n"] = -p["m"].get<std::int64_t>();
    }
    return p;
  }

  // Σ_k :X_{(2k+1)/2}(a) X_{(2n-2k-1)/2}(b): with both factors odd, or the mirrored order
  TensorState normal_ordered_sum(const LatticeVector& a, const LatticeVector& b, std::int64_t n, bool mirrored,
                                 const TensorState& s) const {
    const std::int64_t bound = std::max(lattice_bound(a, s), lattice_bound(b, s));
    TensorState out;
    if (bound == kNoBound) return out;
    auto floor_div = [](std::int64_t x, std::int64_t y) { return x >= 0 ? x / y : -((-x + y - 1) / y); };
    const std::int64_t k_lo = -floor_div(-(2 * n - 1 - bound), 2), k_hi = floor_div(bound - 1, 2);
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      RepOperator A = op::Vertex{a, 2 * k + 1}, B = op::Vertex{b, 2 * n - 2 * k - 1};
      const std::int64_t la = mirrored ? 2 * n - 2 * k - 1 : 2 * k + 1;
      const std::int64_t ra = mirrored ? 2 * k + 1 : 2 * n - 2 * k - 1;
      RepOperator left = mirrored ? B : A, right = mirrored ? A : B;
      if (la <= ra)
        out += rep_.apply(left * right, s);
      else
        out -= rep_.apply(right * left, s);
    }
    return out;
  }

  std::pair<TensorState, TensorState> sides(const std::string& clause, const json& p,
                                            const TensorState& s) const override {
    const std::int64_t m = p.at("m"), n = p.at("n");
    if (clause == "1.10(1)" || clause == "1.10(2)" || clause == "1.10(2')") {
      if (!p.contains("i")) throw std::invalid_argument(clause + " needs M >= 2");
      const int i = p.at("i"), j = p.at("j");
      const auto a = e(i) - e(j);
      if (clause == "1.10(1)") {
        const auto lhs = rep_.super_commutator(op::Vertex{a, 2 * m}, op::Vertex{-a, 2 * n}, s);
        auto rhs = rep_.apply(op::Current{a, m + n}, s);
        if (m + n == 0) rhs.add_scaled(s, Scalar(m));
        rhs *= Scalar(cocycle(a, -a));
        return {lhs, rhs};
      }
      if (clause == "1.10(2)")
        return {normal_ordered_sum(e(i), -e(j), n, false, s),
                Scalar(cocycle(e(i), -e(j))) * rep_.apply(op::Vertex{a, 2 * n}, s)};
      return {normal_ordered_sum(e(i), -e(j), n, true, s),
              Scalar(cocycle(-e(j), e(i))) * rep_.apply(op::Vertex{a, 2 * n}, s)};
    }
    if (clause == "1.10(3)") {
      const int i = p.at("i");
      return {normal_ordered_sum(e(i), -e(i), n, false, s), rep_.apply(op::Current{e(i), n}, s)};
    }
    if (clause == "vertex-product") {
      const auto alpha = vec(p.at("alpha"));
      const auto dm = p.at("delta").get<std::vector<std::int64_t>>();
      const auto delta = LatticeVector::delta_of(rcfg_.lattice(), dm);
      const std::int64_t K = p.at("mode2");
      TensorState lhs;
      const std::int64_t ba = lattice_bound(alpha, s), bd = lattice_bound(delta, s);
      if (ba != kNoBound) {
        auto floor_div = [](std::int64_t x, std::int64_t y) { return x >= 0 ? x / y : -((-x + y - 1) / y); };
        for (std::int64_t k = -floor_div(-(K - ba), 2); k <= floor_div(bd, 2); ++k)
          lhs += rep_.apply(RepOperator(op::Vertex{alpha, K - 2 * k}) * RepOperator(op::Vertex{delta, 2 * k}), s);
      }
      return {lhs, rep_.apply(op::Vertex{alpha + delta, K}, s)};
    }
    const auto alpha = vec(p.at("alpha")), beta = vec(p.at("beta"));
    const auto lhs = rep_.super_commutator(op::Current{alpha, m}, op::Current{beta, n}, s);
    TensorState rhs;
    if (m + n == 0) rhs = Scalar(m * bilinear(alpha, beta)) * s;
    return {lhs, rhs};
  }
};

class FactoredCommutatorFamily final : public SampledFamily {
 public:
  explicit FactoredCommutatorFamily(const CheckConfig& cfg) : SampledFamily(cfg, "lemma28", {"lemma2.8"}) {}

 protected:
  json params(const std::string&, Rng& rng) const override {
    auto odd = [&] {
      return json{{"i", rng.uniform(1, rcfg_.M)}, {"sign", rng.coin() ? 1 : -1},
                  {"mode2", 2 * rng.uniform(-cfg_.box, cfg_.box) + 1}};
    };
    auto even = [&] {
      return json{{"star", rng.coin()}, {"flavor", rng.uniform(1, rcfg_.N)}, {"r", rng.uniform(-cfg_.box, cfg_.box + 1)}};
    };
    json p = {{"x1", odd()}, {"x2", odd()}, {"y1", even()}, {"y2", even()}};
    return p;
  }

  RepOperator odd_op(const json& j) const {
    return op::Vertex{j.at("sign").get<int>() * e(j.at("i").get<int>()), j.at("mode2").get<std::int64_t>()};
  }
  RepOperator even_op(const json& j) const {
    if (j.at("star").get<bool>()) return op::PhiStar{j.at("flavor").get<int>(), j.at("r").get<std::int64_t>()};
    return op::Phi{j.at("flavor").get<int>(), j.at("r").get<std::int64_t>()};
  }

  std::pair<TensorState, TensorState> sides(const std::string&, const json& p, const TensorState& s) const override {
    const auto X1 = odd_op(p.at("x1")), X2 = odd_op(p.at("x2"));
    const auto Y1 = even_op(p.at("y1")), Y2 = even_op(p.at("y2"));
    const auto lhs = rep_.super_commutator(X1 * Y1, X2 * Y2, s);
    // [X1,X2] Y1 Y2 s - X2 X1 [Y1,Y2] s
    auto rhs = rep_.super_commutator(X1, X2, rep_.apply(Y1 * Y2, s));
    rhs -= rep_.apply(X2 * X1, rep_.super_commutator(Y1, Y2, s));
    return {lhs, rhs};
  }
};

}  // namespace

std::unique_ptr<Family> make_family(const std::string& id, const CheckConfig& cfg) {
  if (id == "cocycle") return std::make_unique<CocycleFamily>(cfg);
  if (id == "jacobi") return std::make_unique<JacobiFamily>(cfg);
  if (id == "form") return std::make_unique<FormFamily>(cfg);
  if (id == "R-tables") return std::make_unique<TableFamily>(cfg, false);
  if (id == "ST-tables") return std::make_unique<TableFamily>(cfg, true);
  if (id == "prop33") return std::make_unique<HomomorphismFamily>(cfg, false);
  if (id == "thm46") return std::make_unique<HomomorphismFamily>(cfg, true);
  if (id == "lemma49") return std::make_unique<CentralRelationFamily>(cfg);
  if (id == "corollary19") return std::make_unique<VertexCommutatorFamily>(cfg);
  if (id == "identity110") return std::make_unique<NormalOrderFamily>(cfg);
  if (id == "boson") return std::make_unique<BosonFamily>(cfg);
  if (id == "lemma28") return std::make_unique<FactoredCommutatorFamily>(cfg);
  throw std::invalid_argument("unknown family id '" + id + "'");
}

}  // namespace torvo::detail
