#include <torvo/codec.hpp>

#include <stdexcept>
#include <string>

namespace torvo::codec {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int as_small(const json& j, const char* what) {
  auto v = as_int(j, what);
  if (v < INT32_MIN || v > INT32_MAX) throw std::invalid_argument(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<std::int64_t> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<std::int64_t> optional_part(const json& j, const char* name, int len) {
  if (!j.contains(name)) return std::vector<std::int64_t>(len, 0);
  auto v = int_array(j.at(name), name);
  if (static_cast<int>(v.size()) != len)
    throw std::invalid_argument(std::string("lattice part '") + name + "' has the wrong length");
  return v;
}

const json& term_array(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of terms");
  return j;
}

json encode_modes(const std::vector<BosonMode>& modes) {
  json a = json::array();
  for (const auto& b : modes) a.push_back({{"flavor", b.flavor}, {"doubled_mode", b.mode2}});
  return a;
}

std::vector<BosonMode> decode_modes(const json& j, const BosonSpace& space) {
  if (!j.is_array()) throw std::invalid_argument("boson modes must be an array");
  std::vector<BosonMode> out;
  for (const auto& b : j) {
    BosonMode m{as_small(field(b, "flavor"), "flavor"), as_small(field(b, "doubled_mode"), "doubled_mode")};
    if (m.flavor < 1 || m.flavor > space.N) throw std::out_of_range("boson flavor out of range");
    out.push_back(m);
  }
  return out;
}

BosonKey decode_boson_key(const json& t, const BosonSpace& space) {
  BosonKey k;
  if (t.contains("phi")) k.phi = decode_modes(t.at("phi"), space);
  if (t.contains("phi_star")) k.phi_star = decode_modes(t.at("phi_star"), space);
  k.canonicalize();
  return k;
}

std::vector<std::int64_t> exponent_of(const json& t, int q) {
  auto e = int_array(field(t, "exponent"), "exponent");
  if (static_cast<int>(e.size()) != q) throw std::invalid_argument("exponent length must equal q");
  return e;
}

}  // namespace

json encode(const Scalar& x) { return format_scalar(x); }

Scalar decode_scalar(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw std::invalid_argument("coefficient must be a \"p/q\" string");
}

json encode(const LatticeVector& v) {
  auto arr = [](std::span<const std::int64_t> s) { return json(std::vector<std::int64_t>(s.begin(), s.end())); };
  return {{"e", arr(v.e())}, {"delta", arr(v.delta())}, {"d", arr(v.d())}};
}

LatticeVector decode_lattice_vector(const json& j, const LatticeConfig& cfg) {
  if (!j.is_object()) throw std::invalid_argument("lattice vector must be an object");
  for (const auto& [k, v] : j.items())
    if (k != "e" && k != "delta" && k != "d") throw std::invalid_argument("unknown lattice part '" + k + "'");
  return LatticeVector(optional_part(j, "e", cfg.M), optional_part(j, "delta", cfg.extra()),
                       optional_part(j, "d", cfg.extra()));
}

json encode(const CreationMonomial& u) {
  json a = json::array();
  for (const auto& f : u.factors()) a.push_back({{"basis", f.basis}, {"mode", f.mode}, {"power", f.power}});
  return a;
}

CreationMonomial decode_monomial(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("monomial must be an array");
  std::vector<Factor> fs;
  for (const auto& f : j)
    fs.push_back({as_small(field(f, "basis"), "basis"), as_small(field(f, "mode"), "mode"),
                  as_small(field(f, "power"), "power")});
  return CreationMonomial(std::move(fs));
}

json encode(const LatticeFockState& s) {
  json a = json::array();
  for (const auto& [k, c] : s)
    a.push_back({{"coeff", encode(c)}, {"gamma", encode(k.gamma)}, {"monomial", encode(k.monomial)}});
  return a;
}

LatticeFockState decode_lattice_state(const json& j, const LatticeConfig& cfg) {
  LatticeFockState s;
  for (const auto& t : term_array(j)) {
    LatticeKey k{decode_lattice_vector(field(t, "gamma"), cfg),
                 t.contains("monomial") ? decode_monomial(t.at("monomial")) : CreationMonomial{}};
    if (k.monomial.max_basis() >= cfg.rank()) throw std::out_of_range("monomial basis index out of range");
    s.add(std::move(k), decode_scalar(field(t, "coeff")));
  }
  return s;
}

json encode(const BosonState& s) {
  json a = json::array();
  for (const auto& [k, c] : s)
    a.push_back({{"coeff", encode(c)}, {"phi", encode_modes(k.phi)}, {"phi_star", encode_modes(k.phi_star)}});
  return a;
}

BosonState decode_boson_state(const json& j, const BosonSpace& space) {
  BosonState s;
  for (const auto& t : term_array(j)) s.add(decode_boson_key(t, space), decode_scalar(field(t, "coeff")));
  return s;
}

json encode(const TensorState& s) {
  json a = json::array();
  for (const auto& [k, c] : s)
    a.push_back({{"coeff", encode(c)},
                 {"gamma", encode(k.lattice.gamma)},
                 {"monomial", encode(k.lattice.monomial)},
                 {"phi", encode_modes(k.boson.phi)},
                 {"phi_star", encode_modes(k.boson.phi_star)}});
  return a;
}

TensorState decode_tensor_state(const json& j, const RepConfig& cfg) {
  TensorState s;
  const auto lat = cfg.lattice();
  for (const auto& t : term_array(j)) {
    LatticeKey lk{decode_lattice_vector(field(t, "gamma"), lat),
                  t.contains("monomial") ? decode_monomial(t.at("monomial")) : CreationMonomial{}};
    if (lk.monomial.max_basis() >= lat.rank()) throw std::out_of_range("monomial basis index out of range");
    s.add(TensorKey{std::move(lk), decode_boson_key(t, cfg.bosons())}, decode_scalar(field(t, "coeff")));
  }
  return s;
}

json encode(const GlElement& x) {
  json a = json::array();
  for (const auto& [k, c] : x) a.push_back({{"coeff", encode(c)}, {"i", k.i}, {"j", k.j}});
  return a;
}

GlElement decode_gl_element(const json& j, const GlConfig& cfg) {
  GlElement x;
  for (const auto& t : term_array(j)) {
    BasisSymbol b{as_small(field(t, "i"), "i"), as_small(field(t, "j"), "j")};
    if (b.i < 1 || b.j < 1 || b.i > cfg.dim() || b.j > cfg.dim()) throw std::out_of_range("index out of range");
    x.add(b, decode_scalar(field(t, "coeff")));
  }
  return x;
}

json encode(const ToroidalElement& x) {
  json a = json::array();
  for (const auto& [k, c] : x) {
    if (k.kind == ToroidalKey::Kind::T)
      a.push_back({{"coeff", encode(c)}, {"kind", "T"}, {"i", k.i}, {"j", k.j}, {"exponent", k.exponent}});
    else
      a.push_back({{"coeff", encode(c)}, {"kind", "K"}, {"exponent", k.exponent}, {"direction", k.direction}});
  }
  return a;
}

ToroidalElement decode_toroidal(const json& j, const ToroidalConfig& cfg) {
  ToroidalElement x;
  for (const auto& t : term_array(j)) {
    const auto kind = field(t, "kind").get<std::string>();
    const auto c = decode_scalar(field(t, "coeff"));
    if (kind == "T") {
      BasisSymbol b{as_small(field(t, "i"), "i"), as_small(field(t, "j"), "j")};
      if (b.i < 1 || b.j < 1 || b.i > cfg.gl.dim() || b.j > cfg.gl.dim())
        throw std::out_of_range("generator index out of range");
      x.add_scaled(ToroidalElement::generator(b, exponent_of(t, cfg.q)), c);
    } else if (kind == "K") {
      int dir = as_small(field(t, "direction"), "direction");
      if (dir < 1 || dir > cfg.q) throw std::out_of_range("central direction out of range");
      x.add_scaled(ToroidalElement::central(exponent_of(t, cfg.q), dir), c);
    } else {
      throw std::invalid_argument("element kind must be \"T\" or \"K\"");
    }
  }
  return x;
}

json encode(const RepOperator& a) {
  return std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, op::Vertex>) {
          return {{"kind", "vertex"}, {"alpha", encode(n.alpha)}, {"doubled_mode", n.mode2}};
        } else if constexpr (std::is_same_v<T, op::Current>) {
          return {{"kind", "current"}, {"alpha", encode(n.alpha)}, {"mode", n.mode}};
        } else if constexpr (std::is_same_v<T, op::Diagonal>) {
          return {{"kind", "diagonal"}, {"alpha", encode(n.alpha)}, {"m", n.m}, {"mode", n.mode}};
        } else if constexpr (std::is_same_v<T, op::SMode>) {
          return {{"kind", "s"}, {"i", n.i}, {"j", n.j}, {"m", n.m}, {"mode", n.mode}};
        } else if constexpr (std::is_same_v<T, op::Central>) {
          return {{"kind", "central"}, {"exponent", n.exponent}, {"direction", n.direction}};
        } else if constexpr (std::is_same_v<T, op::Phi>) {
          return {{"kind", "phi"}, {"flavor", n.flavor}, {"r", n.r}};
        } else if constexpr (std::is_same_v<T, op::PhiStar>) {
          return {{"kind", "phi_star"}, {"flavor", n.flavor}, {"r", n.r}};
        } else if constexpr (std::is_same_v<T, op::Product>) {
          json f = json::array();
          for (const auto& x : n.factors) f.push_back(encode(x));
          return {{"kind", "product"}, {"factors", f}};
        } else {
          json t = json::array();
          for (const auto& [c, x] : n.terms) t.push_back({{"coeff", encode(c)}, {"op", encode(x)}});
          return {{"kind", "sum"}, {"terms", t}};
        }
      },
      a.node());
}

RepOperator decode_operator(const json& j, const RepConfig& cfg) {
  const auto kind = field(j, "kind").get<std::string>();
  const auto lat = cfg.lattice();
  auto prefix = [&](const json& m) {
    auto v = int_array(m, "m");
    if (static_cast<int>(v.size()) != cfg.q - 1) throw std::invalid_argument("m must have length q-1");
    return v;
  };
  if (kind == "vertex")
    return op::Vertex{decode_lattice_vector(field(j, "alpha"), lat), as_int(field(j, "doubled_mode"), "doubled_mode")};
  if (kind == "current")
    return op::Current{decode_lattice_vector(field(j, "alpha"), lat), as_int(field(j, "mode"), "mode")};
  if (kind == "diagonal")
    return op::Diagonal{decode_lattice_vector(field(j, "alpha"), lat), prefix(field(j, "m")),
                        as_int(field(j, "mode"), "mode")};
  if (kind == "s")
    return op::SMode{as_small(field(j, "i"), "i"), as_small(field(j, "j"), "j"), prefix(field(j, "m")),
                     as_int(field(j, "mode"), "mode")};
  if (kind == "central") return op::Central{exponent_of(j, cfg.q), as_small(field(j, "direction"), "direction")};
  if (kind == "phi") return op::Phi{as_small(field(j, "flavor"), "flavor"), as_int(field(j, "r"), "r")};
  if (kind == "phi_star") return op::PhiStar{as_small(field(j, "flavor"), "flavor"), as_int(field(j, "r"), "r")};
  if (kind == "product") {
    op::Product p;
    for (const auto& f : field(j, "factors")) p.factors.push_back(decode_operator(f, cfg));
    return p;
  }
  if (kind == "sum") {
    op::Sum s;
    for (const auto& t : field(j, "terms")) s.terms.emplace_back(decode_scalar(field(t, "coeff")), decode_operator(field(t, "op"), cfg));
    return s;
  }
  throw std::invalid_argument("unknown operator kind '" + kind + "'");
}

json encode(const RepConfig& cfg) { return {{"M", cfg.M}, {"N", cfg.N}, {"q", cfg.q}}; }

RepConfig decode_config(const json& j) {
  RepConfig cfg{as_small(field(j, "M"), "M"), as_small(field(j, "N"), "N"),
                j.contains("q") ? as_small(j.at("q"), "q") : 1};
  cfg.validate();
  return cfg;
}

}  // namespace torvo::codec
