#include <torvo/clause_tables.hpp>
#include <torvo/lattice.hpp>

#include <stdexcept>

namespace torvo {

namespace {

using Exp = std::vector<std::int64_t>;

Exp add(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (size_t p = 0; p < a.size(); ++p) r[p] = a[p] + b[p];
  return r;
}

int delta(int a, int b) { return a == b ? 1 : 0; }

struct Ctx {
  int M;
  int q;
  bool toroidal;
  Exp m, n;

  LatticeVector e(int i) const { return LatticeVector::unit_e({M, 1}, i); }
  LatticeVector alpha(int i, int j) const { return e(i) - e(j); }
  int F(const LatticeVector& a, const LatticeVector& b) const { return cocycle(a, b); }
  ToroidalElement T(int i, int j, const Scalar& c) const {
    return ToroidalElement::generator({i, j}, add(m, n), c);
  }
  // m δ_{m+n,0} K in the affine table, d(t^a) t^b in the toroidal one
  ToroidalElement central(const Exp& a, const Exp& b, const Scalar& c) const {
    if (toroidal) return c * central_cocycle(a, b);
    ToroidalElement r;
    if (a[0] + b[0] == 0) r = ToroidalElement::central({0}, 1, c * Scalar(a[0]));
    return r;
  }
};

using Printed = ToroidalElement (*)(const Ctx&, const IndexTuple&);
using Admit = bool (*)(const IndexTuple&);
using Operands = std::pair<BasisSymbol, BasisSymbol> (*)(int M, const IndexTuple&);

struct Row {
  TableClause clause;
  Admit admit;
  Operands operands;
  Printed printed;
};

bool any(const IndexTuple&) { return true; }

std::vector<Row> build_rows() {
  std::vector<Row> rows;
  auto row = [&](std::string id, int tc, const char* r, bool rev, Admit a, Operands o, Printed p) {
    TableClause c;
    c.id = std::move(id);
    c.table_clause = tc;
    c.ranges = {r[0], r[1], r[2], r[3]};
    c.reversed = rev;
    rows.push_back({c, a, o, p});
  };

  auto ee = [](int, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.i, t.j}, BasisSymbol{t.k, t.l}); };

  row("1.a", 1, "MMMM", false,
      [](const IndexTuple& t) {
        if (t.i == t.j || t.k == t.l) return false;
        return delta(t.i, t.k) - delta(t.i, t.l) - delta(t.j, t.k) + delta(t.j, t.l) >= 0;
      },
      ee, [](const Ctx&, const IndexTuple&) { return ToroidalElement{}; });
  row("1.b", 1, "MMMM", false,
      [](const IndexTuple& t) { return t.i != t.j && t.k != t.l && t.j == t.k && t.l != t.i; }, ee,
      [](const Ctx& c, const IndexTuple& t) {
        return c.T(t.i, t.l, Scalar(c.F(c.alpha(t.i, t.j), c.alpha(t.k, t.l))));
      });
  row("1.c", 1, "MMMM", false,
      [](const IndexTuple& t) { return t.i != t.j && t.k != t.l && t.l == t.i && t.j != t.k; }, ee,
      [](const Ctx& c, const IndexTuple& t) {
        return c.T(t.k, t.j, Scalar(c.F(c.alpha(t.i, t.j), c.alpha(t.k, t.l))));
      });
  row("1.d", 1, "MMMM", false,
      [](const IndexTuple& t) { return t.i != t.j && t.k != t.l && t.l == t.i && t.j == t.k; }, ee,
      [](const Ctx& c, const IndexTuple& t) {
        const Scalar f(c.F(c.alpha(t.i, t.j), c.alpha(t.k, t.l)));
        return c.T(t.i, t.i, f) - c.T(t.j, t.j, f) + c.central(c.m, c.n, f);
      });
  row("1.e", 1, "MMMM", false, [](const IndexTuple& t) { return t.i == t.j && t.k != t.l; }, ee,
      [](const Ctx& c, const IndexTuple& t) {
        return c.T(t.k, t.l, Scalar(bilinear(c.e(t.i), c.alpha(t.k, t.l))));
      });
  row("1.f", 1, "MMMM", false, [](const IndexTuple& t) { return t.i == t.j && t.k == t.l; }, ee,
      [](const Ctx& c, const IndexTuple& t) { return c.central(c.m, c.n, Scalar(delta(t.i, t.k))); });

  row("2", 2, "NNNN", false, any,
      [](int M, const IndexTuple& t) {
        return std::make_pair(BasisSymbol{t.i + M, t.j + M}, BasisSymbol{t.k + M, t.l + M});
      },
      [](const Ctx& c, const IndexTuple& t) {
        const int M = c.M;
        auto r = c.T(t.i + M, t.l + M, Scalar(delta(t.j, t.k)));
        if (c.toroidal)
          r -= c.T(t.k + M, t.j + M, Scalar(delta(t.l, t.i)));
        else
          r -= c.T(t.k + M, t.l + M, Scalar(delta(t.l, t.i)));
        return r - c.central(c.m, c.n, Scalar(delta(t.j, t.k) * delta(t.i, t.l)));
      });

  auto a_c = [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.i, t.j}, BasisSymbol{t.k + M, t.l}); };
  auto c_a = [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.k + M, t.l}, BasisSymbol{t.i, t.j}); };
  row("3.a", 3, "MMNM", false, [](const IndexTuple& t) { return t.i != t.j; }, a_c,
      [](const Ctx& c, const IndexTuple& t) {
        return c.T(t.k + c.M, t.j, Scalar(delta(t.i, t.l) * c.F(c.e(t.j), c.e(t.i))));
      });
  row("3.b", 3, "MMNM", true, [](const IndexTuple& t) { return t.i != t.j; }, c_a,
      [](const Ctx& c, const IndexTuple& t) {
        const int f = c.toroidal ? c.F(c.e(t.j), c.e(t.i)) : c.F(c.e(t.i), c.e(t.j));
        return c.T(t.k + c.M, t.j, Scalar(delta(t.i, t.l) * f));
      });
  row("3.c", 3, "MMNM", false, [](const IndexTuple& t) { return t.i == t.j; }, a_c,
      [](const Ctx& c, const IndexTuple& t) { return c.T(t.k + c.M, t.l, Scalar(-delta(t.i, t.l))); });
  row("3.d", 3, "MMNM", true, [](const IndexTuple& t) { return t.i == t.j; }, c_a,
      [](const Ctx& c, const IndexTuple& t) { return c.T(t.k + c.M, t.l, Scalar(delta(t.i, t.l))); });

  row("4.a", 4, "MMMN", false, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.i, t.j}, BasisSymbol{t.k, t.l + M}); },
      [](const Ctx& c, const IndexTuple& t) {
        return c.T(t.i, t.l + c.M, Scalar(delta(t.j, t.k) * c.F(c.e(t.i), c.e(t.j))));
      });
  row("4.b", 4, "MMMN", true, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.k, t.l + M}, BasisSymbol{t.i, t.j}); },
      [](const Ctx& c, const IndexTuple& t) {
        return c.T(t.i, t.l + c.M, Scalar(-delta(t.j, t.k) * c.F(c.e(t.i), c.e(t.j))));
      });

  row("5.a", 5, "NNNM", false, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.i + M, t.j + M}, BasisSymbol{t.k + M, t.l}); },
      [](const Ctx& c, const IndexTuple& t) { return c.T(t.i + c.M, t.l, Scalar(delta(t.j, t.k))); });
  row("5.b", 5, "NNNM", true, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.k + M, t.l}, BasisSymbol{t.i + M, t.j + M}); },
      [](const Ctx& c, const IndexTuple& t) { return c.T(t.i + c.M, t.l, Scalar(-delta(t.j, t.k))); });

  row("6.a", 6, "NNMN", false, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.i + M, t.j + M}, BasisSymbol{t.k, t.l + M}); },
      [](const Ctx& c, const IndexTuple& t) { return c.T(t.k, t.j + c.M, Scalar(-delta(t.l, t.i))); });
  row("6.b", 6, "NNMN", true, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.k, t.l + M}, BasisSymbol{t.i + M, t.j + M}); },
      [](const Ctx& c, const IndexTuple& t) { return c.T(t.k, t.j + c.M, Scalar(delta(t.l, t.i))); });

  row("7.a", 7, "NMMN", false, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.i + M, t.j}, BasisSymbol{t.k, t.l + M}); },
      [](const Ctx& c, const IndexTuple& t) {
        return c.T(t.i + c.M, t.l + c.M, Scalar(delta(t.j, t.k))) +
               c.T(t.k, t.j, Scalar(c.F(c.e(t.k), c.e(t.j)) * delta(t.l, t.i))) -
               c.central(c.m, c.n, Scalar(delta(t.j, t.k) * delta(t.l, t.i)));
      });
  row("7.b", 7, "NMMN", true, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.k, t.l + M}, BasisSymbol{t.i + M, t.j}); },
      [](const Ctx& c, const IndexTuple& t) {
        return c.T(t.i + c.M, t.l + c.M, Scalar(delta(t.j, t.k))) +
               c.T(t.k, t.j, Scalar(c.F(c.e(t.k), c.e(t.j)) * delta(t.l, t.i))) +
               c.central(c.n, c.m, Scalar(delta(t.j, t.k) * delta(t.l, t.i)));
      });

  auto zero = [](const Ctx&, const IndexTuple&) { return ToroidalElement{}; };
  row("8.a", 8, "MMNN", false, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.i, t.j}, BasisSymbol{t.k + M, t.l + M}); }, zero);
  row("8.b", 8, "MMNN", true, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.k + M, t.l + M}, BasisSymbol{t.i, t.j}); }, zero);
  row("9.a", 9, "NMNM", false, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.i + M, t.j}, BasisSymbol{t.k + M, t.l}); }, zero);
  row("9.b", 9, "NMNM", true, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.k + M, t.l}, BasisSymbol{t.i + M, t.j}); }, zero);
  row("10.a", 10, "MNMN", false, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.i, t.j + M}, BasisSymbol{t.k, t.l + M}); }, zero);
  row("10.b", 10, "MNMN", true, any,
      [](int M, const IndexTuple& t) { return std::make_pair(BasisSymbol{t.k, t.l + M}, BasisSymbol{t.i, t.j + M}); }, zero);
  return rows;
}

const std::vector<Row>& rows() {
  static const std::vector<Row> r = build_rows();
  return r;
}

const Row& row_of(const TableClause& c) {
  for (const auto& r : rows())
    if (r.clause.id == c.id) return r;
  throw std::invalid_argument("unknown table clause " + c.id);
}

}  // namespace

bool TableClause::admits(const IndexTuple& t) const { return row_of(*this).admit(t); }

std::vector<IndexTuple> TableClause::tuples(const GlConfig& cfg) const {
  auto hi = [&](char r) { return r == 'M' ? cfg.M : cfg.N; };
  std::vector<IndexTuple> out;
  const auto& r = row_of(*this);
  for (int i = 1; i <= hi(ranges[0]); ++i)
    for (int j = 1; j <= hi(ranges[1]); ++j)
      for (int k = 1; k <= hi(ranges[2]); ++k)
        for (int l = 1; l <= hi(ranges[3]); ++l)
          if (r.admit({i, j, k, l})) out.push_back({i, j, k, l});
  return out;
}

ClauseInstance TableClause::instantiate(const ToroidalConfig& cfg, const IndexTuple& t,
                                        const std::vector<std::int64_t>& m,
                                        const std::vector<std::int64_t>& n, bool toroidal) const {
  if (static_cast<int>(m.size()) != cfg.q || static_cast<int>(n.size()) != cfg.q)
    throw std::invalid_argument("exponent length must equal q");
  const auto& r = row_of(*this);
  auto [a, b] = r.operands(cfg.gl.M, t);
  Ctx ctx{cfg.gl.M, cfg.q, toroidal, m, n};
  ClauseInstance inst;
  inst.x = ToroidalElement::generator(a, reversed ? n : m);
  inst.y = ToroidalElement::generator(b, reversed ? m : n);
  inst.printed = r.printed(ctx, t);
  return inst;
}

const std::vector<TableClause>& table_clauses() {
  static const std::vector<TableClause> all = [] {
    std::vector<TableClause> v;
    for (const auto& r : rows()) v.push_back(r.clause);
    return v;
  }();
  return all;
}

const TableClause& table_clause(const std::string& id) {
  for (const auto& c : table_clauses())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown table clause " + id);
}

std::optional<std::string> known_misprint(const std::string& full_id) {
  if (full_id == "R2")
    return "printed term -δ_li T_{k+M,l+M} should read -δ_li T_{k+M,j+M}; the corrected line matches "
           "the gl(M|N) bracket, super-Jacobi and the representation";
  if (full_id == "ST3.b")
    return "printed sign F(e_j,e_i) should read F(e_i,e_j), as in the affine table; the corrected line "
           "matches the gl(M|N) bracket and the representation";
  return std::nullopt;
}

}  // namespace torvo
