#include <torvo/superalgebra.hpp>
#include <torvo/lattice.hpp>

#include <stdexcept>

namespace torvo {

void GlConfig::validate() const {
  if (M < 1) throw std::invalid_argument("M must be at least 1");
  if (N < 1) throw std::invalid_argument("N must be at least 1");
}

namespace {

enum class Block { A, B, C, D };  // even-even, odd (upper right), odd (lower left), even-even (N part)

void check_symbol(const GlConfig& cfg, const BasisSymbol& x) {
  if (x.i < 1 || x.i > cfg.dim() || x.j < 1 || x.j > cfg.dim())
    throw std::out_of_range("basis symbol index out of range");
}

Block block(const GlConfig& cfg, const BasisSymbol& x) {
  const bool up = x.i <= cfg.M, left = x.j <= cfg.M;
  if (up && left) return Block::A;
  if (up) return Block::B;
  if (left) return Block::C;
  return Block::D;
}

int delta(int a, int b) { return a == b ? 1 : 0; }

LatticeVector e_vec(int M, int i) { return LatticeVector::unit_e({M, 1}, i); }

int F(const LatticeVector& a, const LatticeVector& b) { return cocycle(a, b); }

GlElement single(int i, int j, const Scalar& c) { return GlElement(BasisSymbol{i, j}, c); }

}  // namespace

int parity(const GlConfig& cfg, const BasisSymbol& x) {
  check_symbol(cfg, x);
  auto b = block(cfg, x);
  return (b == Block::B || b == Block::C) ? 1 : 0;
}

std::vector<BasisSymbol> gl_basis(const GlConfig& cfg) {
  std::vector<BasisSymbol> out;
  for (int i = 1; i <= cfg.dim(); ++i)
    for (int j = 1; j <= cfg.dim(); ++j) out.push_back({i, j});
  return out;
}

int bracket_clause(const GlConfig& cfg, const BasisSymbol& x, const BasisSymbol& y) {
  check_symbol(cfg, x);
  check_symbol(cfg, y);
  auto bx = block(cfg, x), by = block(cfg, y);
  auto is = [&](Block a, Block b) { return (bx == a && by == b) || (bx == b && by == a); };
  if (is(Block::A, Block::A)) return 1;
  if (is(Block::D, Block::D)) return 2;
  if (is(Block::A, Block::C)) return 3;
  if (is(Block::A, Block::B)) return 4;
  if (is(Block::D, Block::C)) return 5;
  if (is(Block::D, Block::B)) return 6;
  if (is(Block::C, Block::B)) return 7;
  if (is(Block::A, Block::D)) return 8;
  if (is(Block::C, Block::C)) return 9;
  return 10;
}

GlElement bracket_T(const GlConfig& cfg, const BasisSymbol& x, const BasisSymbol& y) {
  const int M = cfg.M;
  const auto bx = block(cfg, x), by = block(cfg, y);
  GlElement out;
  switch (bracket_clause(cfg, x, y)) {
    case 1: {
      const int i = x.i, j = x.j, k = y.i, l = y.j;
      if (i != j && k != l) {
        const auto aij = e_vec(M, i) - e_vec(M, j), akl = e_vec(M, k) - e_vec(M, l);
        if (bilinear(aij, akl) >= 0) return out;
        const Scalar f(F(aij, akl));
        if (j == k && l != i) return single(i, l, f);
        if (l == i && j != k) return single(k, j, f);
        out.add({i, i}, f);
        out.add({j, j}, -f);
        return out;
      }
      if (i == j && k != l) return single(k, l, Scalar(delta(i, k) - delta(i, l)));
      if (i != j && k == l) return single(i, j, Scalar(delta(k, j) - delta(k, i)));
      return out;
    }
    case 2: {
      const int i = x.i - M, j = x.j - M, k = y.i - M, l = y.j - M;
      out.add({i + M, l + M}, Scalar(delta(j, k)));
      out.add({k + M, j + M}, Scalar(-delta(l, i)));
      return out;
    }
    case 3: {
      const bool forward = bx == Block::A;
      const auto& a = forward ? x : y;   // T_ij
      const auto& c = forward ? y : x;   // T_{k+M,l}
      const int i = a.i, j = a.j, k = c.i - M, l = c.j;
      if (i != j) {
        const Scalar f = forward ? Scalar(F(e_vec(M, j), e_vec(M, i))) : Scalar(F(e_vec(M, i), e_vec(M, j)));
        return single(k + M, j, f * delta(i, l));
      }
      return single(k + M, l, Scalar(forward ? -delta(i, l) : delta(i, l)));
    }
    case 4: {
      const bool forward = bx == Block::A;
      const auto& a = forward ? x : y;   // T_ij
      const auto& b = forward ? y : x;   // T_{k,l+M}
      const int i = a.i, j = a.j, k = b.i, l = b.j - M;
      const Scalar f(F(e_vec(M, i), e_vec(M, j)) * delta(j, k));
      return single(i, l + M, forward ? f : -f);
    }
    case 5: {
      const bool forward = bx == Block::D;
      const auto& d = forward ? x : y;   // T_{i+M,j+M}
      const auto& c = forward ? y : x;   // T_{k+M,l}
      const int j = d.j - M, k = c.i - M, l = c.j;
      const int i = d.i - M;
      return single(i + M, l, Scalar(forward ? delta(j, k) : -delta(j, k)));
    }
    case 6: {
      const bool forward = bx == Block::D;
      const auto& d = forward ? x : y;   // T_{i+M,j+M}
      const auto& b = forward ? y : x;   // T_{k,l+M}
      const int i = d.i - M, j = d.j - M, k = b.i, l = b.j - M;
      return single(k, j + M, Scalar(forward ? -delta(l, i) : delta(l, i)));
    }
    case 7: {
      const auto& c = bx == Block::C ? x : y;  // T_{i+M,j}
      const auto& b = bx == Block::C ? y : x;  // T_{k,l+M}
      const int i = c.i - M, j = c.j, k = b.i, l = b.j - M;
      out.add({i + M, l + M}, Scalar(delta(j, k)));
      out.add({k, j}, Scalar(F(e_vec(M, k), e_vec(M, j)) * delta(l, i)));
      return out;
    }
    default:
      (void)by;
      return out;
  }
}

Scalar form_T(const GlConfig& cfg, const BasisSymbol& x, const BasisSymbol& y) {
  const int M = cfg.M;
  const auto bx = block(cfg, x), by = block(cfg, y);
  if (bx == Block::A && by == Block::A) {
    const auto aij = e_vec(M, x.i) - e_vec(M, x.j), akl = e_vec(M, y.i) - e_vec(M, y.j);
    return Scalar(F(aij, akl) * delta(x.j, y.i) * delta(y.j, x.i));
  }
  if (bx == Block::C && by == Block::B) return Scalar(-delta(x.j, y.i) * delta(y.j, x.i));
  if (bx == Block::B && by == Block::C) return Scalar(delta(x.j, y.i) * delta(y.j, x.i));
  if (bx == Block::D && by == Block::D) return Scalar(-delta(x.j, y.i) * delta(y.j, x.i));
  return Scalar(0);
}

GlElement bracket(const GlConfig& cfg, const GlElement& x, const GlElement& y) {
  GlElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add_scaled(bracket_T(cfg, a, b), ca * cb);
  return out;
}

Scalar form(const GlConfig& cfg, const GlElement& x, const GlElement& y) {
  Scalar s(0);
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) s += ca * cb * form_T(cfg, a, b);
  return s;
}

Scalar supertrace(const GlConfig& cfg, const GlElement& x) {
  Scalar s(0);
  for (const auto& [a, c] : x) {
    check_symbol(cfg, a);
    if (a.i == a.j) s += a.i <= cfg.M ? c : Scalar(-c);
  }
  return s;
}

bool jacobi_check(const GlConfig& cfg, const BasisSymbol& x, const BasisSymbol& y,
                  const BasisSymbol& z) {
  const GlElement X(x, Scalar(1)), Y(y, Scalar(1)), Z(z, Scalar(1));
  const auto lhs = bracket(cfg, bracket(cfg, X, Y), Z);
  auto rhs = bracket(cfg, X, bracket(cfg, Y, Z));
  const int sign = (parity(cfg, x) & parity(cfg, y)) ? -1 : 1;
  rhs.add_scaled(bracket(cfg, Y, bracket(cfg, X, Z)), Scalar(-sign));
  return lhs == rhs;
}

}  // namespace torvo
