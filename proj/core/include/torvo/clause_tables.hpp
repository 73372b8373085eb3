#pragma once

#include <torvo/superalgebra.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace torvo {

struct IndexTuple {
  int i = 1, j = 1, k = 1, l = 1;
};

struct ClauseInstance {
  ToroidalElement x;
  ToroidalElement y;
  ToroidalElement printed;  // right-hand side exactly as tabulated
};

// One printed line of the affine (R) or toroidal (ST) bracket tables.
struct TableClause {
  std::string id;                 // e.g. "1.d"; prefixed with R or ST by the caller
  int table_clause = 1;           // 1..10, the matching gl(M|N) clause
  std::array<char, 4> ranges{};   // 'M' or 'N' for i, j, k, l
  bool reversed = false;          // first operand carries n̄

  bool admits(const IndexTuple& t) const;
  std::vector<IndexTuple> tuples(const GlConfig& cfg) const;
  ClauseInstance instantiate(const ToroidalConfig& cfg, const IndexTuple& t,
                             const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n,
                             bool toroidal) const;
};

const std::vector<TableClause>& table_clauses();
const TableClause& table_clause(const std::string& id);

// printed lines that disagree with the generic bracket, with the adjudication
std::optional<std::string> known_misprint(const std::string& full_id);

}  // namespace torvo
