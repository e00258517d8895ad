#pragma once

#include <string>
#include <vector>

#include "gapcover/common.hpp"

namespace gapcover {

// Clause list over Boolean variables 1..num_vars; literals are nonzero signed
// indices, DIMACS style.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

// Strict DIMACS CNF reader: requires the "p cnf <vars> <clauses>" header,
// 0-terminated clauses, literals within range, no empty clauses, and exactly
// the declared clause count. Errors carry the offending line number.
CnfFormula parse_dimacs(const std::string& text);
std::string write_dimacs(const CnfFormula& cnf);

CnfFormula load_cnf_file(const std::string& path);

}  // namespace gapcover
