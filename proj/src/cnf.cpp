#include "gapcover/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "gapcover/instance.hpp"

namespace gapcover {

CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula cnf;
  bool header_seen = false;
  long declared_clauses = 0;
  std::vector<int> current;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      if (header_seen) throw ParseError("duplicate header", lineno);
      std::string p, fmt;
      ls >> p >> fmt >> cnf.num_vars >> declared_clauses;
      if (ls.fail() || fmt != "cnf" || cnf.num_vars < 0 || declared_clauses < 0)
        throw ParseError("malformed header '" + line + "'", lineno);
      header_seen = true;
      continue;
    }
    if (!header_seen) throw ParseError("clause before header", lineno);
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      long lit = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') throw ParseError("bad token '" + tok + "'", lineno);
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause", lineno);
        cnf.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > cnf.num_vars)
          throw ParseError("literal " + tok + " exceeds declared variable count", lineno);
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!header_seen) throw ParseError("missing 'p cnf' header", lineno);
  if (!current.empty()) throw ParseError("unterminated clause at end of file", lineno);
  if (static_cast<long>(cnf.clauses.size()) != declared_clauses)
    throw ParseError("expected " + std::to_string(declared_clauses) + " clauses, got " +
                         std::to_string(cnf.clauses.size()),
                     lineno);
  return cnf;
}

std::string write_dimacs(const CnfFormula& cnf) {
  std::ostringstream os;
  os << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) os << lit << " ";
    os << "0\n";
  }
  return os.str();
}

CnfFormula load_cnf_file(const std::string& path) { return parse_dimacs(read_file(path)); }

}  // namespace gapcover
