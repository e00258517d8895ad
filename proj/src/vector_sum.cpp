#include "gapcover/vector_sum.hpp"

#include <cstdlib>
#include <sstream>

#include "gapcover/instance.hpp"

namespace gapcover {

void check_vector_sum(const VectorSumInstance& vs) {
  if (vs.k < 1) throw ValidationError("vector-sum: k must be >= 1");
  if (vs.dim < 1) throw ValidationError("vector-sum: dim must be >= 1");
  if (vs.bound < 0) throw ValidationError("vector-sum: bound must be >= 0");
  if (static_cast<int>(vs.lists.size()) != vs.k)
    throw ValidationError("vector-sum: " + std::to_string(vs.lists.size()) + " lists for k=" + std::to_string(vs.k));
  for (int i = 0; i < vs.k; ++i)
    for (const auto& vec : vs.lists[i]) {
      if (static_cast<int>(vec.size()) != vs.dim)
        throw ValidationError("vector-sum: list " + std::to_string(i + 1) + " has a vector of length " +
                              std::to_string(vec.size()) + ", expected " + std::to_string(vs.dim));
      for (long long e : vec)
        if (e < -vs.bound || e > vs.bound)
          throw ValidationError("vector-sum: entry " + std::to_string(e) + " outside [-" + std::to_string(vs.bound) +
                                "," + std::to_string(vs.bound) + "]");
    }
}

std::string serialize_vector_sum(const VectorSumInstance& vs) {
  std::ostringstream os;
  os << vs.k << " " << vs.dim << " " << vs.bound << "\n";
  for (const auto& list : vs.lists) {
    os << list.size() << "\n";
    for (const auto& vec : list) {
      for (int j = 0; j < vs.dim; ++j) os << vec[j] << (j + 1 < vs.dim ? " " : "");
      os << "\n";
    }
  }
  return os.str();
}

VectorSumInstance deserialize_vector_sum(const std::string& text) {
  std::istringstream in(text);
  VectorSumInstance vs;
  int lineno = 1;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("vector-sum: empty file", lineno);
  {
    std::istringstream ls(line);
    ls >> vs.k >> vs.dim >> vs.bound;
    if (ls.fail()) throw ParseError("vector-sum: malformed header '" + line + "'", lineno);
  }
  if (vs.k < 1) throw ParseError("vector-sum: k must be >= 1", lineno);
  for (int i = 0; i < vs.k; ++i) {
    ++lineno;
    if (!std::getline(in, line)) throw ParseError("vector-sum: truncated (expected list size)", lineno);
    long n = std::strtol(line.c_str(), nullptr, 10);
    if (n < 0) throw ParseError("vector-sum: bad list size '" + line + "'", lineno);
    std::vector<std::vector<long long>> list;
    for (long r = 0; r < n; ++r) {
      ++lineno;
      if (!std::getline(in, line)) throw ParseError("vector-sum: truncated vector section", lineno);
      std::istringstream ls(line);
      std::vector<long long> vec(vs.dim);
      for (int j = 0; j < vs.dim; ++j) ls >> vec[j];
      if (ls.fail()) throw ParseError("vector-sum: bad vector line '" + line + "'", lineno);
      list.push_back(std::move(vec));
    }
    vs.lists.push_back(std::move(list));
  }
  check_vector_sum(vs);
  return vs;
}

VectorSumInstance load_vector_sum_file(const std::string& path) { return deserialize_vector_sum(read_file(path)); }

}  // namespace gapcover
