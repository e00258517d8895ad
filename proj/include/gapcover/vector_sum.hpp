#pragma once

#include <string>
#include <vector>

#include "gapcover/common.hpp"

namespace gapcover {

// k lists of integer vectors with entries in [-bound, bound]; the question is
// whether one vector per list sums to the zero vector.
struct VectorSumInstance {
  int k = 0;
  int dim = 0;
  long long bound = 0;
  std::vector<std::vector<std::vector<long long>>> lists;  // k lists of vectors

  bool operator==(const VectorSumInstance&) const = default;
};

// Throws ValidationError on dimension or range violations.
void check_vector_sum(const VectorSumInstance& vs);

// Text format:
//   <k> <dim> <bound>
//   then per list: a line "<n_i>" followed by n_i lines of dim integers.
std::string serialize_vector_sum(const VectorSumInstance& vs);
VectorSumInstance deserialize_vector_sum(const std::string& text);

VectorSumInstance load_vector_sum_file(const std::string& path);

}  // namespace gapcover
