#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "biwalk/matrix.hpp"

namespace biwalk {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<long long>>;

struct ExactIntResult {
  int rank = 0;
  std::optional<BigInt> determinant;  // set iff the input is square
};

// Fraction-free Bareiss elimination with full pivoting; exact over the
// integers for any rectangular input.
ExactIntResult exact_rank_det(const IntMatrix& m);

// Convenience: round-and-check conversion for matrices that are integer by
// construction (entries within 1e-9 of integers; throws InternalInconsistency
// otherwise).
IntMatrix to_int_matrix(const RealMatrix& m);

}  // namespace biwalk
