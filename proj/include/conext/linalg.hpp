#pragma once

// Exact Gaussian elimination over Q.

#include "conext/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace conext {

using RationalMatrix = std::vector<RationalVector>;  // row-major, rows of equal length

/// Reduced row echelon form. Returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
RationalMatrix null_space(RationalMatrix m, std::size_t cols);

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace conext
