#pragma once

#include <vector>

#include "apparent/bigrat.hpp"

namespace apparent::detail {

using RatMatrix = std::vector<std::vector<BigRat>>;

/// Basis of {x : M x = 0} by exact Gauss-Jordan elimination. Each basis
/// vector has a 1 in one free column and 0 in the others.
std::vector<std::vector<BigRat>> nullspace(RatMatrix m, std::size_t cols);

}  // namespace apparent::detail
