#pragma once

#include <vector>

#include "divisum/rational.hpp"

namespace divisum::detail {

using Matrix = std::vector<std::vector<Rational>>;

/// Basis of the right nullspace of an r x c matrix, one vector per free
/// column of the reduced row echelon form (free variable set to 1).
std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols);

}  // namespace divisum::detail
