#pragma once

#include <vector>

#include "sdop/rat.hpp"

namespace sdop {

using RatRow = std::vector<Rat>;
using RatMat = std::vector<RatRow>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

// Basis of the right nullspace of an (r x c) matrix, as c-vectors.
std::vector<RatRow> nullspace(const RatMat& m, int cols);

}  // namespace sdop
