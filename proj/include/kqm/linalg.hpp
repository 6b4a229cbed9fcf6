#pragma once

#include "kqm/rational.hpp"

#include <optional>
#include <vector>

namespace kqm {

using RatMatrix = std::vector<std::vector<Rational>>;

// in-place reduced row echelon form, returns the pivot columns
std::vector<size_t> rref(RatMatrix& m);

size_t rank(RatMatrix m);

// some solution of A x = b, or nothing if inconsistent
std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b);

}  // namespace kqm
