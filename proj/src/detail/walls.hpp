#pragma once

#include <span>
#include <vector>

#include "coxwalls/walls.hpp"

namespace coxwalls::detail {

/// Reflection u t u^{-1}, where u is spelled by any (not necessarily reduced) word.
Element reflection_of_edge(const CoxeterSystem& sys, std::span<const Letter> vertex_word, Letter t);

/// Root of the wall in the geometric representation, B(beta, beta) = 1.
std::vector<long double> unit_root(const CoxeterSystem& sys, const Wall& q);

long double bilinear(const CoxeterSystem& sys, const std::vector<long double>& x, const std::vector<long double>& y);

}  // namespace coxwalls::detail
