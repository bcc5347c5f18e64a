#pragma once

// Edge paths in the Cayley graph and the calculus of their wall crossings.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coxwalls/core.hpp"
#include "coxwalls/rational.hpp"
#include "coxwalls/walls.hpp"

namespace coxwalls {

/// A start vertex and a sequence of edge labels. A path with k letters has
/// k + 1 vertices, vertex(i) = start * letters[0..i).
struct EdgePath {
  Element start;
  Word letters;

  std::size_t size() const noexcept { return letters.size(); }
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// Validates the letters against the system.
EdgePath make_path(const CoxeterSystem& sys, Element start, Word letters);
EdgePath make_path(const CoxeterSystem& sys, std::string_view start, std::string_view letters);

std::vector<Element> vertices(const CoxeterSystem& sys, const EdgePath& p);
Element end_vertex(const CoxeterSystem& sys, const EdgePath& p);

/// Wall of every edge, in order.
std::vector<Wall> wall_sequence(const CoxeterSystem& sys, const EdgePath& p);

bool is_geodesic(const CoxeterSystem& sys, const EdgePath& p);

struct QuasiGeodesicParams {
  Rational lambda{1};
  Rational epsilon{0};
};

struct QuasiGeodesicCheck {
  bool ok = true;
  /// On failure, the vertex pair (s, t) with the largest excess
  /// (t - s) - lambda d(v_s, v_t) - epsilon; ties go to the smallest (s, t).
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

QuasiGeodesicCheck is_quasi_geodesic(const CoxeterSystem& sys, const EdgePath& p, const QuasiGeodesicParams& params);

/// Smallest epsilon making p a (lambda, epsilon)-quasi-geodesic (never negative).
Rational minimal_epsilon(const CoxeterSystem& sys, const EdgePath& p, const Rational& lambda);

/// (d(a,v) + d(v,b) - d(a,b)) / 2: the number of walls separating v from both a and b.
std::size_t defect(const CoxeterSystem& sys, const Element& a, const Element& v, const Element& b);

struct BracketReport {
  std::vector<std::size_t> per_vertex;       ///< B(t, p) for every vertex index t
  std::size_t max = 0;                       ///< B(p)
  std::vector<std::vector<Wall>> witnesses;  ///< walls bracketing each vertex, sorted
};

BracketReport bracket_report(const CoxeterSystem& sys, const EdgePath& p);

/// Bracket number of the vertex range [first, last] inside the report's path.
std::size_t bracket_number(const BracketReport& report, std::size_t first, std::size_t last);

/// Removes edges i < j lying in one wall and reflects the segment between
/// them across it. Reflection acts on the left, so labels are unchanged and
/// the result is the path with letters i and j dropped.
EdgePath delete_pair(const CoxeterSystem& sys, const EdgePath& p, std::size_t i, std::size_t j);

/// Edges [i, j): from vertex i to vertex j.
EdgePath subpath(const CoxeterSystem& sys, const EdgePath& p, std::size_t i, std::size_t j);
EdgePath concat(const CoxeterSystem& sys, const EdgePath& p, const EdgePath& q);
EdgePath reverse(const CoxeterSystem& sys, const EdgePath& p);

/// Smallest K such that every vertex of p is within K of a vertex of q.
std::size_t tracking_distance(const CoxeterSystem& sys, const EdgePath& p, const EdgePath& q);

}  // namespace coxwalls
