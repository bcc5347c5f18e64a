#pragma once

// Geodesic approximation, straightening of edge paths into tracking
// geodesics, two-sided tracking bounds, and generators for the periodic and
// spiral path families.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "coxwalls/core.hpp"
#include "coxwalls/paths.hpp"
#include "coxwalls/rational.hpp"
#include "coxwalls/walls.hpp"

namespace coxwalls {

struct ProjectionResult {
  Element projected;
  std::vector<Wall> reflections_used;
  std::size_t steps = 0;
};

/// Moves v onto a geodesic from a to b: while some wall separates v from both
/// a and b, reflect v across the wall of the last such edge on the ShortLex
/// geodesic a -> v. Each step lowers the defect and both distances.
ProjectionResult project_vertex(const CoxeterSystem& sys, const Element& a, const Element& b, const Element& v);

struct ApproximationResult {
  EdgePath approx;
  std::size_t L_achieved = 0;                   ///< max d(v_i, w_i)
  std::vector<std::size_t> segment_boundaries;  ///< index of each w_i in approx
};

/// Projects every vertex of p and joins consecutive projections by ShortLex
/// geodesics. Every vertex of the result lies on a geodesic between p's ends.
ApproximationResult geodesic_approximation(const CoxeterSystem& sys, const EdgePath& p);

struct StraightenEvent {
  enum class Kind { Splice, Delete };
  Kind kind = Kind::Splice;
  std::size_t depth = 0;
  std::size_t chain = 0;  ///< index of the chain being repaired (0 for deletions)
  std::size_t first = 0;  ///< first edge index affected
  std::size_t last = 0;   ///< splice: end of the replaced range [first, last); delete: second edge
  std::size_t replacement_length = 0;
};

const char* to_string(StraightenEvent::Kind kind) noexcept;

struct StraightenResult {
  EdgePath geodesic;
  std::size_t K_achieved = 0;
  std::vector<StraightenEvent> trace;
};

/// A geodesic with p's endpoints that tracks p, built chain by chain from the
/// Dilworth partition of the separating walls. A closed path yields the empty
/// path. Throws Undetermined on undecidable crossings and CapExceeded past the
/// recursion depth limit.
StraightenResult straighten(const CoxeterSystem& sys, const EdgePath& p);

/// lambda2 (2K + 1) + epsilon2 + K.
Rational double_tracking_bound(const Rational& lambda2, const Rational& epsilon2, std::size_t K);

struct CorrespondenceReport {
  std::vector<std::size_t> a_of;  ///< a(n): nearest vertex of p2 to p1(n)
  std::size_t K = 0;
  Rational bound;                  ///< double_tracking_bound(lambda2, epsilon2, K)
  std::size_t reverse_distance = 0;  ///< tracking_distance(p2, p1)
  bool bound_holds = false;
};

struct Infeasible {
  std::string reason;
  std::size_t vertex = 0;    ///< offending vertex index of p1
  std::size_t distance = 0;  ///< its distance to p2 (or to the matching endpoint)
};

/// Builds a(n) with a(0) = 0 and a(n1) = n2 pinned and checks the reverse
/// tracking bound for the given quasi-geodesic parameters of p2.
std::variant<CorrespondenceReport, Infeasible> tracking_correspondence(const CoxeterSystem& sys, const EdgePath& p1,
                                                                      const EdgePath& p2, std::size_t K,
                                                                      const QuasiGeodesicParams& p2_params);

/// k copies of g's normal form, starting at the identity.
EdgePath periodic_path(const CoxeterSystem& sys, const Element& g, std::size_t k);

struct SpiralParams {
  std::size_t windings = 1;
  double scale = 4.0;   ///< c
  double growth = 1.7;  ///< per-winding growth factor
};

/// Arm lengths of the spiral: arm j (0..3) of winding k (1-based) has length
/// round(c * growth^(k + j/4)), directions +x, +y, -x, -y.
std::vector<std::size_t> spiral_arm_lengths(const SpiralParams& params);

/// A discrete logarithmic spiral from the identity in systems::grid(); the x
/// axis is the {a, b} factor and the y axis the {c, d} factor.
EdgePath spiral_path(const CoxeterSystem& grid, const SpiralParams& params);

}  // namespace coxwalls
