#pragma once

// Walls of the Cayley graph: reflections, sides, separation, crossing,
// the chain order on separating walls, Dilworth partitions and empirical
// Parallel Wall constants.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "coxwalls/core.hpp"

namespace coxwalls {

/// A wall, identified by its reflection in normal form.
class Wall {
 public:
  /// Trusts that `reflection` is a reflection; see wall_from_reflection.
  explicit Wall(Element reflection) : reflection_(std::move(reflection)) {}

  const Element& reflection() const noexcept { return reflection_; }

  friend bool operator==(const Wall&, const Wall&) = default;
  friend std::strong_ordering operator<=>(const Wall& a, const Wall& b) noexcept {
    return a.reflection_ <=> b.reflection_;
  }

 private:
  Element reflection_;
};

enum class Side { IdentitySide, FarSide };
enum class Crossing { Cross, Parallel, Undetermined };

const char* to_string(Side side) noexcept;
const char* to_string(Crossing verdict) noexcept;

/// Checks that `r` is a reflection (odd length, involution, conjugate of a
/// generator) and wraps it; InvalidInput otherwise.
Wall wall_from_reflection(const CoxeterSystem& sys, const Element& r);

/// The wall of the edge from u labelled t: reflection u t u^{-1}.
Wall edge_wall(const CoxeterSystem& sys, const Element& u, Letter t);

/// A vertex u and label t whose edge lies in the wall (u t u^{-1} = r).
std::pair<Element, Letter> support_edge(const CoxeterSystem& sys, const Wall& q);

/// IdentitySide iff l(r v) > l(v).
Side side_of(const CoxeterSystem& sys, const Wall& q, const Element& v);
bool separates(const CoxeterSystem& sys, const Wall& q, const Element& a, const Element& b);

/// Walls of the ShortLex geodesic from a to b, in crossing order.
std::vector<Wall> walls_separating(const CoxeterSystem& sys, const Element& a, const Element& b);

/// Cross iff (r1 r2)^k = 1 for some k <= order_cap and the root test
/// |B(beta1, beta2)| < 1 agrees; Parallel iff no such k exists and the root
/// test says |B| >= 1 (within tolerance); Undetermined otherwise.
/// InvalidInput when q1 == q2. order_cap < 0 means the system's limit.
Crossing crosses(const CoxeterSystem& sys, const Wall& q1, const Wall& q2, int order_cap = -1);

/// |B(beta1, beta2)| for the unit roots of the two walls.
long double root_cosine(const CoxeterSystem& sys, const Wall& q1, const Wall& q2);

/// Vertices u of ball(radius) whose edge u -- u s is in q for some s.
std::vector<Element> wall_support_in_ball(const CoxeterSystem& sys, const Wall& q, std::size_t radius);

/// Every wall meeting the given vertex set, with its support restricted to it.
std::map<Wall, std::vector<Element>> wall_supports(const CoxeterSystem& sys, std::span<const Element> vertices);

/// Distance from v to the support of q found inside ball(radius).
std::optional<std::size_t> wall_distance(const CoxeterSystem& sys, const Element& v, const Wall& q,
                                         std::size_t radius);
std::optional<std::size_t> wall_distance(const CoxeterSystem& sys, const Element& v,
                                         std::span<const Element> support);

/// p <= q in the chain order based at x: p == q, or p parallel to q and p
/// separates x from the support of q. Throws Undetermined.
bool chain_leq(const CoxeterSystem& sys, const Wall& p, const Wall& q, const Element& x);

struct ChainPartition {
  Element from;
  Element to;
  /// Each chain is listed in increasing chain order (nearest `from` first);
  /// chains are sorted by ShortLex of their minimal wall.
  std::vector<std::vector<Wall>> chains;
};

/// Minimum chain cover of walls_separating(a, b) via bipartite matching.
/// Throws Undetermined naming the first undecidable pair.
ChainPartition dilworth_partition(const CoxeterSystem& sys, const Element& a, const Element& b);

/// Largest set of pairwise crossing walls (exact clique search).
std::size_t max_antichain(const CoxeterSystem& sys, std::span<const Wall> walls);

struct ParallelWallWitness {
  Element vertex;
  Wall wall;
  std::size_t distance;
};

struct ParallelWallEstimate {
  std::size_t n = 0;
  std::size_t radius = 0;
  std::size_t estimate = 0;
  std::vector<ParallelWallWitness> witnesses;
};

/// Lower estimate of P(n) from the walls whose support meets ball(radius).
/// The Cayley graph is vertex-transitive, so the base vertex is the identity:
/// estimate = 1 + max d(1, q) over walls q for which fewer than n pairwise
/// parallel walls separate 1 from the in-ball support of q.
ParallelWallEstimate estimate_parallel_wall_constant(const CoxeterSystem& sys, std::size_t n,
                                                     std::size_t radius);

}  // namespace coxwalls

template <>
struct std::hash<coxwalls::Wall> {
  std::size_t operator()(const coxwalls::Wall& q) const noexcept {
    return std::hash<coxwalls::Element>{}(q.reflection());
  }
};
