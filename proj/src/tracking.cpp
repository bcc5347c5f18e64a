#include "coxwalls/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "coxwalls/errors.hpp"
#include "detail/system_data.hpp"
#include "detail/walls.hpp"

namespace coxwalls {

namespace {

Word without(std::span<const Letter> w, std::size_t k) {
  Word out;
  out.reserve(w.size() - 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != k) out.push_back(w[i]);
  }
  return out;
}

// Index of the last letter of the geodesic word `step` (read from a) whose
// wall separates v from b, if any. The wall of edge k has root u_k(alpha_s),
// u_k = a step[0..k); x lies on its identity side iff x^{-1} of that root is
// positive.
std::optional<std::size_t> last_doubly_crossed(const CoxeterSystem& sys, const Element& a, const Word& step,
                                               const Element& v, const Element& b) {
  return detail::with_representation(sys, [&](const auto& rep) -> std::optional<std::size_t> {
    auto m = rep.matrix_of(a.word());
    std::vector<typename std::decay_t<decltype(rep)>::Vector> roots;
    roots.reserve(step.size());
    for (Letter s : step) {
      roots.push_back(rep.column(m, s));
      rep.right_multiply(m, s);
    }
    const auto v_inv = rep.inverse_matrix_of(v.word());
    const auto b_inv = rep.inverse_matrix_of(b.word());
    for (std::size_t k = roots.size(); k-- > 0;) {
      if (rep.sign(rep.apply(v_inv, roots[k])) != rep.sign(rep.apply(b_inv, roots[k]))) return k;
    }
    return std::nullopt;
  });
}

class Straightener {
 public:
  explicit Straightener(const CoxeterSystem& sys) : sys_(sys) {}

  EdgePath run(const EdgePath& p, std::size_t depth) {
    if (depth > static_cast<std::size_t>(sys_.limits().recursion_depth)) {
      throw CapExceeded("straightening recursion deeper than " + std::to_string(sys_.limits().recursion_depth));
    }
    const Element a = p.start;
    const Element b = end_vertex(sys_, p);
    if (a == b) return EdgePath{a, {}};
    if (is_geodesic(sys_, p)) return p;

    EdgePath path = geodesic_approximation(sys_, p).approx;
    std::vector<Wall> walls = wall_sequence(sys_, path);
    const ChainPartition partition = dilworth_partition(sys_, a, b);

    if (partition.chains.size() == 1) {
      remove_repeats(path, walls, depth);
    } else {
      for (std::size_t c = 0; c < partition.chains.size(); ++c) {
        const std::set<Wall> chain(partition.chains[c].begin(), partition.chains[c].end());
        while (auto range = first_recrossing(walls, chain)) {
          splice(path, walls, range->first, range->second, depth, c);
        }
      }
    }
    if (path.size() != distance(sys_, a, b)) {
      throw Error("straightening did not reach a geodesic from " + sys_.format(a.word()) + " to " +
                  sys_.format(b.word()));
    }
    return path;
  }

  std::vector<StraightenEvent> take_trace() { return std::move(trace_); }

 private:
  // First edge i lying in a wall of the chain that is crossed again later,
  // paired with the last edge j in that wall.
  static std::optional<std::pair<std::size_t, std::size_t>> first_recrossing(const std::vector<Wall>& walls,
                                                                            const std::set<Wall>& chain) {
    std::map<Wall, std::size_t> last;
    for (std::size_t k = 0; k < walls.size(); ++k) {
      if (chain.contains(walls[k])) last[walls[k]] = k;
    }
    for (std::size_t k = 0; k < walls.size(); ++k) {
      auto it = last.find(walls[k]);
      if (it != last.end() && it->second > k) return std::make_pair(k, it->second);
    }
    return std::nullopt;
  }

  // Replaces edges [i, j) by a straightened geodesic between their endpoints.
  void splice(EdgePath& path, std::vector<Wall>& walls, std::size_t i, std::size_t j, std::size_t depth,
              std::size_t chain) {
    const EdgePath piece = subpath(sys_, path, i, j);
    const EdgePath geodesic = run(piece, depth + 1);
    const auto new_walls = wall_sequence(sys_, geodesic);

    Word letters(path.letters.begin(), path.letters.begin() + static_cast<std::ptrdiff_t>(i));
    letters.insert(letters.end(), geodesic.letters.begin(), geodesic.letters.end());
    letters.insert(letters.end(), path.letters.begin() + static_cast<std::ptrdiff_t>(j), path.letters.end());
    std::vector<Wall> updated(walls.begin(), walls.begin() + static_cast<std::ptrdiff_t>(i));
    updated.insert(updated.end(), new_walls.begin(), new_walls.end());
    updated.insert(updated.end(), walls.begin() + static_cast<std::ptrdiff_t>(j), walls.end());

    path.letters = std::move(letters);
    walls = std::move(updated);
    trace_.push_back({StraightenEvent::Kind::Splice, depth, chain, i, j, geodesic.size()});
  }

  // Deletes repeated-wall pairs, innermost (smallest gap) first.
  void remove_repeats(EdgePath& path, std::vector<Wall>& walls, std::size_t depth) {
    for (;;) {
      std::map<Wall, std::size_t> previous;
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t k = 0; k < walls.size(); ++k) {
        auto [it, fresh] = previous.try_emplace(walls[k], k);
        if (!fresh) {
          if (!best || k - it->second < best->second - best->first) best = std::make_pair(it->second, k);
          it->second = k;
        }
      }
      if (!best) return;
      const auto [i, j] = *best;
      const Word& r = walls[i].reflection().word();
      for (std::size_t k = i + 1; k < j; ++k) {
        walls[k] = Wall(normal_form(sys_, concat(concat(r, walls[k].reflection().word()), r)));
      }
      path = delete_pair_unchecked(path, i, j);
      walls.erase(walls.begin() + static_cast<std::ptrdiff_t>(j));
      walls.erase(walls.begin() + static_cast<std::ptrdiff_t>(i));
      trace_.push_back({StraightenEvent::Kind::Delete, depth, 0, i, j, 0});
    }
  }

  static EdgePath delete_pair_unchecked(const EdgePath& p, std::size_t i, std::size_t j) {
    Word letters;
    letters.reserve(p.size() - 2);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k != i && k != j) letters.push_back(p.letters[k]);
    }
    return EdgePath{p.start, std::move(letters)};
  }

  const CoxeterSystem& sys_;
  std::vector<StraightenEvent> trace_;
};

}  // namespace

ProjectionResult project_vertex(const CoxeterSystem& sys, const Element& a, const Element& b, const Element& v) {
  ProjectionResult out{v, {}, 0};
  for (;;) {
    const Word step = multiply(sys, inverse(sys, a), out.projected).word();
    const auto k = last_doubly_crossed(sys, a, step, out.projected, b);
    if (!k) return out;
    const Word prefix = concat(a.word(), std::span<const Letter>(step).first(*k));
    out.reflections_used.emplace_back(detail::reflection_of_edge(sys, prefix, step[*k]));
    // Reflecting v = a step across the wall of edge k drops letter k.
    out.projected = normal_form(sys, concat(a.word(), without(step, *k)));
    ++out.steps;
  }
}

ApproximationResult geodesic_approximation(const CoxeterSystem& sys, const EdgePath& p) {
  const auto vs = vertices(sys, p);
  const Element& a = vs.front();
  const Element& b = vs.back();
  ApproximationResult out{EdgePath{a, {}}, 0, {}};
  std::optional<Element> previous;
  for (const Element& v : vs) {
    const Element w = project_vertex(sys, a, b, v).projected;
    out.L_achieved = std::max(out.L_achieved, distance(sys, v, w));
    if (previous) {
      const Word joint = multiply(sys, inverse(sys, *previous), w).word();
      out.approx.letters.insert(out.approx.letters.end(), joint.begin(), joint.end());
    }
    out.segment_boundaries.push_back(out.approx.size());
    previous = w;
  }
  return out;
}

const char* to_string(StraightenEvent::Kind kind) noexcept {
  return kind == StraightenEvent::Kind::Splice ? "splice" : "delete";
}

StraightenResult straighten(const CoxeterSystem& sys, const EdgePath& p) {
  Straightener worker(sys);
  StraightenResult out;
  out.geodesic = worker.run(p, 0);
  out.K_achieved = tracking_distance(sys, p, out.geodesic);
  out.trace = worker.take_trace();
  return out;
}

Rational double_tracking_bound(const Rational& lambda2, const Rational& epsilon2, std::size_t K) {
  const auto k = static_cast<std::int64_t>(K);
  return lambda2 * Rational(2 * k + 1) + epsilon2 + Rational(k);
}

std::variant<CorrespondenceReport, Infeasible> tracking_correspondence(const CoxeterSystem& sys, const EdgePath& p1,
                                                                      const EdgePath& p2, std::size_t K,
                                                                      const QuasiGeodesicParams& p2_params) {
  const auto v1 = vertices(sys, p1);
  const auto v2 = vertices(sys, p2);
  if (const std::size_t d = distance(sys, v1.front(), v2.front()); d > K) {
    return Infeasible{"start vertices farther apart than K", 0, d};
  }
  if (const std::size_t d = distance(sys, v1.back(), v2.back()); d > K) {
    return Infeasible{"end vertices farther apart than K", v1.size() - 1, d};
  }

  CorrespondenceReport out;
  out.K = K;
  out.a_of.resize(v1.size());
  for (std::size_t n = 0; n < v1.size(); ++n) {
    std::size_t best = 0;
    std::size_t best_d = distance(sys, v1[n], v2[0]);
    for (std::size_t j = 1; j < v2.size() && best_d > 0; ++j) {
      const std::size_t d = distance(sys, v1[n], v2[j]);
      if (d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best_d > K) return Infeasible{"vertex not within K of the second path", n, best_d};
    out.a_of[n] = best;
  }
  out.a_of.front() = 0;
  out.a_of.back() = v2.size() - 1;

  out.bound = double_tracking_bound(p2_params.lambda, p2_params.epsilon, K);
  out.reverse_distance = tracking_distance(sys, p2, p1);
  out.bound_holds = Rational(static_cast<std::int64_t>(out.reverse_distance)) <= out.bound;
  return out;
}

EdgePath periodic_path(const CoxeterSystem& sys, const Element& g, std::size_t k) {
  if (g.is_identity()) throw InvalidInput("periodic path needs a non-identity element");
  validate_word(sys, g.word());
  EdgePath out{Element(), {}};
  out.letters.reserve(g.length() * k);
  for (std::size_t i = 0; i < k; ++i) out.letters.insert(out.letters.end(), g.word().begin(), g.word().end());
  return out;
}

std::vector<std::size_t> spiral_arm_lengths(const SpiralParams& params) {
  if (params.windings == 0) throw InvalidInput("windings must be at least 1");
  if (!(params.scale > 0) || !(params.growth > 1)) throw InvalidInput("spiral needs scale > 0 and growth > 1");
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= params.windings; ++k) {
    for (int j = 0; j < 4; ++j) {
      const double exponent = static_cast<double>(k) + j / 4.0;
      out.push_back(static_cast<std::size_t>(std::llround(params.scale * std::pow(params.growth, exponent))));
    }
  }
  return out;
}

EdgePath spiral_path(const CoxeterSystem& grid, const SpiralParams& params) {
  if (grid.rank() != 4 || grid.m(0, 1) != kInfinity || grid.m(2, 3) != kInfinity || grid.m(0, 2) != 2 ||
      grid.m(0, 3) != 2 || grid.m(1, 2) != 2 || grid.m(1, 3) != 2) {
    throw InvalidInput("spiral paths live in the grid system (two commuting infinite dihedral factors)");
  }
  // In one infinite dihedral factor the edge between positions x and x + 1 is
  // labelled by the first generator when x is even and the second when odd.
  const auto step = [](long long& x, int direction, Letter even, Letter odd) {
    const long long lower = direction > 0 ? x : x - 1;
    x += direction;
    return (lower % 2 == 0) ? even : odd;
  };
  EdgePath out{Element(), {}};
  long long x = 0;
  long long y = 0;
  const auto arms = spiral_arm_lengths(params);
  for (std::size_t arm = 0; arm < arms.size(); ++arm) {
    const int direction = (arm % 4 < 2) ? 1 : -1;
    const bool horizontal = arm % 2 == 0;
    for (std::size_t k = 0; k < arms[arm]; ++k) {
      out.letters.push_back(horizontal ? step(x, direction, 0, 1) : step(y, direction, 2, 3));
    }
  }
  return out;
}

}  // namespace coxwalls
