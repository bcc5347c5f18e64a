#include "coxwalls/walls.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "coxwalls/errors.hpp"
#include "detail/graph.hpp"
#include "detail/system_data.hpp"
#include "detail/walls.hpp"

namespace coxwalls {

namespace {

std::string describe(const CoxeterSystem& sys, const Wall& q) {
  const auto& w = q.reflection().word();
  return w.empty() ? std::string("1") : sys.format(w);
}

bool has_finite_order(const CoxeterSystem& sys, const Word& word, int cap) {
  return detail::with_representation(sys, [&](const auto& rep) {
    const auto m = rep.matrix_of(word);
    auto power = m;
    for (int k = 1; k <= cap; ++k) {
      if (rep.is_identity(power)) return true;
      if (k < cap) power = rep.multiply(power, m);
    }
    return false;
  });
}

}  // namespace

namespace detail {

Element reflection_of_edge(const CoxeterSystem& sys, std::span<const Letter> vertex_word, Letter t) {
  Word w;
  w.reserve(2 * vertex_word.size() + 1);
  w.insert(w.end(), vertex_word.begin(), vertex_word.end());
  w.push_back(t);
  w.insert(w.end(), vertex_word.rbegin(), vertex_word.rend());
  return normal_form(sys, w);
}

std::vector<long double> unit_root(const CoxeterSystem& sys, const Wall& q) {
  // r(x) = x - 2B(beta, x) beta, so every column of M(r) - I is a multiple
  // of beta; take the largest one, normalise and make it positive.
  const auto& geo = SystemAccess::data(sys).geometric;
  auto m = geo.matrix_of(q.reflection().word());
  const std::size_t n = sys.rank();
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] -= 1.0L;
  std::size_t best_col = 0;
  long double best_norm = -1;
  for (std::size_t j = 0; j < n; ++j) {
    long double norm = 0;
    for (std::size_t i = 0; i < n; ++i) norm += m[i * n + j] * m[i * n + j];
    if (norm > best_norm) {
      best_norm = norm;
      best_col = j;
    }
  }
  std::vector<long double> beta = geo.column(m, best_col);
  const long double scale = std::sqrt(bilinear(sys, beta, beta));
  if (!(scale > 0)) throw NumericError("degenerate root for " + sys.format(q.reflection().word()));
  const long double sign = geo.sign(beta) > 0 ? 1.0L : -1.0L;
  for (auto& x : beta) x *= sign / scale;
  return beta;
}

long double bilinear(const CoxeterSystem& sys, const std::vector<long double>& x,
                     const std::vector<long double>& y) {
  const auto& gram = SystemAccess::data(sys).gram;
  const std::size_t n = sys.rank();
  long double acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) acc += x[i] * gram[i * n + j] * y[j];
  }
  return acc;
}

}  // namespace detail

const char* to_string(Side side) noexcept {
  return side == Side::IdentitySide ? "identity-side" : "far-side";
}

const char* to_string(Crossing verdict) noexcept {
  switch (verdict) {
    case Crossing::Cross: return "cross";
    case Crossing::Parallel: return "parallel";
    case Crossing::Undetermined: return "undetermined";
  }
  return "?";
}

Wall edge_wall(const CoxeterSystem& sys, const Element& u, Letter t) {
  if (t >= sys.rank()) throw InvalidInput("letter " + std::to_string(t) + " is not a generator index");
  return Wall(detail::reflection_of_edge(sys, u.word(), t));
}

std::pair<Element, Letter> support_edge(const CoxeterSystem& sys, const Wall& q) {
  // For a reflection r != s with left descent s, l(s r s) = l(r) - 2, and a
  // support vertex of r is s times a support vertex of s r s.
  Word prefix;
  Element current = q.reflection();
  while (current.length() > 1) {
    const Letter s = current.word().front();
    Word conj;
    conj.reserve(current.length() + 2);
    conj.push_back(s);
    conj.insert(conj.end(), current.word().begin(), current.word().end());
    conj.push_back(s);
    Element next = normal_form(sys, conj);
    if (next.length() + 2 != current.length()) {
      throw InvalidInput("element " + sys.format(q.reflection().word()) + " is not a reflection");
    }
    prefix.push_back(s);
    current = std::move(next);
  }
  if (current.length() != 1) throw InvalidInput("the identity is not a reflection");
  return {normal_form(sys, prefix), current.word().front()};
}

Wall wall_from_reflection(const CoxeterSystem& sys, const Element& r) {
  if (r.length() % 2 == 0) throw InvalidInput("element " + sys.format(r.word()) + " has even length");
  if (!multiply(sys, r, r).is_identity()) {
    throw InvalidInput("element " + sys.format(r.word()) + " is not an involution");
  }
  Wall q(r);
  support_edge(sys, q);
  return q;
}

Side side_of(const CoxeterSystem& sys, const Wall& q, const Element& v) {
  const Element moved = multiply(sys, q.reflection(), v);
  return moved.length() > v.length() ? Side::IdentitySide : Side::FarSide;
}

bool separates(const CoxeterSystem& sys, const Wall& q, const Element& a, const Element& b) {
  return side_of(sys, q, a) != side_of(sys, q, b);
}

std::vector<Wall> walls_separating(const CoxeterSystem& sys, const Element& a, const Element& b) {
  const Element step = multiply(sys, inverse(sys, a), b);
  std::vector<Wall> out;
  out.reserve(step.length());
  Word vertex = a.word();
  for (Letter t : step.word()) {
    out.emplace_back(detail::reflection_of_edge(sys, vertex, t));
    vertex.push_back(t);
  }
  return out;
}

long double root_cosine(const CoxeterSystem& sys, const Wall& q1, const Wall& q2) {
  return std::fabs(detail::bilinear(sys, detail::unit_root(sys, q1), detail::unit_root(sys, q2)));
}

Crossing crosses(const CoxeterSystem& sys, const Wall& q1, const Wall& q2, int order_cap) {
  if (q1 == q2) throw InvalidInput("crossing test needs two distinct walls");
  const int cap = order_cap < 0 ? sys.limits().order_cap : order_cap;
  const bool cacheable = cap == sys.limits().order_cap;
  auto key = q1 < q2 ? std::make_pair(q1.reflection().word(), q2.reflection().word())
                     : std::make_pair(q2.reflection().word(), q1.reflection().word());
  auto& caches = detail::SystemAccess::caches(sys);
  if (cacheable) {
    if (auto hit = caches.find_crossing(key)) return static_cast<Crossing>(*hit);
  }

  const bool root_cross = root_cosine(sys, q1, q2) < 1.0L - sys.limits().tolerance;
  const bool finite = has_finite_order(sys, concat(q1.reflection().word(), q2.reflection().word()), cap);
  Crossing verdict = Crossing::Undetermined;
  if (finite && root_cross) verdict = Crossing::Cross;
  if (!finite && !root_cross) verdict = Crossing::Parallel;

  if (cacheable) caches.store_crossing(std::move(key), static_cast<int>(verdict));
  return verdict;
}

std::map<Wall, std::vector<Element>> wall_supports(const CoxeterSystem& sys, std::span<const Element> vertices) {
  std::map<Wall, std::vector<Element>> out;
  for (const Element& u : vertices) {
    for (Letter s = 0; s < sys.rank(); ++s) out[edge_wall(sys, u, s)].push_back(u);
  }
  for (auto& [wall, support] : out) std::sort(support.begin(), support.end());
  return out;
}

std::vector<Element> wall_support_in_ball(const CoxeterSystem& sys, const Wall& q, std::size_t radius) {
  std::vector<Element> out;
  for (const Element& u : ball(sys, radius)) {
    const Element conj = multiply(sys, multiply(sys, inverse(sys, u), q.reflection()), u);
    if (conj.length() == 1) out.push_back(u);
  }
  return out;
}

std::optional<std::size_t> wall_distance(const CoxeterSystem& sys, const Element& v,
                                         std::span<const Element> support) {
  std::optional<std::size_t> best;
  for (const Element& u : support) {
    const std::size_t d = distance(sys, v, u);
    if (!best || d < *best) best = d;
    if (*best == 0) break;
  }
  return best;
}

std::optional<std::size_t> wall_distance(const CoxeterSystem& sys, const Element& v, const Wall& q,
                                         std::size_t radius) {
  const auto support = wall_support_in_ball(sys, q, radius);
  return wall_distance(sys, v, support);
}

bool chain_leq(const CoxeterSystem& sys, const Wall& p, const Wall& q, const Element& x) {
  if (p == q) return true;
  switch (crosses(sys, p, q)) {
    case Crossing::Cross: return false;
    case Crossing::Undetermined: throw Undetermined(describe(sys, p), describe(sys, q));
    case Crossing::Parallel: break;
  }
  const Element u = support_edge(sys, q).first;
  return side_of(sys, p, x) != side_of(sys, p, u);
}

ChainPartition dilworth_partition(const CoxeterSystem& sys, const Element& a, const Element& b) {
  const std::vector<Wall> walls = walls_separating(sys, a, b);
  const std::size_t n = walls.size();

  // Walls are listed in the order a geodesic from a crosses them, so for a
  // parallel pair the earlier one separates a from the later one.
  std::vector<std::vector<int>> successors(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Crossing verdict = crosses(sys, walls[i], walls[j]);
      if (verdict == Crossing::Undetermined) throw Undetermined(describe(sys, walls[i]), describe(sys, walls[j]));
      if (verdict == Crossing::Parallel) successors[i].push_back(static_cast<int>(j));
    }
  }

  const std::vector<int> next = detail::maximum_matching(successors, n);
  std::vector<bool> has_predecessor(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (next[i] >= 0) has_predecessor[static_cast<std::size_t>(next[i])] = true;
  }

  ChainPartition out{a, b, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (has_predecessor[i]) continue;
    std::vector<Wall> chain;
    for (int k = static_cast<int>(i); k >= 0; k = next[static_cast<std::size_t>(k)]) {
      chain.push_back(walls[static_cast<std::size_t>(k)]);
    }
    out.chains.push_back(std::move(chain));
  }
  std::sort(out.chains.begin(), out.chains.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

std::size_t max_antichain(const CoxeterSystem& sys, std::span<const Wall> walls) {
  std::vector<Wall> distinct(walls.begin(), walls.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t n = distinct.size();
  detail::Adjacency adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Crossing verdict = crosses(sys, distinct[i], distinct[j]);
      if (verdict == Crossing::Undetermined) {
        throw Undetermined(describe(sys, distinct[i]), describe(sys, distinct[j]));
      }
      adj[i][j] = adj[j][i] = verdict == Crossing::Cross;
    }
  }
  return detail::maximum_clique(adj).size();
}

ParallelWallEstimate estimate_parallel_wall_constant(const CoxeterSystem& sys, std::size_t n,
                                                     std::size_t radius) {
  const Element origin;
  const std::vector<Element> vertices = ball(sys, radius);
  const auto supports = wall_supports(sys, vertices);

  ParallelWallEstimate out{n, radius, 0, {}};
  std::optional<std::size_t> best;
  for (const auto& [wall, support] : supports) {
    const Element& nearest = *std::min_element(support.begin(), support.end());
    const std::size_t d = nearest.length();
    if (best && d < *best) continue;

    std::vector<Wall> separating;
    for (const Wall& candidate : walls_separating(sys, origin, nearest)) {
      if (candidate == wall) continue;
      const bool all_far = std::all_of(support.begin(), support.end(), [&](const Element& u) {
        return side_of(sys, candidate, u) == Side::FarSide;
      });
      if (all_far) separating.push_back(candidate);
    }

    std::size_t parallel_family = separating.empty() ? 0 : 1;
    if (n > 1 && separating.size() >= n) {
      detail::Adjacency adj(separating.size(), std::vector<bool>(separating.size(), false));
      for (std::size_t i = 0; i < separating.size(); ++i) {
        for (std::size_t j = i + 1; j < separating.size(); ++j) {
          const Crossing verdict = crosses(sys, separating[i], separating[j]);
          if (verdict == Crossing::Undetermined) {
            throw Undetermined(describe(sys, separating[i]), describe(sys, separating[j]));
          }
          adj[i][j] = adj[j][i] = verdict == Crossing::Parallel;
        }
      }
      parallel_family = detail::maximum_clique(adj).size();
    }
    if (parallel_family >= n) continue;

    if (!best || d > *best) {
      best = d;
      out.witnesses.clear();
    }
    out.witnesses.push_back({origin, wall, d});
  }
  out.estimate = best.value_or(0) + 1;
  return out;
}

}  // namespace coxwalls
