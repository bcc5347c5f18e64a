#include "coxwalls/paths.hpp"

#include <algorithm>
#include <map>

#include "coxwalls/errors.hpp"
#include <limits>

namespace coxwalls {

EdgePath make_path(const CoxeterSystem& sys, Element start, Word letters) {
  validate_word(sys, letters);
  return EdgePath{std::move(start), std::move(letters)};
}

EdgePath make_path(const CoxeterSystem& sys, std::string_view start, std::string_view letters) {
  return make_path(sys, normal_form(sys, start), sys.parse_word(letters));
}

std::vector<Element> vertices(const CoxeterSystem& sys, const EdgePath& p) {
  std::vector<Element> out;
  out.reserve(p.size() + 1);
  out.push_back(p.start);
  for (Letter s : p.letters) out.push_back(multiply(sys, out.back(), s));
  return out;
}

Element end_vertex(const CoxeterSystem& sys, const EdgePath& p) {
  return normal_form(sys, concat(p.start.word(), p.letters));
}

std::vector<Wall> wall_sequence(const CoxeterSystem& sys, const EdgePath& p) {
  const auto vs = vertices(sys, p);
  std::vector<Wall> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(edge_wall(sys, vs[i], p.letters[i]));
  return out;
}

bool is_geodesic(const CoxeterSystem& sys, const EdgePath& p) {
  return distance(sys, p.start, end_vertex(sys, p)) == p.size();
}

QuasiGeodesicCheck is_quasi_geodesic(const CoxeterSystem& sys, const EdgePath& p,
                                     const QuasiGeodesicParams& params) {
  const auto vs = vertices(sys, p);
  QuasiGeodesicCheck out;
  std::optional<Rational> worst;
  for (std::size_t s = 0; s < vs.size(); ++s) {
    for (std::size_t t = s + 1; t < vs.size(); ++t) {
      const Rational excess = Rational(static_cast<std::int64_t>(t - s)) -
                              params.lambda * Rational(static_cast<std::int64_t>(distance(sys, vs[s], vs[t]))) -
                              params.epsilon;
      if (excess > Rational(0) && (!worst || excess > *worst)) {
        worst = excess;
        out.witness = std::make_pair(s, t);
      }
    }
  }
  out.ok = !worst.has_value();
  return out;
}

Rational minimal_epsilon(const CoxeterSystem& sys, const EdgePath& p, const Rational& lambda) {
  const auto vs = vertices(sys, p);
  Rational best(0);
  for (std::size_t s = 0; s < vs.size(); ++s) {
    for (std::size_t t = s + 1; t < vs.size(); ++t) {
      const Rational need = Rational(static_cast<std::int64_t>(t - s)) -
                            lambda * Rational(static_cast<std::int64_t>(distance(sys, vs[s], vs[t])));
      best = std::max(best, need);
    }
  }
  return best;
}

std::size_t defect(const CoxeterSystem& sys, const Element& a, const Element& v, const Element& b) {
  const std::size_t total = distance(sys, a, v) + distance(sys, v, b);
  return (total - distance(sys, a, b)) / 2;
}

BracketReport bracket_report(const CoxeterSystem& sys, const EdgePath& p) {
  const auto walls = wall_sequence(sys, p);
  // A wall brackets vertex t iff it has an edge before t (index < t) and one
  // after t (index >= t); only its first and last edges matter.
  std::map<Wall, std::pair<std::size_t, std::size_t>> span;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    auto [it, fresh] = span.try_emplace(walls[i], i, i);
    if (!fresh) it->second.second = i;
  }
  BracketReport out;
  out.per_vertex.assign(p.size() + 1, 0);
  out.witnesses.assign(p.size() + 1, {});
  for (const auto& [wall, range] : span) {
    for (std::size_t t = range.first + 1; t <= range.second; ++t) {
      ++out.per_vertex[t];
      out.witnesses[t].push_back(wall);
    }
  }
  out.max = *std::max_element(out.per_vertex.begin(), out.per_vertex.end());
  return out;
}

std::size_t bracket_number(const BracketReport& report, std::size_t first, std::size_t last) {
  if (first > last || last >= report.per_vertex.size()) throw InvalidInput("vertex range out of bounds");
  return *std::max_element(report.per_vertex.begin() + static_cast<std::ptrdiff_t>(first),
                           report.per_vertex.begin() + static_cast<std::ptrdiff_t>(last) + 1);
}

EdgePath delete_pair(const CoxeterSystem& sys, const EdgePath& p, std::size_t i, std::size_t j) {
  if (i >= j || j >= p.size()) {
    throw InvalidInput("deletion needs edge indices i < j < " + std::to_string(p.size()));
  }
  const Element vi = normal_form(sys, concat(p.start.word(), std::span<const Letter>(p.letters).first(i)));
  const Element vj = normal_form(sys, concat(p.start.word(), std::span<const Letter>(p.letters).first(j)));
  if (edge_wall(sys, vi, p.letters[i]) != edge_wall(sys, vj, p.letters[j])) {
    throw InvalidInput("invalid deletion: edges " + std::to_string(i) + " and " + std::to_string(j) +
                       " lie in different walls");
  }
  Word letters;
  letters.reserve(p.size() - 2);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k != i && k != j) letters.push_back(p.letters[k]);
  }
  return EdgePath{p.start, std::move(letters)};
}

EdgePath subpath(const CoxeterSystem& sys, const EdgePath& p, std::size_t i, std::size_t j) {
  if (i > j || j > p.size()) throw InvalidInput("subpath indices out of range");
  const auto prefix = std::span<const Letter>(p.letters).first(i);
  return EdgePath{normal_form(sys, concat(p.start.word(), prefix)),
                  Word(p.letters.begin() + static_cast<std::ptrdiff_t>(i),
                       p.letters.begin() + static_cast<std::ptrdiff_t>(j))};
}

EdgePath concat(const CoxeterSystem& sys, const EdgePath& p, const EdgePath& q) {
  if (end_vertex(sys, p) != q.start) throw InvalidInput("concatenation needs end(p) = start(q)");
  return EdgePath{p.start, concat(p.letters, q.letters)};
}

EdgePath reverse(const CoxeterSystem& sys, const EdgePath& p) {
  return EdgePath{end_vertex(sys, p), reversed(p.letters)};
}

std::size_t tracking_distance(const CoxeterSystem& sys, const EdgePath& p, const EdgePath& q) {
  const auto ps = vertices(sys, p);
  const auto qs = vertices(sys, q);
  std::size_t worst = 0;
  for (const Element& u : ps) {
    // Consecutive vertices of q are adjacent, so d(u, q_{j+k}) >= d(u, q_j) - k;
    // skip indices that cannot beat the best so far, and stop once u cannot
    // raise the overall maximum.
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < qs.size();) {
      const std::size_t d = distance(sys, u, qs[j]);
      best = std::min(best, d);
      if (best <= worst) break;
      j += d - best + 1;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace coxwalls
