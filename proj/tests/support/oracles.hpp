#pragma once

// Brute-force oracles shared by the unit, property and acceptance tests.
// Everything here uses only braid-move rewriting (WordEngine::Tits) or plain
// enumeration, never the root representations the library runs on.

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxwalls/core.hpp"
#include "coxwalls/paths.hpp"
#include "coxwalls/systems.hpp"
#include "coxwalls/walls.hpp"

namespace coxwalls::testing {

struct NamedSystem {
  std::string name;
  CoxeterSystem sys;
};

/// The systems every acceptance sweep runs over.
inline std::vector<NamedSystem> standard_systems() {
  return {
      {"Dinf", systems::infinite_dihedral()}, {"A2", systems::dihedral(3)},
      {"B2", systems::dihedral(4)},           {"A3", systems::a3()},
      {"A1xA2", systems::a1_x_a2()},          {"A2tilde", systems::affine_a2()},
      {"grid", systems::grid()},
  };
}

inline Word tits_nf(const CoxeterSystem& sys, const Word& w) { return normal_form(sys, w, WordEngine::Tits).word(); }

inline std::size_t tits_length(const CoxeterSystem& sys, const Word& w) { return tits_nf(sys, w).size(); }

inline std::size_t oracle_distance(const CoxeterSystem& sys, const Word& a, const Word& b) {
  return tits_length(sys, concat(reversed(a), b));
}

/// Breadth-first search of the Cayley graph from the identity; vertices are
/// identified by their braid-rewriting normal form. Maps vertex -> distance.
inline std::map<Word, std::size_t> bfs_ball(const CoxeterSystem& sys, std::size_t radius) {
  std::map<Word, std::size_t> dist{{Word{}, 0}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t r = 1; r <= radius && !frontier.empty(); ++r) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Letter s = 0; s < sys.rank(); ++s) {
        Word v = w;
        v.push_back(s);
        v = tits_nf(sys, v);
        if (dist.emplace(v, r).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

/// True iff v lies on the identity's side of the wall of reflection r,
/// decided by braid-rewriting lengths.
inline bool oracle_identity_side(const CoxeterSystem& sys, const Word& r, const Word& v) {
  return tits_length(sys, concat(r, v)) > tits_length(sys, v);
}

/// Reflections (as braid normal forms) whose walls separate 1 from w, by
/// scanning every conjugate u s u^{-1} with |u| < |w|.
inline std::set<Word> oracle_separating_from_identity(const CoxeterSystem& sys, const Word& w) {
  std::set<Word> out;
  const std::size_t len = tits_length(sys, w);
  if (len == 0) return out;
  for (const auto& [u, d] : bfs_ball(sys, len - 1)) {
    for (Letter s = 0; s < sys.rank(); ++s) {
      Word r = u;
      r.push_back(s);
      r.insert(r.end(), u.rbegin(), u.rend());
      r = tits_nf(sys, r);
      if (!oracle_identity_side(sys, r, w)) out.insert(r);
    }
  }
  return out;
}

/// Crossing seen inside a ball: all four side combinations occur.
inline bool oracle_quadrants_meet(const CoxeterSystem& sys, const Word& r1, const Word& r2,
                                  const std::map<Word, std::size_t>& ball) {
  bool seen[2][2] = {{false, false}, {false, false}};
  for (const auto& [v, d] : ball) {
    seen[oracle_identity_side(sys, r1, v)][oracle_identity_side(sys, r2, v)] = true;
  }
  return seen[0][0] && seen[0][1] && seen[1][0] && seen[1][1];
}

/// Largest pairwise-crossing subset, by exhaustive subset search.
inline std::size_t brute_max_antichain(const std::vector<std::vector<bool>>& cross) {
  const std::size_t n = cross.size();
  std::size_t best = n == 0 ? 0 : 1;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountl(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1UL)) continue;
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if ((mask >> j & 1UL) && !cross[i][j]) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

inline EdgePath random_path(const CoxeterSystem& sys, std::mt19937_64& rng, std::size_t max_len,
                            const Element& start = Element()) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, static_cast<int>(sys.rank()) - 1);
  Word letters(len_dist(rng));
  for (auto& s : letters) s = static_cast<Letter>(letter_dist(rng));
  return EdgePath{start, letters};
}

/// A random geodesic of up to `len` edges: every step moves one further from
/// the start.
inline EdgePath random_geodesic(const CoxeterSystem& sys, std::mt19937_64& rng, std::size_t len,
                                const Element& start = Element()) {
  EdgePath p{start, {}};
  Element end = start;
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Letter> options;
    for (Letter s = 0; s < sys.rank(); ++s) {
      if (distance(sys, start, multiply(sys, end, s)) == k + 1) options.push_back(s);
    }
    if (options.empty()) break;
    const Letter s = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    p.letters.push_back(s);
    end = multiply(sys, end, s);
  }
  return p;
}

}  // namespace coxwalls::testing
