#pragma once

#include <string>
#include <vector>

#include "coxwalls/core.hpp"

namespace coxwalls::detail {

/// Braid-move closure of a word. Stops early (with `pair_at` set) as soon as a
/// word exposing an adjacent equal pair is met.
struct ClosureResult {
  std::vector<std::string> words;  // closure members met so far
  std::string exposing;            // word with an adjacent equal pair, if any
  std::size_t pair_at = std::string::npos;
};

ClosureResult braid_closure(const CoxeterSystem& sys, const std::string& start, std::size_t cap,
                            bool stop_on_pair);

/// Tits rewriting: delete exposed pairs until the closure shows none.
std::string tits_reduce(const CoxeterSystem& sys, std::string w, std::size_t cap);

/// Lexicographically least member of the closure of a reduced word.
std::string tits_normal_form(const CoxeterSystem& sys, const std::string& reduced, std::size_t cap);

inline std::string to_key(std::span<const Letter> w) {
  std::string out(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = static_cast<char>(w[i]);
  return out;
}

inline Word from_key(const std::string& key) {
  Word out(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) out[i] = static_cast<Letter>(static_cast<unsigned char>(key[i]));
  return out;
}

}  // namespace coxwalls::detail
