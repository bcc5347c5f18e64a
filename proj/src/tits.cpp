#include "detail/tits.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "coxwalls/errors.hpp"

namespace coxwalls::detail {

namespace {

std::size_t find_pair(const std::string& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return i;
  }
  return std::string::npos;
}

// Cancels adjacent equal letters with a stack; the cheap part of Tits rewriting.
std::string free_reduce(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == c) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

ClosureResult braid_closure(const CoxeterSystem& sys, const std::string& start, std::size_t cap,
                            bool stop_on_pair) {
  ClosureResult result;
  std::unordered_set<std::string> seen{start};
  std::deque<std::string> queue{start};
  result.words.push_back(start);

  while (!queue.empty()) {
    std::string w = std::move(queue.front());
    queue.pop_front();
    if (const auto at = find_pair(w); at != std::string::npos) {
      if (stop_on_pair) {
        result.exposing = w;
        result.pair_at = at;
        return result;
      }
    }
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      const auto s = static_cast<unsigned char>(w[p]);
      const auto t = static_cast<unsigned char>(w[p + 1]);
      if (s == t) continue;
      const int m = sys.m(s, t);
      if (m == kInfinity || p + static_cast<std::size_t>(m) > w.size()) continue;
      bool alternating = true;
      for (int k = 2; k < m; ++k) {
        if (w[p + k] != w[p + k - 2]) {
          alternating = false;
          break;
        }
      }
      if (!alternating) continue;
      std::string next = w;
      for (int k = 0; k < m; ++k) next[p + k] = (k % 2 == 0) ? w[p + 1] : w[p];
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw CapExceeded("braid closure exceeded " + std::to_string(cap) + " words");
        }
        result.words.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return result;
}

std::string tits_reduce(const CoxeterSystem& sys, std::string w, std::size_t cap) {
  w = free_reduce(w);
  for (;;) {
    ClosureResult closure = braid_closure(sys, w, cap, true);
    if (closure.pair_at == std::string::npos) return w;
    std::string shorter = closure.exposing;
    shorter.erase(closure.pair_at, 2);
    w = free_reduce(shorter);
  }
}

std::string tits_normal_form(const CoxeterSystem& sys, const std::string& reduced, std::size_t cap) {
  ClosureResult closure = braid_closure(sys, reduced, cap, false);
  return *std::min_element(closure.words.begin(), closure.words.end());
}

}  // namespace coxwalls::detail
