#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxwalls/core.hpp"
#include "detail/representation.hpp"

namespace coxwalls::detail {

struct SystemData {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> matrix;
  bool single_char_names = true;
  std::optional<ExactRepresentation> exact;
  FloatRepresentation geometric;
  std::vector<long double> gram;  // B(alpha_s, alpha_t), row-major
};

/// Verdict memo for wall pairs; concurrent reads, exclusive inserts.
struct SystemCaches {
  struct PairHash {
    std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
      const WordHash h;
      return h(p.first) * 0x9e3779b97f4a7c15ULL ^ h(p.second);
    }
  };

  std::shared_mutex mutex;
  std::unordered_map<std::pair<Word, Word>, int, PairHash> crossing;  // keyed by ordered reflection words

  std::optional<int> find_crossing(const std::pair<Word, Word>& key) {
    std::shared_lock lock(mutex);
    auto it = crossing.find(key);
    if (it == crossing.end()) return std::nullopt;
    return it->second;
  }
  void store_crossing(std::pair<Word, Word> key, int verdict) {
    std::unique_lock lock(mutex);
    if (crossing.size() > 4'000'000) crossing.clear();
    crossing.emplace(std::move(key), verdict);
  }
};

struct SystemAccess {
  static const SystemData& data(const CoxeterSystem& sys) { return *sys.data_; }
  static SystemCaches& caches(const CoxeterSystem& sys) { return *sys.caches_; }
};

struct ElementAccess {
  static Element make(Word nf) { return Element(std::move(nf)); }
};

inline Element make_element(Word nf) { return ElementAccess::make(std::move(nf)); }

/// Runs f with the exact representation when the system is crystallographic,
/// retrying with the floating one if integer coordinates overflow.
template <class F>
decltype(auto) with_representation(const CoxeterSystem& sys, F&& f) {
  const SystemData& d = SystemAccess::data(sys);
  if (d.exact) {
    try {
      return f(*d.exact);
    } catch (const Overflow&) {
    }
  }
  return f(d.geometric);
}

}  // namespace coxwalls::detail
