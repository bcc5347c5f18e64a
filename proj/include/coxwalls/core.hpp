#pragma once

// Coxeter systems, words, ShortLex normal forms, lengths and balls.
//
// Group elements are always held in ShortLex normal form with respect to the
// generator order of their system, so equality of elements is equality of
// words. Three interchangeable engines compute normal forms:
//
//  * Crystallographic: an exact integer root representation, available when
//    every m(s,t) lies in {2, 3, 4, 6, infinity};
//  * Geometric: the Tits geometric representation in long double with a sign
//    tolerance;
//  * Tits: braid-move closure with deletion of exposed equal pairs. Exact and
//    independent of linear algebra, exponential in the worst case.
//
// WordEngine::Auto picks Crystallographic when possible and falls back to
// Geometric (including when integer coordinates would overflow).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxwalls {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Matrix entry encoding m(s,t) = infinity.
inline constexpr int kInfinity = 0;

enum class WordEngine { Auto, Crystallographic, Geometric, Tits };

/// Caps and tolerances shared by every operation on a system.
struct Limits {
  std::size_t braid_closure = 1'000'000;  ///< words in one braid-move closure
  int order_cap = 200;                    ///< powers tried when testing finite order
  std::size_t ball_elements = 2'000'000;  ///< elements in one ball enumeration
  int recursion_depth = 64;               ///< straightening recursion
  double tolerance = 1e-9;                ///< root-sign tolerance, geometric engine

  friend bool operator==(const Limits&, const Limits&) = default;
};

namespace detail {
struct SystemData;
struct SystemCaches;
struct SystemAccess;
struct ElementAccess;
}  // namespace detail

class CoxeterSystem {
 public:
  /// Validates names and matrix; throws InvalidInput naming the offending field.
  CoxeterSystem(std::vector<std::string> generators, std::vector<std::vector<int>> matrix,
                Limits limits = {});

  std::size_t rank() const noexcept;
  const std::vector<std::string>& generators() const noexcept;
  const std::vector<std::vector<int>>& matrix() const noexcept;

  /// m(s,t), with kInfinity (0) for no relation.
  int m(Letter s, Letter t) const;
  bool crystallographic() const noexcept;

  const Limits& limits() const noexcept { return limits_; }
  CoxeterSystem with_limits(Limits limits) const;

  /// Position of a generator name, or InvalidInput.
  Letter letter(std::string_view name) const;

  /// Parses concatenated single-character names ("tst"), or whitespace/comma
  /// separated names when some generator name is longer than one character.
  Word parse_word(std::string_view text) const;
  std::string format(std::span<const Letter> word) const;

  /// Same generators and matrix; limits are not compared.
  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) noexcept;

 private:
  friend struct detail::SystemAccess;

  std::shared_ptr<const detail::SystemData> data_;
  std::shared_ptr<detail::SystemCaches> caches_;
  Limits limits_;
};

/// A group element in canonical ShortLex normal form.
class Element {
 public:
  /// The identity.
  Element() = default;

  const Word& word() const noexcept { return nf_; }
  std::size_t length() const noexcept { return nf_.size(); }
  bool is_identity() const noexcept { return nf_.empty(); }

  friend bool operator==(const Element&, const Element&) = default;
  /// ShortLex: shorter first, then lexicographic by generator order.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept;

 private:
  friend struct detail::ElementAccess;
  explicit Element(Word nf) : nf_(std::move(nf)) {}

  Word nf_;
};

/// ShortLex comparison of raw words.
std::strong_ordering shortlex_compare(std::span<const Letter> a, std::span<const Letter> b) noexcept;

/// Throws InvalidInput if some letter is not a generator index of `sys`.
void validate_word(const CoxeterSystem& sys, std::span<const Letter> w);

/// A reduced word for the same element; never longer, same parity.
Word reduce(const CoxeterSystem& sys, std::span<const Letter> w, WordEngine engine = WordEngine::Auto);

Element normal_form(const CoxeterSystem& sys, std::span<const Letter> w,
                    WordEngine engine = WordEngine::Auto);
Element normal_form(const CoxeterSystem& sys, std::string_view w, WordEngine engine = WordEngine::Auto);

Element multiply(const CoxeterSystem& sys, const Element& a, const Element& b);
Element multiply(const CoxeterSystem& sys, const Element& a, Letter s);
Element inverse(const CoxeterSystem& sys, const Element& a);

inline std::size_t length(const Element& a) noexcept { return a.length(); }
std::size_t distance(const CoxeterSystem& sys, const Element& a, const Element& b);

/// The full braid-move closure of a.word(), sorted lexicographically.
/// Throws CapExceeded beyond Limits::braid_closure words.
std::vector<Word> all_reduced_words(const CoxeterSystem& sys, const Element& a);

/// Every element of length <= radius, sorted ShortLex.
/// Throws CapExceeded beyond Limits::ball_elements.
std::vector<Element> ball(const CoxeterSystem& sys, std::size_t radius);

/// Concatenation of two words.
Word concat(std::span<const Letter> a, std::span<const Letter> b);
/// Letters in reverse order (the inverse element's word).
Word reversed(std::span<const Letter> w);

}  // namespace coxwalls

template <>
struct std::hash<coxwalls::Element> {
  std::size_t operator()(const coxwalls::Element& e) const noexcept;
};

namespace coxwalls {
struct WordHash {
  std::size_t operator()(std::span<const Letter> w) const noexcept;
  std::size_t operator()(const Word& w) const noexcept { return (*this)(std::span<const Letter>(w)); }
};
}  // namespace coxwalls
