#include "coxwalls/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_set>

#include "coxwalls/errors.hpp"
#include "detail/system_data.hpp"
#include "detail/tits.hpp"

namespace coxwalls {

namespace {

using detail::SystemAccess;

std::shared_ptr<const detail::SystemData> build_data(std::vector<std::string> generators,
                                                     std::vector<std::vector<int>> matrix, double tolerance) {
  const std::size_t n = generators.size();
  if (n == 0) throw InvalidInput("generators: at least one generator is required");
  if (n > 255) throw InvalidInput("generators: at most 255 generators are supported");

  std::set<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (generators[i].empty()) throw InvalidInput("generators[" + std::to_string(i) + "]: empty name");
    if (!names.insert(generators[i]).second) {
      throw InvalidInput("generators[" + std::to_string(i) + "]: duplicate name '" + generators[i] + "'");
    }
  }
  if (matrix.size() != n) throw InvalidInput("matrix: expected " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw InvalidInput("matrix[" + std::to_string(i) + "]: expected " + std::to_string(n) + " entries");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int m = matrix[i][j];
      const std::string at = "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (m != matrix[j][i]) throw InvalidInput("matrix not symmetric at " + at);
      if (i == j && m != 1) throw InvalidInput(at + ": diagonal entry must be 1");
      if (i != j && m == 1) throw InvalidInput(at + ": off-diagonal entry must be >= 2 or 0 (infinity)");
      if (m < 0) throw InvalidInput(at + ": negative entry");
    }
  }

  auto data = std::make_shared<detail::SystemData>(detail::SystemData{
      .generators = std::move(generators),
      .matrix = std::move(matrix),
      .single_char_names = true,
      .exact = std::nullopt,
      .geometric = detail::FloatRepresentation(n, {}, tolerance),
      .gram = {},
  });
  for (const auto& g : data->generators) data->single_char_names = data->single_char_names && g.size() == 1;

  std::vector<long double> cartan(n * n);
  data->gram.assign(n * n, 0.0L);
  bool crystallographic = true;
  std::vector<std::int64_t> integral(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int m = data->matrix[i][j];
      long double b = 0;
      if (i == j) {
        b = 1.0L;
        integral[i * n + j] = 2;
      } else if (m == kInfinity) {
        b = -1.0L;
        integral[i * n + j] = -2;
      } else {
        b = -std::cos(std::numbers::pi_v<long double> / static_cast<long double>(m));
        switch (m) {
          case 2: integral[i * n + j] = 0; break;
          case 3: integral[i * n + j] = -1; break;
          case 4: integral[i * n + j] = i < j ? -1 : -2; break;
          case 6: integral[i * n + j] = i < j ? -1 : -3; break;
          default: crystallographic = false;
        }
      }
      if (m == 2) b = 0.0L;
      data->gram[i * n + j] = b;
      cartan[i * n + j] = 2 * b;
    }
  }
  data->geometric = detail::FloatRepresentation(n, std::move(cartan), tolerance);
  if (crystallographic) data->exact.emplace(n, std::move(integral), tolerance);
  return data;
}

Word normal_form_word(const CoxeterSystem& sys, std::span<const Letter> w, WordEngine engine) {
  const auto& d = SystemAccess::data(sys);
  switch (engine) {
    case WordEngine::Auto:
      return detail::with_representation(sys, [&](const auto& rep) { return rep.normal_form(w); });
    case WordEngine::Crystallographic:
      if (!d.exact) throw InvalidInput("crystallographic engine needs every m(s,t) in {2,3,4,6,inf}");
      try {
        return d.exact->normal_form(w);
      } catch (const detail::Overflow&) {
        throw CapExceeded("integer root coordinates overflowed");
      }
    case WordEngine::Geometric:
      return d.geometric.normal_form(w);
    case WordEngine::Tits: {
      const auto cap = sys.limits().braid_closure;
      return detail::from_key(detail::tits_normal_form(sys, detail::tits_reduce(sys, detail::to_key(w), cap), cap));
    }
  }
  return {};
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators, std::vector<std::vector<int>> matrix,
                             Limits limits)
    : data_(build_data(std::move(generators), std::move(matrix), limits.tolerance)),
      caches_(std::make_shared<detail::SystemCaches>()),
      limits_(limits) {}

std::size_t CoxeterSystem::rank() const noexcept { return data_->generators.size(); }
const std::vector<std::string>& CoxeterSystem::generators() const noexcept { return data_->generators; }
const std::vector<std::vector<int>>& CoxeterSystem::matrix() const noexcept { return data_->matrix; }

int CoxeterSystem::m(Letter s, Letter t) const { return data_->matrix.at(s).at(t); }

bool CoxeterSystem::crystallographic() const noexcept { return data_->exact.has_value(); }

CoxeterSystem CoxeterSystem::with_limits(Limits limits) const {
  if (limits.tolerance == limits_.tolerance) {
    CoxeterSystem copy = *this;
    if (limits.order_cap != limits_.order_cap) copy.caches_ = std::make_shared<detail::SystemCaches>();
    copy.limits_ = limits;
    return copy;
  }
  return CoxeterSystem(data_->generators, data_->matrix, limits);
}

Letter CoxeterSystem::letter(std::string_view name) const {
  const auto& g = data_->generators;
  const auto it = std::find(g.begin(), g.end(), name);
  if (it == g.end()) throw InvalidInput("unknown generator name '" + std::string(name) + "'");
  return static_cast<Letter>(it - g.begin());
}

Word CoxeterSystem::parse_word(std::string_view text) const {
  Word out;
  if (data_->single_char_names) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
      out.push_back(letter(std::string_view(&c, 1)));
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
    if (j > i) out.push_back(letter(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::string CoxeterSystem::format(std::span<const Letter> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!data_->single_char_names && i > 0) out.push_back(' ');
    out += data_->generators.at(word[i]);
  }
  return out;
}

bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) noexcept {
  return a.data_ == b.data_ ||
         (a.data_->generators == b.data_->generators && a.data_->matrix == b.data_->matrix);
}

std::strong_ordering shortlex_compare(std::span<const Letter> a, std::span<const Letter> b) noexcept {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
  return shortlex_compare(a.nf_, b.nf_);
}

void validate_word(const CoxeterSystem& sys, std::span<const Letter> w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= sys.rank()) {
      throw InvalidInput("letter " + std::to_string(w[i]) + " at position " + std::to_string(i) +
                         " is not a generator index");
    }
  }
}

Word reduce(const CoxeterSystem& sys, std::span<const Letter> w, WordEngine engine) {
  validate_word(sys, w);
  if (engine == WordEngine::Tits) {
    return detail::from_key(detail::tits_reduce(sys, detail::to_key(w), sys.limits().braid_closure));
  }
  return normal_form_word(sys, w, engine);
}

Element normal_form(const CoxeterSystem& sys, std::span<const Letter> w, WordEngine engine) {
  validate_word(sys, w);
  return detail::make_element(normal_form_word(sys, w, engine));
}

Element normal_form(const CoxeterSystem& sys, std::string_view w, WordEngine engine) {
  return normal_form(sys, sys.parse_word(w), engine);
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word reversed(std::span<const Letter> w) { return Word(w.rbegin(), w.rend()); }

Element multiply(const CoxeterSystem& sys, const Element& a, const Element& b) {
  return detail::make_element(normal_form_word(sys, concat(a.word(), b.word()), WordEngine::Auto));
}

Element multiply(const CoxeterSystem& sys, const Element& a, Letter s) {
  if (s >= sys.rank()) throw InvalidInput("letter " + std::to_string(s) + " is not a generator index");
  Word w = a.word();
  w.push_back(s);
  return detail::make_element(normal_form_word(sys, w, WordEngine::Auto));
}

Element inverse(const CoxeterSystem& sys, const Element& a) {
  return detail::make_element(normal_form_word(sys, reversed(a.word()), WordEngine::Auto));
}

std::size_t distance(const CoxeterSystem& sys, const Element& a, const Element& b) {
  const Word w = concat(reversed(a.word()), b.word());
  return detail::with_representation(
      sys, [&](const auto& rep) { return rep.length_from_inverse(rep.inverse_matrix_of(w)); });
}

std::vector<Word> all_reduced_words(const CoxeterSystem& sys, const Element& a) {
  auto closure = detail::braid_closure(sys, detail::to_key(a.word()), sys.limits().braid_closure, false);
  std::vector<Word> out;
  out.reserve(closure.words.size());
  for (const auto& key : closure.words) out.push_back(detail::from_key(key));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> ball(const CoxeterSystem& sys, std::size_t radius) {
  const std::size_t cap = sys.limits().ball_elements;
  std::vector<Element> all{Element{}};
  std::vector<Element> layer{Element{}};
  for (std::size_t r = 1; r <= radius && !layer.empty(); ++r) {
    std::unordered_set<Word, WordHash> next_words;
    std::vector<Element> next;
    for (const Element& e : layer) {
      for (Letter s = 0; s < sys.rank(); ++s) {
        Element candidate = multiply(sys, e, s);
        if (candidate.length() == r && next_words.insert(candidate.word()).second) {
          next.push_back(std::move(candidate));
        }
      }
    }
    if (all.size() + next.size() > cap) {
      throw CapExceeded("ball of radius " + std::to_string(radius) + " exceeds " + std::to_string(cap) +
                        " elements");
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::size_t WordHash::operator()(std::span<const Letter> w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Letter c : w) {
    h ^= c + 1;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace coxwalls

std::size_t std::hash<coxwalls::Element>::operator()(const coxwalls::Element& e) const noexcept {
  return coxwalls::WordHash{}(e.word());
}
