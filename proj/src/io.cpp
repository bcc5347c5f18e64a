#include "coxwalls/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "coxwalls/errors.hpp"
#include "detail/json_io.hpp"

namespace coxwalls {

namespace detail {

Json system_to_json(const CoxeterSystem& sys) {
  Json out;
  out["generators"] = sys.generators();
  out["matrix"] = sys.matrix();
  return out;
}

Json path_to_json(const CoxeterSystem& sys, const EdgePath& p) {
  Json out;
  const auto encode = [&](const Word& w) -> Json {
    if (std::all_of(sys.generators().begin(), sys.generators().end(),
                    [](const std::string& g) { return g.size() == 1; })) {
      return sys.format(w);
    }
    Json names = Json::array();
    for (Letter s : w) names.push_back(sys.generators()[s]);
    return names;
  };
  out["start"] = encode(p.start.word());
  out["letters"] = encode(p.letters);
  return out;
}

Word word_from_json(const Json& value, const CoxeterSystem& sys, const std::string& field) {
  try {
    if (value.is_string()) return sys.parse_word(value.get<std::string>());
    if (value.is_array()) {
      Word out;
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (!value[i].is_string()) throw InvalidInput("expected a generator name");
        out.push_back(sys.letter(value[i].get<std::string>()));
      }
      return out;
    }
  } catch (const InvalidInput& e) {
    throw InvalidInput(field + ": " + e.what());
  }
  throw InvalidInput(field + ": expected a string or an array of generator names");
}

}  // namespace detail

namespace io {

namespace {

using detail::Json;

Json parse_json(std::string_view bytes) {
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, bytes.size());
    const auto line = 1 + std::count(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw InvalidInput("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
}

}  // namespace

CoxeterSystem parse_system(std::string_view bytes, Limits limits) {
  const Json doc = parse_json(bytes);
  if (!doc.is_object()) throw InvalidInput("system: expected a JSON object");
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw InvalidInput("generators: missing or not an array");
  }
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) throw InvalidInput("matrix: missing or not an array");

  std::vector<std::string> generators;
  for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
    const Json& g = doc["generators"][i];
    if (!g.is_string()) throw InvalidInput("generators[" + std::to_string(i) + "]: expected a string");
    generators.push_back(g.get<std::string>());
  }
  std::vector<std::vector<int>> matrix;
  for (std::size_t i = 0; i < doc["matrix"].size(); ++i) {
    const Json& row = doc["matrix"][i];
    if (!row.is_array()) throw InvalidInput("matrix[" + std::to_string(i) + "]: expected an array");
    std::vector<int> entries;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number_integer()) {
        throw InvalidInput("matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]: expected an integer");
      }
      entries.push_back(row[j].get<int>());
    }
    matrix.push_back(std::move(entries));
  }
  return CoxeterSystem(std::move(generators), std::move(matrix), limits);
}

EdgePath parse_path(std::string_view bytes, const CoxeterSystem& sys) {
  const Json doc = parse_json(bytes);
  if (!doc.is_object()) throw InvalidInput("path: expected a JSON object");
  if (!doc.contains("letters")) throw InvalidInput("letters: missing");
  const Word start = doc.contains("start") ? detail::word_from_json(doc["start"], sys, "start") : Word{};
  Word letters = detail::word_from_json(doc["letters"], sys, "letters");
  return make_path(sys, normal_form(sys, start), std::move(letters));
}

std::string serialize_system(const CoxeterSystem& sys) { return detail::system_to_json(sys).dump(); }

std::string serialize_path(const CoxeterSystem& sys, const EdgePath& p) {
  return detail::path_to_json(sys, p).dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace io

}  // namespace coxwalls
