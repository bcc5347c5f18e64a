#pragma once

// JSON file formats for systems and paths.
//
// System: {"generators": ["s", "t"], "matrix": [[1, 0], [0, 1]]}, 0 = infinity.
// Path:   {"start": "st", "letters": "tst"}; "start" and "letters" may also
//         be arrays of generator names (needed for multi-character names).

#include <string>
#include <string_view>

#include "coxwalls/core.hpp"
#include "coxwalls/paths.hpp"

namespace coxwalls::io {

/// Throws InvalidInput naming the line (for syntax errors) or the field.
CoxeterSystem parse_system(std::string_view bytes, Limits limits = {});
EdgePath parse_path(std::string_view bytes, const CoxeterSystem& sys);

std::string serialize_system(const CoxeterSystem& sys);
std::string serialize_path(const CoxeterSystem& sys, const EdgePath& p);

/// Whole file contents; InvalidInput if unreadable.
std::string read_file(const std::string& path);

}  // namespace coxwalls::io
