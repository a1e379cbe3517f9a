#pragma once

#include <string>
#include <string_view>

#include "ramlab/wach.hpp"

namespace ramlab {

// JSON module description:
//   {"name", "description", "p", "f", "N", "d", "i",
//    "F": [[<qpoly body>, ...], ...], "G": [[...]] (optional), "uG" (with G)}
// QPoly bodies use x = q - 1, e.g. "1 + 2*x^3".
struct ModuleFile {
  std::string name;
  std::string description;
  WachModuleModP module;
};

// ParseError on malformed JSON or fields; shape errors from validate_shape.
ModuleFile parse_module_json(std::string_view text);

// Canonical text (two-space indent, fixed key order, trailing newline).
// parse_module_json(module_to_json(m)) reproduces m, and canonical text
// round-trips byte for byte.
std::string module_to_json(const ModuleFile& file);

ModuleFile load_module_file(const std::string& path);

}  // namespace ramlab
