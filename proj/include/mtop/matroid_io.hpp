#pragma once

#include <string>

#include "mtop/matroid.hpp"

namespace mtop {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matroid files are JSON documents with fields:
//   n            ground set size (required)
//   rank         rank (required with "circuits")
//   one_indexed  optional flag, default false
// plus exactly one of:
//   bases        list of integer lists
//   circuits     list of integer lists (a set is independent iff it contains
//                no circuit; the resulting family is validated)
//   graph        { "vertices": v, "edges": [[u,v], ...] }
Matroid parse_matroid_json(const std::string& text);
Matroid load_matroid_file(const std::string& path);

std::string emit_matroid_json(const Matroid& m, bool one_indexed = false);

}  // namespace mtop
