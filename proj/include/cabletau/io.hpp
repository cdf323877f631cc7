// Complex file I/O (JSON) and the inline knot expression grammar
//   expr := term ('#' term)*      term := name | 'mirror' '(' expr ')'
// where names are built-in library knots.
#pragma once

#include <string>

#include "cabletau/cfk.hpp"

namespace cabletau {

// Canonical dump: generators sorted by id, arrows lexicographic, 2-space
// indent. Parsing then re-dumping a dump is byte-identical.
std::string dump_complex(const CfkComplex& c);
CfkComplex parse_complex(const std::string& json_text);

CfkComplex load_complex_file(const std::string& path);
void save_complex_file(const CfkComplex& c, const std::string& path);

CfkComplex parse_knot_expression(const std::string& expr);

}  // namespace cabletau
