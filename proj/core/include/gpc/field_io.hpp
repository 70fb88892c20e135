#pragma once

// Text container for scalar fields:
//
//   gpf v1 dim=<m> n=<n> L=<L>
//   <value>
//   ...
//
// one value per line in row-major node order (axis 0 slowest), written as
// C99 hexadecimal floats so that every binary64 value round-trips exactly.
// L is written with 17 significant digits.

#include <iosfwd>
#include <string>

#include "gpc/field.hpp"

namespace gpc {

void write_field(std::ostream& out, const ScalarField& u);
/// Builds a fresh grid from the header; throws std::runtime_error on any
/// malformed header, short body or trailing garbage.
ScalarField read_field(std::istream& in);

void save_field(const std::string& path, const ScalarField& u);
ScalarField load_field(const std::string& path);

}  // namespace gpc
