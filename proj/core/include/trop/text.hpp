#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "trop/matrix.hpp"
#include "trop/solver.hpp"

namespace trop {

/// Matrix text format: one row per line, entries whitespace-separated using
/// the scalar token grammar.  Blank lines and lines starting with `#` are
/// ignored.  `source` names the input in diagnostics ("file.txt:3: ...").
TropMatrix parse_matrix(std::string_view text, const std::string& source = "<input>");

/// Renders in the same format parse_matrix reads.
std::string format_matrix(const TropMatrix& m);

/// Equation file: matrix blocks introduced by `%A i`, `%B i` (i = 1..r) and
/// `%C`, each followed by rows in the matrix text format.
MatrixEquation parse_equation(std::string_view text, const std::string& source = "<input>");

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

} // namespace trop
