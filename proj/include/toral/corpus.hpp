#pragma once

// Matrix text input: "alpha beta gamma delta" in row-major order, and
// line-oriented batch files with '#' comments. Corpus lines may carry an
// expected torus table row as "alpha beta gamma delta -> row".

#include "toral/algebra.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toral {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses one (optionally signed) decimal integer; throws ParseError naming
/// the token otherwise.
Integer parse_integer(const std::string& token);

/// Four whitespace-separated integers.
IntMatrix2 parse_matrix(const std::string& text);

struct MatrixEntry {
  IntMatrix2 matrix;
  std::optional<int> expected_row;
  int line = 0;
};

std::vector<MatrixEntry> read_matrix_lines(std::istream& in);
std::vector<MatrixEntry> read_matrix_file(const std::string& path);

/// The curated torus table corpus compiled into the library.
const std::vector<MatrixEntry>& builtin_corpus();

/// All matrices with entries in [-range, range], alpha varying slowest.
std::vector<IntMatrix2> scan_matrices(int range);

}  // namespace toral
