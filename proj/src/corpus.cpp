#include "toral/corpus.hpp"

#include "toral/corpus_data.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace toral {

Integer parse_integer(const std::string& token) {
  std::size_t digits_from = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  bool ok = token.size() > digits_from;
  for (std::size_t i = digits_from; ok && i < token.size(); ++i) {
    ok = std::isdigit(static_cast<unsigned char>(token[i])) != 0;
  }
  if (!ok) throw ParseError("bad integer token '" + token + "'");
  Integer value;
  value.set_str(token[0] == '+' ? token.substr(1) : token, 10);
  return value;
}

IntMatrix2 parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::vector<Integer> entries;
  std::string token;
  while (in >> token) {
    if (entries.size() == 4) throw ParseError("unexpected token '" + token + "' after four matrix entries");
    entries.push_back(parse_integer(token));
  }
  if (entries.size() != 4) {
    throw ParseError("expected four integers 'alpha beta gamma delta', got " + std::to_string(entries.size()));
  }
  return {entries[0], entries[1], entries[2], entries[3]};
}

std::vector<MatrixEntry> read_matrix_lines(std::istream& in) {
  std::vector<MatrixEntry> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    MatrixEntry entry;
    entry.line = number;
    try {
      std::string matrix_text = line;
      if (auto arrow = line.find("->"); arrow != std::string::npos) {
        matrix_text = line.substr(0, arrow);
        std::istringstream rest(line.substr(arrow + 2));
        std::string row_token, extra;
        if (!(rest >> row_token) || (rest >> extra)) throw ParseError("expected one row number after '->'");
        const Integer row = parse_integer(row_token);
        if (row < 1 || row > 20) throw ParseError("row '" + row_token + "' is outside 1..20");
        entry.expected_row = static_cast<int>(row.get_si());
      }
      entry.matrix = parse_matrix(matrix_text);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<MatrixEntry> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read matrix file '" + path + "'");
  return read_matrix_lines(in);
}

const std::vector<MatrixEntry>& builtin_corpus() {
  static const std::vector<MatrixEntry> corpus = [] {
    std::istringstream in(detail::kTable2CorpusText);
    return read_matrix_lines(in);
  }();
  return corpus;
}

std::vector<IntMatrix2> scan_matrices(int range) {
  if (range < 0) throw std::invalid_argument("scan range must be nonnegative");
  std::vector<IntMatrix2> out;
  for (long a = -range; a <= range; ++a)
    for (long b = -range; b <= range; ++b)
      for (long c = -range; c <= range; ++c)
        for (long d = -range; d <= range; ++d) out.emplace_back(a, b, c, d);
  return out;
}

}  // namespace toral
