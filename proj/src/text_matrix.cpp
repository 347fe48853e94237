#include "ccm/text_matrix.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace ccm {

namespace {

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

}  // namespace

DenseMatrix parse_text_matrix(std::istream& in) {
  std::vector<std::uint64_t> values;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t fields = 0;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      while (p < end && is_separator(*p)) ++p;
      if (p == end) break;
      const char* tok = p;
      while (p < end && !is_separator(*p)) ++p;
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok, p, v);
      if (ec == std::errc::result_out_of_range) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) +
                                                ": value exceeds 2^64 - 1");
      }
      if (ec != std::errc() || ptr != p) {
        throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": '" +
                                                std::string(tok, p) +
                                                "' is not a non-negative integer");
      }
      values.push_back(v);
      ++fields;
    }
    if (fields == 0) continue;
    if (rows == 0) {
      cols = fields;
    } else if (fields != cols) {
      throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + " has " +
                                              std::to_string(fields) + " fields, expected " +
                                              std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::kParseError, "no matrix rows in input");
  return DenseMatrix(rows, cols, std::move(values));
}

void write_text_matrix(const DenseMatrix& m, std::ostream& out) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

}  // namespace ccm
