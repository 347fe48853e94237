#pragma once

#include <iosfwd>

#include "ccm/dense_matrix.hpp"

namespace ccm {

/// Reads one matrix row per line. Fields are separated by any run of
/// whitespace and/or commas; blank lines are skipped. Throws kParseError on a
/// non-integer or out-of-range field, ragged rows, or an empty input.
DenseMatrix parse_text_matrix(std::istream& in);

/// Canonical text form: fields separated by one space, one row per line.
void write_text_matrix(const DenseMatrix& m, std::ostream& out);

}  // namespace ccm
