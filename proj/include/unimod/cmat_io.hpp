#pragma once

#include <string>
#include <vector>

#include "unimod/complex_core.hpp"

namespace unimod {

// .cmat.json: either a bare row-major array of rows, or an object whose
// "matrix" member is one. Entries are [re, im] pairs or plain numbers.
//
//   {"matrix": [[[1, 0], [0, 1]], [[0.5, -0.5], 2]]}

/// Rows of arbitrary equal length (the rows of a discrepancy instance, say).
std::vector<ComplexVector> parse_rows(const std::string& text);
ComplexMatrix parse_cmat(const std::string& text);

std::vector<ComplexVector> read_rows(const std::string& path);
ComplexMatrix read_cmat(const std::string& path);

std::string format_cmat(const ComplexMatrix& a);
void write_cmat(const ComplexMatrix& a, const std::string& path);

}  // namespace unimod
