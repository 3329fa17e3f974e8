#include "unimod/cmat_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "unimod/errors.hpp"

namespace unimod {

namespace {

using nlohmann::json;

std::string where(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Complex entry(const json& e, std::size_t r, std::size_t c) {
  const std::string at = "entry (" + std::to_string(r) + ", " + std::to_string(c) + ")";
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw ParseError(at + " must be a number or an [re, im] pair", 0);
}

}  // namespace

std::vector<ComplexVector> parse_rows(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("malformed JSON at " + where(text, off) + " (byte " + std::to_string(off) + ")", off);
  }
  const json* rows = &doc;
  if (doc.is_object()) {
    if (!doc.contains("matrix")) throw ParseError("object has no \"matrix\" member", 0);
    rows = &doc["matrix"];
  }
  if (!rows->is_array() || rows->empty()) throw ParseError("matrix must be a non-empty array of rows", 0);
  std::vector<ComplexVector> out;
  std::size_t width = 0;
  for (std::size_t r = 0; r < rows->size(); ++r) {
    const json& row = (*rows)[r];
    if (!row.is_array() || row.empty()) throw ParseError("row " + std::to_string(r) + " must be a non-empty array", 0);
    if (r == 0) width = row.size();
    if (row.size() != width) throw ParseError("row " + std::to_string(r) + " has a different length", 0);
    if (width > kMaxDim) throw ParseError("rows longer than " + std::to_string(kMaxDim), 0);
    ComplexVector v(width);
    for (std::size_t c = 0; c < width; ++c) v[c] = entry(row[c], r, c);
    out.push_back(std::move(v));
  }
  return out;
}

ComplexMatrix parse_cmat(const std::string& text) {
  const auto rows = parse_rows(text);
  if (rows.size() != rows.front().size()) throw ParseError("matrix is not square", 0);
  return ComplexMatrix::from_rows(rows);
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<ComplexVector> read_rows(const std::string& path) { return parse_rows(slurp(path)); }
ComplexMatrix read_cmat(const std::string& path) { return parse_cmat(slurp(path)); }

std::string format_cmat(const ComplexMatrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.order(); ++r) {
    json row = json::array();
    for (const auto& z : a.row_span(r)) row.push_back({z.real(), z.imag()});
    rows.push_back(row);
  }
  return json{{"matrix", rows}}.dump() + "\n";
}

void write_cmat(const ComplexMatrix& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << format_cmat(a);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace unimod
