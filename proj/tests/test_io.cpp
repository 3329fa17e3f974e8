#include "catch_amalgamated.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "unimod/cmat_io.hpp"
#include "unimod/errors.hpp"
#include "unimod/hadamard.hpp"
#include "unimod/render.hpp"

using namespace unimod;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("cmat round trip") {
  const ComplexMatrix f = dft(3).matrix;
  const ComplexMatrix back = parse_cmat(format_cmat(f));
  CHECK(frobenius_distance(f, back) == 0.0);
  const auto rows = parse_rows("[[1, [0, 2]], [[-1.5, 0.25], 0]]");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][1] == Complex(0, 2));
  CHECK(rows[1][0] == Complex(-1.5, 0.25));
  const std::string path = "io_roundtrip.cmat.json";
  write_cmat(f, path);
  CHECK(frobenius_distance(read_cmat(path), f) == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("cmat errors") {
  try {
    parse_cmat("{\"matrix\": [[1, 2],\n  [3, 4]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() > 10);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_cmat("{\"rows\": []}"), ParseError);
  CHECK_THROWS_AS(parse_cmat("[[1, 2], [3]]"), ParseError);
  CHECK_THROWS_AS(parse_cmat("[[1, 2]]"), ParseError);
  CHECK_THROWS_AS(parse_cmat("[[\"a\"]]"), ParseError);
  CHECK_THROWS_AS(parse_cmat("[[[1, 2, 3]]]"), ParseError);
  CHECK_THROWS_AS(read_cmat("/nonexistent/dir/x.cmat.json"), IoError);
}

TEST_CASE("svg rendering") {
  FigureSpec spec;
  const ComplexMatrix f = dft(3).matrix;
  for (std::size_t r = 0; r < 3; ++r) spec.centers.emplace_back(f.row(r));
  spec.sample_resolution = 120;
  const std::string a = render_svg(spec);
  CHECK(a == render_svg(spec));
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("</svg>\n") == a.size() - 7);
  CHECK(count(a, "<g ") == 4);
  CHECK(count(a, "</g>") == 4);
  CHECK(count(a, "<circle") == 9);
  spec.show_grid = false;
  CHECK(count(render_svg(spec), "<circle") == 0);

  // Band-like body: every sample row has exactly one run once |t| is small.
  FigureSpec band;
  band.centers.emplace_back(ComplexVector{0.05, 1.0, 1.0});
  band.sample_resolution = 100;
  CHECK(count(render_svg(band), "<rect") > 100);
  spec.sample_resolution = 50;
  CHECK_THROWS_AS(render_svg(spec), DomainError);
  CHECK_THROWS_AS(write_svg(band, "/nonexistent/dir/x.svg"), IoError);
}

TEST_CASE("command line") {
  std::ostringstream out, err;
  CHECK(cli::run({"orbits"}, out, err) == 0);
  CHECK(out.str().find("\"total\": 126") != std::string::npos);
  std::ostringstream o2, e2;
  CHECK(cli::run({"discrepancy", "--dft", "2"}, o2, e2) == 0);
  std::ostringstream o3, e3;
  CHECK(cli::run({"discrepancy"}, o3, e3) == 1);
  CHECK(e3.str().find("error") != std::string::npos);
  std::ostringstream o4, e4;
  CHECK(cli::run({"nope"}, o4, e4) == 1);
  std::ostringstream o5, e5;
  CHECK(cli::run({"counterexample", "--start", "dft", "--iterations", "50"}, o5, e5) == 2);
  std::ostringstream o6, e6;
  CHECK(cli::run({"bm", "upper", "--n", "3", "--q", "3"}, o6, e6) == 1);
}
