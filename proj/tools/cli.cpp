#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "unimod/bm_distance.hpp"
#include "unimod/cmat_io.hpp"
#include "unimod/config.hpp"
#include "unimod/discrepancy.hpp"
#include "unimod/errors.hpp"
#include "unimod/hadamard.hpp"
#include "unimod/opnorms.hpp"
#include "unimod/render.hpp"
#include "unimod/torus.hpp"

namespace unimod::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

json vjson(const ComplexVector& v) {
  json a = json::array();
  for (const auto& z : v.entries()) a.push_back(cjson(z));
  return a;
}

json mjson(const ComplexMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.order(); ++r) a.push_back(vjson(m.row(r)));
  return a;
}

json rows_json(const std::vector<ComplexVector>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(vjson(r));
  return a;
}

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json angles_json(const PhaseVector& p) {
  json a = json::array();
  for (double t : p.free_angles()) a.push_back(t);
  return a;
}

// Matrix source shared by several commands: --in FILE, --dft N, --a3, --strips.
struct Source {
  std::string in;
  std::size_t dft = 0;
  bool a3 = false;
  bool strips = false;

  void add(CLI::App* app, bool with_strips) {
    app->add_option("--in", in, "input .cmat.json file");
    app->add_option("--dft", dft, "use the DFT matrix of this order")->check(CLI::Range(1, 9));
    app->add_flag("--a3", a3, "use the stored order-3 counterexample matrix");
    if (with_strips) app->add_flag("--strips", strips, "use the rows (1, w^j, 0), j = 1..3");
  }

  std::vector<ComplexVector> rows(std::string& label) const {
    const int picked = !in.empty() + (dft > 0) + a3 + strips;
    if (picked != 1) throw DomainError("choose exactly one of --in, --dft, --a3, --strips");
    if (!in.empty()) {
      label = in;
      return read_rows(in);
    }
    std::vector<ComplexVector> out;
    ComplexMatrix m(1);
    if (dft > 0) {
      label = "dft:" + std::to_string(dft);
      m = unimod::dft(dft).matrix;
    } else if (a3) {
      label = "a3";
      m = counterexample_matrix(3);
    } else {
      label = "strips";
      for (int j = 1; j <= 3; ++j) out.push_back({1.0, unit_phase(kTwoPi * j / 3.0), 0.0});
      return out;
    }
    for (std::size_t r = 0; r < m.order(); ++r) out.push_back(m.row(r));
    return out;
  }

  ComplexMatrix matrix(std::string& label) const {
    const auto r = rows(label);
    return ComplexMatrix::from_rows(r);
  }
};

struct Common {
  std::uint64_t seed = 1;
  double tol = 1e-6;
  std::size_t threads = 0;
  std::string out;
  bool timing = false;
};

struct Emit {
  json record;
  int code = 0;
};

Emit make(const std::string& command, const Common& c, json inputs, json result, bool conclusive = true) {
  Emit e;
  e.record = {{"tool", "unimod"},
              {"version", kVersion},
              {"command", command},
              {"seed", c.seed},
              {"tolerance", c.tol},
              {"epsilon", epsilon()},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"status", conclusive ? "ok" : "inconclusive"}};
  e.code = conclusive ? 0 : 2;
  return e;
}

// -- commands ---------------------------------------------------------------

Emit cmd_discrepancy(const Common& c, const Source& src, bool no_certify, std::size_t restarts) {
  std::string label;
  const DiscrepancyInstance inst(src.rows(label));
  DiscrepancyOptions o;
  o.tol = c.tol;
  o.certify = !no_certify;
  o.restarts = restarts;
  o.seed = c.seed;
  const auto r = solve(inst, o);
  const double sqrt_n = std::sqrt(static_cast<double>(inst.size()));
  json result = {{"value", r.value},
                 {"witness_angles", angles_json(r.witness)},
                 {"certified", r.certified},
                 {"certified_lower", opt(r.certified_lower)},
                 {"sqrt_n", sqrt_n},
                 {"gap_to_sqrt_n", sqrt_n - r.value},
                 {"within_sqrt_n", r.value <= sqrt_n + epsilon()},
                 {"restarts_used", r.restarts_used},
                 {"evaluations", r.evaluations}};
  json inputs = {{"source", label}, {"n", inst.size()}, {"rows", rows_json(inst.rows())},
                 {"certify", !no_certify}, {"restarts", restarts}};
  return make("discrepancy", c, inputs, result);
}

Emit cmd_norm(const Common& c, const Source& src, const std::string& kind, double p, double q,
              std::size_t restarts) {
  std::string label;
  const ComplexMatrix a = src.matrix(label);
  json inputs = {{"source", label}, {"n", a.order()}, {"matrix", mjson(a)}, {"kind", kind}};
  json result;
  bool conclusive = true;
  if (kind == "inf1") {
    InfToOneOptions o;
    o.tol = c.tol;
    o.seed = c.seed;
    const auto b = norm_inf_to_1_certified(a, o);
    result = {{"lower", b.lower}, {"upper", b.upper}, {"certified", b.certified},
              {"witness", vjson(b.witness)}, {"grid_resolution", b.grid_resolution},
              {"evaluations", b.evaluations}};
    conclusive = b.certified;
  } else if (kind == "1inf") {
    result = {{"value", norm_1_to_inf(a)}, {"exact", true}};
  } else if (kind == "22") {
    result = {{"value", norm_2_to_2(a)}, {"exact", true}};
  } else if (kind == "qp") {
    const auto r = norm_q_to_p_lower(a, LpPair{p, q}, restarts, c.seed);
    inputs["p"] = num(p);
    inputs["q"] = num(q);
    inputs["restarts"] = restarts;
    result = {{"value", r.value}, {"witness", vjson(r.witness)}, {"bound_kind", "lower"}};
  } else {
    throw DomainError("unknown norm kind '" + kind + "'");
  }
  return make("norm", c, inputs, result, conclusive);
}

json verdict_json(GridSubset s, const CoverageVerdict& v) {
  json w = nullptr;
  if (v.witness_center) w = vjson(v.witness_center->center());
  json fam = json::array();
  for (double b : v.family_bounds) fam.push_back(num(b));
  return {{"subset", format_subset(s)},
          {"mask", s.mask},
          {"class", s.size() == 4 ? json(classify_subset(s)) : json(nullptr)},
          {"verdict", verdict_name(v.verdict)},
          {"witness_center", w},
          {"witness_value", v.witness_value},
          {"certified_sup", opt(v.certified_sup)},
          {"family_bounds", fam},
          {"evaluations", v.evaluations}};
}

Emit cmd_cover(const Common& c, const std::string& subset, bool all, double margin) {
  CoverageOptions o;
  o.margin = margin;
  json inputs = {{"margin", margin}};
  json result;
  bool conclusive = true;
  if (all) {
    inputs["subsets"] = "orbit representatives";
    json list = json::array();
    for (const auto& orb : enumerate_orbits()) {
      const auto v = coverability(orb.canonical, o);
      conclusive = conclusive && v.verdict != Verdict::inconclusive;
      list.push_back(verdict_json(orb.canonical, v));
    }
    result = {{"verdicts", list}};
  } else {
    if (subset.empty()) throw DomainError("give --subset or --all");
    const GridSubset s = parse_subset(subset);
    inputs["subset"] = format_subset(s);
    const auto v = coverability(s, o);
    conclusive = v.verdict != Verdict::inconclusive;
    result = verdict_json(s, v);
  }
  return make("cover", c, inputs, result, conclusive);
}

json obstruction_json(const ObstructionReport& r) {
  return {{"class1_pairs", r.class1_pairs},
          {"class1_disjoint_pairs", r.class1_disjoint_pairs},
          {"five_subsets", r.five_subsets},
          {"five_subsets_all_class1", r.five_subsets_all_class1},
          {"square_extensions", r.square_extensions},
          {"square_extensions_all_class1", r.square_extensions_all_class1}};
}

Emit cmd_orbits(const Common& c) {
  const auto orbits = enumerate_orbits();
  json list = json::array();
  std::size_t total = 0;
  for (const auto& o : orbits) {
    json members = json::array();
    for (const auto& m : o.members) members.push_back(m.mask);
    list.push_back({{"canonical", format_subset(o.canonical)},
                    {"mask", o.canonical.mask},
                    {"size", o.members.size()},
                    {"class", o.label},
                    {"members", members}});
    total += o.members.size();
  }
  json result = {{"total", total},
                 {"classes", orbits.size()},
                 {"orbits", list},
                 {"obstructions", obstruction_json(check_grid_obstructions())}};
  return make("orbits", c, json::object(), result);
}

json witness_json(const UncoveredWitness& w) {
  return {{"point", {w.point.theta1(), w.point.theta2()}},
          {"value", w.value},
          {"from_grid", w.from_grid},
          {"within_bound", w.value <= kToricThreshold + epsilon()}};
}

Emit cmd_witness(const Common& c, const Source& src, std::size_t random) {
  json inputs, result;
  if (random > 0) {
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto disk = [&]() {
      while (true) {
        const Complex z(u(rng), u(rng));
        if (std::norm(z) <= 1.0) return z;
      }
    };
    double worst = 0.0;
    std::size_t ok = 0, grid = 0;
    for (std::size_t t = 0; t < random; ++t) {
      ComplexVector a[3] = {ComplexVector(3), ComplexVector(3), ComplexVector(3)};
      for (auto& v : a)
        for (std::size_t k = 0; k < 3; ++k) v[k] = disk();
      const auto w = uncovered_witness(a[0], a[1], a[2]);
      worst = std::max(worst, w.value);
      ok += w.value <= kToricThreshold + epsilon();
      grid += w.from_grid;
    }
    inputs = {{"random_triples", random}};
    result = {{"triples", random}, {"within_bound", ok}, {"from_grid", grid}, {"max_value", worst}};
    return make("witness", c, inputs, result);
  }
  std::string label;
  const auto rows = src.rows(label);
  if (rows.size() != 3) throw DimensionError("witness needs three rows in C^3");
  const auto w = uncovered_witness(rows[0], rows[1], rows[2]);
  inputs = {{"source", label}, {"rows", rows_json(rows)}};
  return make("witness", c, inputs, witness_json(w));
}

Emit cmd_verify(const Common& c, std::size_t resolution, std::size_t samples, std::size_t b_values,
                std::size_t centers) {
  const auto t = verify_trig_lemma(resolution);
  const auto l = verify_line_lemma(samples, c.seed);
  const auto g = verify_grid_placement(b_values, centers, c.seed);
  const auto ob = check_grid_obstructions();
  json result = {
      {"trig", {{"resolution", t.resolution}, {"checked", t.checked}, {"opposite_sign", t.opposite_sign},
                {"violations", t.violations}, {"near_boundary", t.near_boundary},
                {"max_min_excess", num(t.max_min_excess)}}},
      {"line", {{"samples", l.samples}, {"violations", l.violations}, {"max_value", l.max_value}}},
      {"grid_placement", {{"b_values", g.b_values}, {"max_formula_error", g.max_formula_error},
                          {"max_case_value", g.max_case_value}, {"random_centers", g.random_centers},
                          {"violations", g.bad_placements}}},
      {"obstructions", obstruction_json(ob)},
      {"total_violations", t.violations + l.violations + g.bad_placements + ob.class1_disjoint_pairs +
                               ob.five_subsets_all_class1}};
  json inputs = {{"resolution", resolution}, {"line_samples", samples}, {"b_values", b_values},
                 {"random_centers", centers}};
  return make("verify-lemmas", c, inputs, result);
}

json certificate_json(const DistanceCertificate& d) {
  return {{"n", d.n}, {"p", num(d.pair.p)}, {"q", num(d.pair.q)}, {"alpha", d.pair.alpha()},
          {"upper", d.upper}, {"lower_evidence", num(d.lower_evidence)},
          {"transporter", mjson(d.transporter)}};
}

Emit cmd_bm_upper(const Common& c, std::size_t n, double q, double p) {
  const auto d = lp_upper_bound(n, LpPair{p, q});
  return make("bm upper", c, {{"n", n}, {"p", num(p)}, {"q", num(q)}}, certificate_json(d));
}

Emit cmd_bm_search(const Common& c, std::size_t n, std::size_t restarts) {
  const auto s = minimize_product_l1_linf(n, restarts, c.seed);
  json result = {{"value", s.value}, {"sqrt_n", std::sqrt(static_cast<double>(n))},
                 {"matrix", mjson(s.matrix)}, {"restarts", s.restarts}};
  return make("bm search", c, {{"n", n}, {"restarts", restarts}}, result);
}

json counterexample_json(const CounterexampleReport& r) {
  return {{"matrix", mjson(r.matrix)}, {"det_modulus", r.det_modulus}, {"norm_lower", r.norm_lower},
          {"norm_upper", r.norm_upper}, {"rhs", r.rhs}, {"margin", r.margin}, {"method", r.method}};
}

Emit cmd_bm_counterexample(const Common& c, std::size_t n) {
  return make("bm counterexample", c, {{"n", n}}, counterexample_json(counterexample_report(n)));
}

Emit cmd_counterexample(const Common& c, const std::string& start, std::size_t iterations) {
  std::optional<ComplexMatrix> s;
  if (start == "a3") {
    s = counterexample_matrix(3);
  } else if (start == "dft") {
    s = dft(3).matrix;
  } else if (start != "random") {
    s = read_cmat(start);
  }
  const auto r = search_counterexample(c.seed, iterations, s);
  json result = {{"ratio", r.ratio}, {"estimated_ratio", r.estimated_ratio}, {"success", r.success},
                 {"matrix", mjson(r.matrix)}, {"evaluations", r.evaluations}};
  return make("counterexample", c, {{"start", start}, {"iterations", iterations}}, result, r.success);
}

Emit cmd_render(const Common& c, const std::string& preset, const std::string& svg, std::size_t res,
                bool closed, bool no_grid, double t) {
  FigureSpec spec;
  spec.sample_resolution = res;
  spec.closed = closed;
  spec.show_grid = !no_grid;
  std::vector<ComplexVector> centers;
  if (preset == "dft") {
    const auto f = dft(3).matrix;
    for (std::size_t r = 0; r < 3; ++r) centers.push_back(f.row(r));
  } else if (preset == "strips") {
    for (int j = 1; j <= 3; ++j) centers.push_back({1.0, unit_phase(kTwoPi * j / 3.0), 0.0});
  } else if (preset == "band") {
    centers.push_back({t, 1.0, 1.0});
  } else {
    centers = read_rows(preset);
  }
  for (const auto& a : centers) spec.centers.emplace_back(a);
  write_svg(spec, svg);
  json inputs = {{"preset", preset}, {"centers", rows_json(centers)}, {"sample_resolution", res},
                 {"closed", closed}, {"show_grid", !no_grid}};
  if (preset == "band") inputs["t"] = t;
  const std::string body = render_svg(spec);
  json result = {{"svg", svg}, {"bytes", body.size()}};
  return make("render", c, inputs, result);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unimodular vectors, toric bodies and Banach-Mazur certificates", "unimod"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--seed", c.seed, "random seed")->capture_default_str();
  app.add_option("--tol", c.tol, "target tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--threads", c.threads, "worker threads (default: UNIMOD_THREADS or all cores)");
  app.add_option("--out", c.out, "write the result record here instead of stdout");
  app.add_flag("--timing", c.timing, "include wall time in the record");
  app.fallthrough();

  std::function<Emit()> action;

  auto* disc = app.add_subcommand("discrepancy", "min over unimodular x of max_i |<x, a_i>|");
  Source disc_src;
  bool no_certify = false;
  std::size_t disc_restarts = 32;
  disc_src.add(disc, true);
  disc->add_flag("--no-certify", no_certify, "skip branch and bound even for n <= 3");
  disc->add_flag("--certify", [&](std::int64_t) { no_certify = false; }, "certify when n <= 3 (default)");
  disc->add_option("--restarts", disc_restarts)->capture_default_str();
  disc->callback([&] { action = [&] { return cmd_discrepancy(c, disc_src, no_certify, disc_restarts); }; });

  auto* norm = app.add_subcommand("norm", "operator norms");
  Source norm_src;
  std::string kind = "inf1";
  double p = kInf, q = 1.0;
  std::size_t norm_restarts = 32;
  norm_src.add(norm, false);
  norm->add_option("--kind", kind, "inf1 | 1inf | 22 | qp")
      ->check(CLI::IsMember({"inf1", "1inf", "22", "qp"}))
      ->capture_default_str();
  norm->add_option("--p", p, "target exponent for qp");
  norm->add_option("--q", q, "source exponent for qp");
  norm->add_option("--restarts", norm_restarts)->capture_default_str();
  norm->callback([&] { action = [&] { return cmd_norm(c, norm_src, kind, p, q, norm_restarts); }; });

  auto* cover = app.add_subcommand("cover", "can one open toric body contain a grid subset");
  std::string subset;
  bool all = false;
  double margin = 1e-6;
  cover->add_option("--subset", subset, "0b mask, decimal mask or (j,k),... list");
  cover->add_flag("--all", all, "decide every orbit representative");
  cover->add_option("--margin", margin)->capture_default_str()->check(CLI::PositiveNumber);
  cover->callback([&] { action = [&] { return cmd_cover(c, subset, all, margin); }; });

  auto* orbits = app.add_subcommand("orbits", "orbits of 4-point grid subsets");
  orbits->callback([&] { action = [&] { return cmd_orbits(c); }; });

  auto* witness = app.add_subcommand("witness", "torus point outside three open toric bodies");
  Source wit_src;
  std::size_t random = 0;
  wit_src.add(witness, true);
  witness->add_option("--random", random, "check this many seeded random triples instead");
  witness->callback([&] { action = [&] { return cmd_witness(c, wit_src, random); }; });

  auto* verify = app.add_subcommand("verify-lemmas", "numeric sweeps of the auxiliary lemmas");
  std::size_t resolution = 200, samples = 100000, b_values = 1000, centers = 10000;
  verify->add_option("--resolution", resolution)->capture_default_str()->check(CLI::Range(50, 2000));
  verify->add_option("--samples", samples, "line lemma samples")->capture_default_str();
  verify->add_option("--b-values", b_values)->capture_default_str()->check(CLI::Range(2, 1000000));
  verify->add_option("--centers", centers, "random centers for grid placement")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(c, resolution, samples, b_values, centers); }; });

  auto* bm = app.add_subcommand("bm", "Banach-Mazur distance certificates");
  bm->require_subcommand(1);
  std::size_t bm_n = 3, bm_restarts = 100;
  double bm_q = 1.0, bm_p = kInf;
  auto* upper = bm->add_subcommand("upper", "interpolation upper bound n^alpha");
  upper->add_option("--n", bm_n)->required()->check(CLI::Range(1, 9));
  upper->add_option("--q", bm_q)->capture_default_str();
  upper->add_option("--p", bm_p)->capture_default_str();
  upper->callback([&] { action = [&] { return cmd_bm_upper(c, bm_n, bm_q, bm_p); }; });
  auto* search = bm->add_subcommand("search", "minimize ||A||_{1->inf} ||A^-1||_{inf->1}");
  search->add_option("--n", bm_n)->required()->check(CLI::Range(2, 3));
  search->add_option("--restarts", bm_restarts)->capture_default_str();
  search->callback([&] { action = [&] { return cmd_bm_search(c, bm_n, bm_restarts); }; });
  auto* bmce = bm->add_subcommand("counterexample", "stored matrix with ||A||_{inf->1} < n |det A|^{1/n}");
  bmce->add_option("--n", bm_n)->required()->check(CLI::Range(3, 9));
  bmce->callback([&] { action = [&] { return cmd_bm_counterexample(c, bm_n); }; });

  auto* ce = app.add_subcommand("counterexample", "search 3x3 matrices with ||A||_{inf->1} < 3 |det A|^{1/3}");
  std::string start = "random";
  std::size_t iterations = 20000;
  ce->add_option("--start", start, "random | a3 | dft | FILE")->capture_default_str();
  ce->add_option("--iterations", iterations)->capture_default_str();
  ce->callback([&] { action = [&] { return cmd_counterexample(c, start, iterations); }; });

  auto* render = app.add_subcommand("render", "SVG picture of toric bodies");
  std::string preset = "dft", svg;
  std::size_t res = 360;
  bool closed = false, no_grid = false;
  double band_t = 0.05;
  render->add_option("--preset", preset, "dft | strips | band | FILE with centers as rows")->capture_default_str();
  render->add_option("--svg", svg, "output SVG path")->required();
  render->add_option("--resolution", res)->capture_default_str()->check(CLI::Range(100, 4000));
  render->add_option("--t", band_t, "first coordinate for the band preset")->capture_default_str();
  render->add_flag("--closed", closed, "draw closed bodies");
  render->add_flag("--no-grid", no_grid, "omit grid markers");
  render->callback([&] { action = [&] { return cmd_render(c, preset, svg, res, closed, no_grid, band_t); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c.threads > 0) set_thread_count(c.threads);
    const auto t0 = std::chrono::steady_clock::now();
    Emit e = action();
    if (c.timing)
      e.record["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string text = e.record.dump(2) + "\n";
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      if (!f) throw IoError("cannot write " + c.out);
      f << text;
    }
    return e.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (offset " << e.offset() << ")\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace unimod::cli
