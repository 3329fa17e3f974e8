#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unimod/complex_core.hpp"

namespace unimod {

/// sqrt(3): a point x lies in the toric body B(a) when |<a, x>| exceeds it.
inline const double kToricThreshold = 1.7320508075688772;

/// Center a in C^3 with ||a||_inf <= 1 and its types: the (1-based) slots of
/// minimal modulus.
class ToricCenter {
 public:
  explicit ToricCenter(ComplexVector a);
  const ComplexVector& center() const { return a_; }
  const std::vector<int>& types() const { return types_; }

 private:
  ComplexVector a_;
  std::vector<int> types_;
};

/// |<a, (1, e^{i theta1}, e^{i theta2})>|
double toric_value(const ComplexVector& a, const TorusPoint& p);

struct Membership {
  bool inside = false;
  double value = 0.0;   // |<a, x>|
  double margin = 0.0;  // value - sqrt(3)
};

/// Open body: value > sqrt(3) + eps. Closed body: value >= sqrt(3) - eps,
/// with eps = epsilon().
Membership toric_membership(const ToricCenter& a, const TorusPoint& p, bool closed);

// -- the 9-point grid -------------------------------------------------------

struct GridPoint {
  int j = 0;  // theta1 = 2 pi j / 3
  int k = 0;  // theta2 = 2 pi k / 3
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Row-major index (j + 1) * 3 + (k + 1) in 0..8.
int grid_index(GridPoint p);
GridPoint grid_point(int index);
TorusPoint grid_torus_point(GridPoint p);
/// (1, omega^j, omega^k)
ComplexVector grid_vector(GridPoint p);

/// Subset of the grid as a 9-bit mask over grid_index.
struct GridSubset {
  std::uint16_t mask = 0;

  static GridSubset from_points(const std::vector<GridPoint>& pts);
  std::vector<GridPoint> points() const;
  int size() const;
  bool contains(GridPoint p) const { return (mask >> grid_index(p)) & 1U; }
  friend bool operator==(const GridSubset&, const GridSubset&) = default;
};

/// Parses "0b000011011", a decimal mask, or a pair list "(0,0),(1,-1)".
GridSubset parse_subset(const std::string& text);
std::string format_subset(GridSubset s);

/// The six grid transformations (tau in 1..6), all taken mod 3:
///   1: (j+1, k)  2: (j, k+1)  3: (k, j)  4: (-j, -k)  5: (-j, k-j)  6: (j-k, -k)
GridSubset transform_subset(GridSubset s, int tau);

struct Orbit {
  GridSubset canonical;             // smallest mask in the orbit
  std::vector<GridSubset> members;  // sorted by mask
  int label = 0;                    // class number 1..4, see classify_orbit
};

/// Orbits of the 4-element subsets under the six transformations, sorted by
/// canonical mask, each labelled with its class.
std::vector<Orbit> enumerate_orbits();

/// Class number of a 4-subset:
///   2: contains a full anti-diagonal line (j + k constant),
///   3: otherwise contains a full line in a cardinal direction,
///   1: otherwise lies in the orbit of the 2x2 square,
///   4: everything else.
int classify_subset(GridSubset s);

struct ObstructionReport {
  std::size_t class1_pairs = 0;
  std::size_t class1_disjoint_pairs = 0;           // should be 0
  std::size_t five_subsets = 0;
  std::size_t five_subsets_all_class1 = 0;         // should be 0
  std::size_t square_extensions = 0;               // points that extend the square
  std::size_t square_extensions_all_class1 = 0;    // should be 0
};

/// Exhaustive check of the two combinatorial facts used for n = 3: any two
/// class-1 subsets meet, and every 5-subset contains a 4-subset outside
/// class 1 (also reported separately for the extensions of the square).
ObstructionReport check_grid_obstructions();

// -- lemmas about single bodies ---------------------------------------------

/// Contains B(a) in B(v) where v has at most one coordinate of modulus < 1:
/// scale to ||a||_inf = 1, order moduli, lift the middle one to modulus 1.
ComplexVector blob_expand(const ComplexVector& a);

struct GridMultiplier {
  std::array<Complex, 3> x{};        // unimodular multipliers
  int contained_points = 0;          // grid points in the open body B(a o x)
};

/// Unimodular x such that B((a_1 x_1, a_2 x_2, a_3 x_3)) holds at most one
/// grid point. Reduces to |v_1| = b <= |v_2| = |v_3| = 1 and uses
/// v = (b, u, conj u), u = exp(i (arccos(b/2) - pi/3)).
GridMultiplier grid_multiplier(const ComplexVector& a);

/// b^2 + 2b Re(u (w^k + w^l)) + 2 Re(u^2 w^k w^l) for (k, l) =
/// (1,2), (1,0), (2,0), (1,1), (2,2), with u as in grid_multiplier.
std::array<double, 5> grid_placement_case_values(double b);
/// Closed forms of the five cases: 1, 3b^2 - 2, 1, (3/2) b (b - sqrt(12 - 3b^2)) + 1, -2.
std::array<double, 5> grid_placement_closed_forms(double b);

// -- coverability -------------------------------------------------------------

enum class Verdict { coverable, not_coverable, inconclusive };
const char* verdict_name(Verdict v);

struct CoverageOptions {
  double margin = 1e-6;                          // decision band above 3
  std::size_t max_cells = std::size_t{1} << 21;  // live cells per level per family
};

struct CoverageVerdict {
  Verdict verdict = Verdict::inconclusive;
  std::optional<ToricCenter> witness_center;
  double witness_value = 0.0;                 // min_s |<a, x_s>|^2 at the witness
  std::optional<double> certified_sup;        // bound on sup_a min_s |<a, x_s>|^2
  std::array<double, 3> family_bounds{};      // per type family
  std::size_t evaluations = 0;
};

/// Decides whether one open toric body can contain every point of S. The
/// search runs over the three center families (b, e^{ia}, e^{ib}) with b in
/// slot 1, 2 or 3; by blob_expand nothing else is needed. Coverable iff some
/// center reaches min_s |<a, x_s>|^2 > 3 + margin; not coverable iff the
/// certified supremum is <= 3 + margin.
CoverageVerdict coverability(GridSubset s, const CoverageOptions& opts = {});

/// min_s |<a, x_s>|^2
double coverage_value(const ComplexVector& a, GridSubset s);

// -- witnesses and lemma sweeps ---------------------------------------------

struct UncoveredWitness {
  TorusPoint point;
  double value = 0.0;      // max_i |<a_i, x>| at the point
  bool from_grid = false;  // false when the discrepancy solver was needed
};

/// A torus point outside all three open bodies B(a_1), B(a_2), B(a_3): the
/// grid is moved by grid_multiplier(a_3) and the best of the 9 points taken.
UncoveredWitness uncovered_witness(const ComplexVector& a1, const ComplexVector& a2,
                                   const ComplexVector& a3);

struct TrigLemmaReport {
  std::size_t resolution = 0;
  std::size_t checked = 0;
  std::size_t opposite_sign = 0;
  std::size_t violations = 0;      // both quadratics > 3 + eps
  std::size_t near_boundary = 0;   // both quadratics > 3 - eps but not a violation
  double max_min_excess = -kInf;   // max over opposite-sign points of min(q1, q2) - 3
};

/// Sweeps b in [0,1] (resolution points), r in [-1,-1/2] u [1/2,1]
/// (resolution points, split evenly) and gamma in [0, 2 pi) (2 * resolution
/// points) for x = cos(gamma), y = cos(gamma - 2pi/3) of opposite signs with
/// 4x^2 + 4brx + b^2 > 3 and 4y^2 + 4bry + b^2 > 3. Throws TheoremViolation on
/// any violation.
TrigLemmaReport verify_trig_lemma(std::size_t resolution);

struct LineLemmaReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double max_value = 0.0;  // max over samples of min_k |<a, (1, w^k, 1)>|^2
};

/// Random a with |a_2| = 1, |a_1|, |a_3| <= 1: some point of the line
/// (1, w^k, 1) is outside the open body, i.e. min_k |.|^2 <= 3.
LineLemmaReport verify_line_lemma(std::size_t samples, std::uint64_t seed = 1);

struct GridPlacementReport {
  std::size_t b_values = 0;
  double max_formula_error = 0.0;  // numeric case values vs closed forms
  double max_case_value = -kInf;   // all cases must be <= 1
  std::size_t random_centers = 0;
  std::size_t bad_placements = 0;  // more than one grid point covered
};

GridPlacementReport verify_grid_placement(std::size_t b_values, std::size_t random_centers,
                                          std::uint64_t seed = 1);

}  // namespace unimod
