#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infconv/rational.hpp"

namespace infconv {

// Symmetric rational metric on the index set {0,...,n-1}.
struct MetricTable {
  int n = 0;
  std::vector<std::vector<Rat>> d;

  const Rat& operator()(int i, int j) const { return d[i][j]; }

  // Zero diagonal, symmetry, positivity off the diagonal, triangle
  // inequality. Throws InvariantViolation naming the offending entry.
  void validate() const;
};

MetricTable discrete_metric(int n);

// Finite carrier: a total binary law given as a table, plus a metric.
struct FiniteMetricMagma {
  MetricTable metric;
  std::vector<std::vector<int>> law;  // law[y][z] in [0,n)
  std::vector<std::string> labels;    // optional display names, same length as n

  int n() const { return metric.n; }
  int op(int y, int z) const { return law[y][z]; }
  const Rat& dist(int i, int j) const { return metric.d[i][j]; }
  void validate() const;
};

// Classification chain; each label implies the previous ones.
enum class MagmaClass { Magma, Quasigroup, Loop, Group, AbelianGroup };

std::string to_string(MagmaClass c);

// d(x.y, x.z) = d(y,z) = d(y.x, z.x) for all x, y, z.
bool check_metric_invariance(const FiniteMetricMagma& m);

bool is_latin_square(const FiniteMetricMagma& m);
std::optional<int> two_sided_identity(const FiniteMetricMagma& m);
bool is_associative(const FiniteMetricMagma& m);

// Finest label that applies.
MagmaClass classify_magma(const FiniteMetricMagma& m);

// The fiber {(y,z) : y.z = x} with its coordinate projections.
struct FiberSet {
  int target = 0;
  std::vector<std::pair<int, int>> pairs;  // lexicographic order
  std::vector<int> proj1, proj2;           // sorted, deduplicated
};

FiberSet delta_fiber(const FiniteMetricMagma& m, int x);

// Tightest two-sided Lipschitz constants of the law restricted to the fiber
// projections at x. Vacuous constraint families default to 1.
struct DInvarianceConstants {
  Rat l1, l2;    // first coordinate: upper, lower
  Rat l1p, l2p;  // second coordinate: upper, lower
};

// nullopt when the fiber is empty or some distinct pair collapses (no
// positive lower constant exists).
std::optional<DInvarianceConstants> d_invariance_at(const FiniteMetricMagma& m, int x);

// Unique z with y.z = e. Requires a group carrier.
int group_inverse(const FiniteMetricMagma& m, int e, int y);

// Carrier builders used throughout the tests and randomized suites.
FiniteMetricMagma cyclic_group(int n);
FiniteMetricMagma cyclic_group(int n, MetricTable metric);
FiniteMetricMagma dihedral_group(int k);  // order 2k, discrete metric
FiniteMetricMagma subtraction_magma(int n);
FiniteMetricMagma left_projection_magma(int n);
FiniteMetricMagma smallest_nonassociative_loop();  // order 5

}  // namespace infconv
