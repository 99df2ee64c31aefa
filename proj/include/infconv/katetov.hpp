#pragma once

#include <vector>

#include "infconv/infconv.hpp"
#include "infconv/report.hpp"

namespace infconv {

// Katetov values prescribed on a subset Y of a finite metric carrier.
struct SubspaceFn {
  MetricTable metric;       // metric of the ambient space
  std::vector<int> subset;  // Y, distinct valid indices
  std::vector<Rat> values;  // f on Y

  // Structural checks plus both Katetov inequality chains on Y.
  void validate() const;
};

// The greatest 1-Lipschitz extension: x -> min over y in Y of f(y) + d(x,y).
// Restricts to f on Y and lands in the Katetov class of the whole carrier.
FnOnX katetov_extension(const SubspaceFn& sf);

// f+g stays Katetov (both inequality chains checked on the convolution).
TheoremReport katetov_closure_check(const FiniteMetricMagma& m, const FnOnX& f, const FnOnX& g);

// Nonexpansiveness of convolution in each argument, and exact isometry when
// the other operand is a Kuratowski element.
TheoremReport contraction_isometry_check(const FiniteMetricMagma& m, const FnOnX& f,
                                         const FnOnX& g, const FnOnX& h);

// Returns d_inf(f, gamma(x)) and checks it equals f(x) exactly.
Rat eval_as_distance(const FiniteMetricMagma& m, const FnOnX& f, int x);

// Kuratowski elements are the whole unit group of the Katetov monoid:
// each delta_x inverts to delta_{x^{-1}}, and shifted candidates
// delta_y + c (c > 0) fail because their would-be inverse leaves the class.
TheoremReport katetov_units(const FiniteMetricMagma& m);

}  // namespace infconv
