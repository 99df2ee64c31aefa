#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infconv/fnspace.hpp"

namespace infconv {

// (f+g)(x) = min over y.z = x of f(y) + g(z), +inf on empty fibers.
FnOnX inf_conv(const FiniteMetricMagma& m, const FnOnX& f, const FnOnX& g);

// Minimizers of eta_{f,g}(y,z) = f(y)+g(z) on the fiber of a. Ties are
// enumerated, never broken: strong attainment means a unique minimizing pair.
struct AttainmentReport {
  int target = 0;
  ExtRat value;
  std::vector<std::pair<int, int>> minimizing_pairs;
  bool strongly_attained = false;
};

AttainmentReport attainment(const FiniteMetricMagma& m, const FnOnX& f, const FnOnX& g, int a);

// Outcome of the strong-minimum factorization check:
//   I)  f+g has a strong minimum at a
//   II) f has a strong minimum at y~ and g at z~ with y~ z~ = a
// Holds/Violated only when the law is d-invariant at the candidate point;
// otherwise the outcome is recorded with no conclusion drawn.
enum class Fond0Status { Holds, Violated, HypothesisUnmet };

struct Fond0Report {
  std::optional<int> direction_i;
  std::optional<std::pair<int, int>> direction_ii;
  bool equivalence_holds = false;
  bool consequence1_holds = true;  // strong attainment at (y~, z~); vacuous if a direction is absent
  bool consequence2_holds = true;  // the two pointwise inequalities; vacuous likewise
  Fond0Status status = Fond0Status::Holds;
  std::string witness;
  FnOnX conv;
};

Fond0Report verify_fond0(const FiniteMetricMagma& m, const FnOnX& f, const FnOnX& g);

// Binary parenthesization over operand indices.
struct AssocTree {
  int leaf = -1;  // >= 0 means leaf holding an operand index
  std::unique_ptr<AssocTree> left, right;

  static AssocTree make_leaf(int i);
  static AssocTree make_node(AssocTree l, AssocTree r);
};

AssocTree left_fold_tree(int k);   // ((0,1),2),...
AssocTree right_fold_tree(int k);  // 0,(1,(2,...))

FnOnX n_fold_conv(const FiniteMetricMagma& m, const std::vector<FnOnX>& fs,
                  const AssocTree& order);

}  // namespace infconv
