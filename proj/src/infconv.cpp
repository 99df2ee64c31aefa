#include "infconv/infconv.hpp"

#include <sstream>

namespace infconv {

FnOnX inf_conv(const FiniteMetricMagma& m, const FnOnX& f, const FnOnX& g) {
  const int n = m.n();
  if (f.size() != n || g.size() != n) throw InvariantViolation("inf_conv: size mismatch");
  f.validate();
  g.validate();
  FnOnX out;
  out.values.assign(n, ExtRat::inf());
  for (int y = 0; y < n; ++y) {
    if (f[y].is_inf()) continue;
    for (int z = 0; z < n; ++z) {
      if (g[z].is_inf()) continue;
      ExtRat v = f[y] + g[z];
      ExtRat& slot = out[m.op(y, z)];
      if (v < slot) slot = v;
    }
  }
  return out;
}

AttainmentReport attainment(const FiniteMetricMagma& m, const FnOnX& f, const FnOnX& g, int a) {
  const int n = m.n();
  if (f.size() != n || g.size() != n) throw InvariantViolation("attainment: size mismatch");
  if (a < 0 || a >= n) throw InvariantViolation("attainment: index out of range");
  AttainmentReport rep;
  rep.target = a;
  rep.value = ExtRat::inf();
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      if (m.op(y, z) != a) continue;
      const ExtRat v = f[y] + g[z];
      if (v < rep.value) {
        rep.value = v;
        rep.minimizing_pairs.clear();
        rep.minimizing_pairs.emplace_back(y, z);
      } else if (v == rep.value && !rep.value.is_inf()) {
        rep.minimizing_pairs.emplace_back(y, z);
      }
    }
  if (rep.value.is_inf()) rep.minimizing_pairs.clear();  // empty fiber convention
  rep.strongly_attained = rep.minimizing_pairs.size() == 1;
  return rep;
}

Fond0Report verify_fond0(const FiniteMetricMagma& m, const FnOnX& f, const FnOnX& g) {
  const int n = m.n();
  if (f.size() != n || g.size() != n) throw InvariantViolation("fond0: size mismatch");
  if (!f.all_finite() || !g.all_finite())
    throw InvariantViolation("fond0: requires finite-valued functions");

  Fond0Report rep;
  rep.conv = inf_conv(m, f, g);
  rep.direction_i = strong_min(rep.conv);
  const auto ytilde = strong_min(f);
  const auto ztilde = strong_min(g);
  if (ytilde && ztilde) rep.direction_ii = std::make_pair(*ytilde, *ztilde);

  std::optional<int> candidate = rep.direction_i;
  if (!candidate && rep.direction_ii)
    candidate = m.op(rep.direction_ii->first, rep.direction_ii->second);

  bool hypothesis = true;
  if (candidate) hypothesis = d_invariance_at(m, *candidate).has_value();

  if (rep.direction_i && rep.direction_ii) {
    rep.equivalence_holds =
        m.op(rep.direction_ii->first, rep.direction_ii->second) == *rep.direction_i;
  } else {
    rep.equivalence_holds = !rep.direction_i && !rep.direction_ii;
  }

  std::ostringstream note;
  if (rep.direction_i && rep.direction_ii) {
    const int a = *rep.direction_i;
    const int yt = rep.direction_ii->first, zt = rep.direction_ii->second;

    const AttainmentReport att = attainment(m, f, g, a);
    rep.consequence1_holds = att.strongly_attained && att.minimizing_pairs.size() == 1 &&
                             att.minimizing_pairs[0] == std::make_pair(yt, zt);

    // f(x) - f(y~) >= (f+g)(x z~) - (f+g)(a), and symmetrically in g.
    rep.consequence2_holds = true;
    const Rat conv_a = rep.conv[a].finite();
    for (int x = 0; x < n && rep.consequence2_holds; ++x) {
      if (f[x].finite() - f[yt].finite() < rep.conv[m.op(x, zt)].finite() - conv_a)
        rep.consequence2_holds = false;
      if (g[x].finite() - g[zt].finite() < rep.conv[m.op(yt, x)].finite() - conv_a)
        rep.consequence2_holds = false;
    }
    note << "direction I at " << a << ", direction II at (" << yt << "," << zt << ")";
  } else if (rep.direction_i) {
    note << "strong minimum of the convolution at " << *rep.direction_i
         << " but f or g has none";
  } else if (rep.direction_ii) {
    note << "f,g have strong minima (" << rep.direction_ii->first << ","
         << rep.direction_ii->second << ") but the convolution has none";
  } else {
    note << "no strong minima on either side";
  }
  rep.witness = note.str();

  const bool all_ok = rep.equivalence_holds && rep.consequence1_holds && rep.consequence2_holds;
  if (!hypothesis)
    rep.status = Fond0Status::HypothesisUnmet;
  else
    rep.status = all_ok ? Fond0Status::Holds : Fond0Status::Violated;
  return rep;
}

AssocTree AssocTree::make_leaf(int i) {
  AssocTree t;
  t.leaf = i;
  return t;
}

AssocTree AssocTree::make_node(AssocTree l, AssocTree r) {
  AssocTree t;
  t.left = std::make_unique<AssocTree>(std::move(l));
  t.right = std::make_unique<AssocTree>(std::move(r));
  return t;
}

AssocTree left_fold_tree(int k) {
  AssocTree t = AssocTree::make_leaf(0);
  for (int i = 1; i < k; ++i)
    t = AssocTree::make_node(std::move(t), AssocTree::make_leaf(i));
  return t;
}

AssocTree right_fold_tree(int k) {
  AssocTree t = AssocTree::make_leaf(k - 1);
  for (int i = k - 2; i >= 0; --i)
    t = AssocTree::make_node(AssocTree::make_leaf(i), std::move(t));
  return t;
}

namespace {
FnOnX eval_tree(const FiniteMetricMagma& m, const std::vector<FnOnX>& fs, const AssocTree& t) {
  if (t.leaf >= 0) {
    if (t.leaf >= (int)fs.size()) throw InvariantViolation("n_fold_conv: leaf index out of range");
    return fs[t.leaf];
  }
  return inf_conv(m, eval_tree(m, fs, *t.left), eval_tree(m, fs, *t.right));
}
}  // namespace

FnOnX n_fold_conv(const FiniteMetricMagma& m, const std::vector<FnOnX>& fs,
                  const AssocTree& order) {
  if (fs.empty()) throw InvariantViolation("n_fold_conv: empty operand sequence");
  return eval_tree(m, fs, order);
}

}  // namespace infconv
