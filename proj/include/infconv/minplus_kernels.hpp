#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "infconv/rational.hpp"

namespace infconv {

template <class T>
bool is_convex_seq(const std::vector<T>& a) {
  for (std::size_t i = 2; i < a.size(); ++i)
    if (a[i] - a[i - 1] < a[i - 1] - a[i - 2]) return false;
  return true;
}

// c[k] = min_{i+j=k} a[i] + b[j]. Reference kernel, O(nm).
template <class T>
std::vector<T> minplus_naive(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) throw InvariantViolation("minplus: empty operand");
  const std::size_t n = a.size(), m = b.size();
  std::vector<T> c(n + m - 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const std::size_t jlo = k >= m ? k - m + 1 : 0;
    const std::size_t jhi = std::min(k, n - 1);
    T best = a[jlo] + b[k - jlo];
    for (std::size_t j = jlo + 1; j <= jhi; ++j) {
      T v = a[j] + b[k - j];
      if (v < best) best = v;
    }
    c[k] = best;
  }
  return c;
}

// Both operands convex: the result is the sum of the endpoints followed by
// the merge of the two difference sequences in nondecreasing order. O(n+m).
template <class T>
std::vector<T> convex_minplus_merge(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) throw InvariantViolation("minplus: empty operand");
  if (!is_convex_seq(a) || !is_convex_seq(b))
    throw InvariantViolation("convex_minplus_merge: operand is not convex");
  std::vector<T> c;
  c.reserve(a.size() + b.size() - 1);
  T cur = a[0] + b[0];
  c.push_back(cur);
  std::size_t i = 1, j = 1;
  while (i < a.size() || j < b.size()) {
    const bool take_a =
        j >= b.size() || (i < a.size() && a[i] - a[i - 1] <= b[j] - b[j - 1]);
    if (take_a) {
      cur += a[i] - a[i - 1];
      ++i;
    } else {
      cur += b[j] - b[j - 1];
      ++j;
    }
    c.push_back(cur);
  }
  return c;
}

// Leftmost row-minimum column of every row of an implicit totally monotone
// matrix. `value(r, c)` must be cheap; rows/cols are index lists.
template <class F>
void smawk_row_minima(const std::vector<int>& rows, const std::vector<int>& cols, F& value,
                      std::vector<int>& argmin) {
  if (rows.empty()) return;

  // REDUCE: prune columns that cannot hold any row minimum.
  std::vector<int> surv;
  surv.reserve(std::min(rows.size(), cols.size()));
  for (int c : cols) {
    while (!surv.empty() &&
           value(rows[surv.size() - 1], c) < value(rows[surv.size() - 1], surv.back()))
      surv.pop_back();
    if (surv.size() < rows.size()) surv.push_back(c);
  }

  std::vector<int> odd;
  for (std::size_t i = 1; i < rows.size(); i += 2) odd.push_back(rows[i]);
  smawk_row_minima(odd, surv, value, argmin);

  // Fill the even rows; candidates are bracketed by the odd-row minima.
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    const int r = rows[i];
    const int stop = (i + 1 < rows.size()) ? argmin[rows[i + 1]] : surv.back();
    int best = surv[k];
    auto bestv = value(r, surv[k]);
    while (surv[k] != stop) {
      ++k;
      auto v = value(r, surv[k]);
      if (v < bestv) {
        bestv = v;
        best = surv[k];
      }
    }
    argmin[r] = best;
  }
}

// One convex operand makes A[i][j] = a[j] + b[i-j] totally monotone once b is
// extended over Z by steep convex tails, so row minima come from SMAWK in
// O(n+m). Exact equality with the naive kernel.
template <class T>
std::vector<T> smawk_minplus(const std::vector<T>& a, const std::vector<T>& b,
                             std::uint64_t* probe_count = nullptr) {
  if (a.empty() || b.empty()) throw InvariantViolation("minplus: empty operand");
  if (!is_convex_seq(b)) throw InvariantViolation("smawk_minplus: second operand is not convex");
  const int n = (int)a.size(), m = (int)b.size();

  // Tail slope steep enough that padded entries never win a row minimum.
  T amin = *std::min_element(a.begin(), a.end());
  T amax = *std::max_element(a.begin(), a.end());
  T bmin = *std::min_element(b.begin(), b.end());
  T bmax = *std::max_element(b.begin(), b.end());
  T steep = (amax - amin) + (bmax - bmin) + 1;

  auto value = [&](int i, int j) -> T {
    if (probe_count) ++*probe_count;
    const int t = i - j;
    if (t < 0) return a[j] + b[0] + steep * T(-t);
    if (t >= m) return a[j] + b[m - 1] + steep * T(t - m + 1);
    return a[j] + b[t];
  };

  const int nrows = n + m - 1;
  std::vector<int> rows(nrows), cols(n);
  for (int i = 0; i < nrows; ++i) rows[i] = i;
  for (int j = 0; j < n; ++j) cols[j] = j;
  std::vector<int> argmin(nrows, 0);
  smawk_row_minima(rows, cols, value, argmin);

  std::vector<T> c(nrows);
  for (int i = 0; i < nrows; ++i) c[i] = value(i, argmin[i]);
  return c;
}

}  // namespace infconv
