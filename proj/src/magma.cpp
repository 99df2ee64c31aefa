#include "infconv/magma.hpp"

#include <algorithm>

namespace infconv {

void MetricTable::validate() const {
  if (n <= 0) throw InvariantViolation("metric: carrier size must be positive");
  if ((int)d.size() != n) throw InvariantViolation("metric: row count != n");
  for (int i = 0; i < n; ++i) {
    if ((int)d[i].size() != n)
      throw InvariantViolation("metric[" + std::to_string(i) + "]: column count != n");
  }
  for (int i = 0; i < n; ++i) {
    if (d[i][i] != 0)
      throw InvariantViolation("metric[" + std::to_string(i) + "][" + std::to_string(i) +
                               "]: diagonal must be 0");
    for (int j = 0; j < n; ++j) {
      if (d[i][j] != d[j][i])
        throw InvariantViolation("metric[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "]: not symmetric");
      if (i != j && d[i][j] <= 0)
        throw InvariantViolation("metric[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "]: off-diagonal entries must be positive");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (d[i][k] > d[i][j] + d[j][k])
          throw InvariantViolation("metric: triangle inequality fails at (" + std::to_string(i) +
                                   "," + std::to_string(j) + "," + std::to_string(k) + ")");
}

MetricTable discrete_metric(int n) {
  MetricTable t;
  t.n = n;
  t.d.assign(n, std::vector<Rat>(n, Rat(1)));
  for (int i = 0; i < n; ++i) t.d[i][i] = 0;
  return t;
}

void FiniteMetricMagma::validate() const {
  metric.validate();
  const int sz = metric.n;
  if ((int)law.size() != sz) throw InvariantViolation("law: row count != n");
  for (int y = 0; y < sz; ++y) {
    if ((int)law[y].size() != sz)
      throw InvariantViolation("law[" + std::to_string(y) + "]: column count != n");
    for (int z = 0; z < sz; ++z)
      if (law[y][z] < 0 || law[y][z] >= sz)
        throw InvariantViolation("law[" + std::to_string(y) + "][" + std::to_string(z) +
                                 "]: index out of range");
  }
  if (!labels.empty() && (int)labels.size() != sz)
    throw InvariantViolation("labels: length != n");
  // invariant translations are injective, hence bijective on a finite carrier
  if (check_metric_invariance(*this) && !is_latin_square(*this))
    throw std::logic_error("invariant law is not a Latin square");
}

std::string to_string(MagmaClass c) {
  switch (c) {
    case MagmaClass::Magma: return "Magma";
    case MagmaClass::Quasigroup: return "Quasigroup";
    case MagmaClass::Loop: return "Loop";
    case MagmaClass::Group: return "Group";
    case MagmaClass::AbelianGroup: return "AbelianGroup";
  }
  return "Magma";
}

bool check_metric_invariance(const FiniteMetricMagma& m) {
  const int n = m.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (m.dist(m.op(x, y), m.op(x, z)) != m.dist(y, z)) return false;
        if (m.dist(m.op(y, x), m.op(z, x)) != m.dist(y, z)) return false;
      }
  return true;
}

bool is_latin_square(const FiniteMetricMagma& m) {
  const int n = m.n();
  std::vector<char> seen(n);
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int z = 0; z < n; ++z) {
      if (seen[m.op(y, z)]) return false;
      seen[m.op(y, z)] = 1;
    }
  }
  for (int z = 0; z < n; ++z) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      if (seen[m.op(y, z)]) return false;
      seen[m.op(y, z)] = 1;
    }
  }
  return true;
}

std::optional<int> two_sided_identity(const FiniteMetricMagma& m) {
  const int n = m.n();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = m.op(e, b) == b && m.op(b, e) == b;
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_associative(const FiniteMetricMagma& m) {
  const int n = m.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) return false;
  return true;
}

MagmaClass classify_magma(const FiniteMetricMagma& m) {
  if (!is_latin_square(m)) return MagmaClass::Magma;
  if (!two_sided_identity(m)) return MagmaClass::Quasigroup;
  if (!is_associative(m)) return MagmaClass::Loop;
  const int n = m.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.op(a, b) != m.op(b, a)) return MagmaClass::Group;
  return MagmaClass::AbelianGroup;
}

FiberSet delta_fiber(const FiniteMetricMagma& m, int x) {
  const int n = m.n();
  FiberSet fs;
  fs.target = x;
  std::vector<char> in1(n, 0), in2(n, 0);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      if (m.op(y, z) == x) {
        fs.pairs.emplace_back(y, z);
        in1[y] = 1;
        in2[z] = 1;
      }
  for (int i = 0; i < n; ++i) {
    if (in1[i]) fs.proj1.push_back(i);
    if (in2[i]) fs.proj2.push_back(i);
  }
  return fs;
}

std::optional<DInvarianceConstants> d_invariance_at(const FiniteMetricMagma& m, int x) {
  const FiberSet fs = delta_fiber(m, x);
  if (fs.pairs.empty()) return std::nullopt;

  DInvarianceConstants c{Rat(1), Rat(1), Rat(1), Rat(1)};
  bool first_side_seen = false, second_side_seen = false;

  for (std::size_t i = 0; i < fs.proj1.size(); ++i)
    for (std::size_t j = i + 1; j < fs.proj1.size(); ++j) {
      const int y1 = fs.proj1[i], y2 = fs.proj1[j];
      for (int z : fs.proj2) {
        Rat ratio = m.dist(m.op(y1, z), m.op(y2, z)) / m.dist(y1, y2);
        if (!first_side_seen) {
          c.l1 = c.l2 = ratio;
          first_side_seen = true;
        } else {
          if (ratio > c.l1) c.l1 = ratio;
          if (ratio < c.l2) c.l2 = ratio;
        }
      }
    }
  for (std::size_t i = 0; i < fs.proj2.size(); ++i)
    for (std::size_t j = i + 1; j < fs.proj2.size(); ++j) {
      const int z1 = fs.proj2[i], z2 = fs.proj2[j];
      for (int y : fs.proj1) {
        Rat ratio = m.dist(m.op(y, z1), m.op(y, z2)) / m.dist(z1, z2);
        if (!second_side_seen) {
          c.l1p = c.l2p = ratio;
          second_side_seen = true;
        } else {
          if (ratio > c.l1p) c.l1p = ratio;
          if (ratio < c.l2p) c.l2p = ratio;
        }
      }
    }

  if (c.l2 == 0 || c.l2p == 0) return std::nullopt;  // some distinct pair collapses
  return c;
}

int group_inverse(const FiniteMetricMagma& m, int e, int y) {
  const int n = m.n();
  for (int z = 0; z < n; ++z)
    if (m.op(y, z) == e) return z;
  throw InvariantViolation("no inverse for element " + std::to_string(y));
}

FiniteMetricMagma cyclic_group(int n) { return cyclic_group(n, discrete_metric(n)); }

FiniteMetricMagma cyclic_group(int n, MetricTable metric) {
  FiniteMetricMagma m;
  m.metric = std::move(metric);
  m.law.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.law[a][b] = (a + b) % n;
  return m;
}

FiniteMetricMagma dihedral_group(int k) {
  // r^i s^j with index i + k*j; (r^i s^j)(r^u s^v) = r^{i + (-1)^j u} s^{j^v}
  const int n = 2 * k;
  FiniteMetricMagma m;
  m.metric = discrete_metric(n);
  m.law.assign(n, std::vector<int>(n));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < 2; ++j)
      for (int u = 0; u < k; ++u)
        for (int v = 0; v < 2; ++v) {
          const int rot = ((j == 0 ? i + u : i - u) % k + k) % k;
          const int flip = j ^ v;
          m.law[i + k * j][u + k * v] = rot + k * flip;
        }
  return m;
}

FiniteMetricMagma subtraction_magma(int n) {
  FiniteMetricMagma m;
  m.metric = discrete_metric(n);
  m.law.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.law[a][b] = ((a - b) % n + n) % n;
  return m;
}

FiniteMetricMagma left_projection_magma(int n) {
  FiniteMetricMagma m;
  m.metric = discrete_metric(n);
  m.law.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.law[a][b] = a;
  return m;
}

FiniteMetricMagma smallest_nonassociative_loop() {
  FiniteMetricMagma m;
  m.metric = discrete_metric(5);
  m.law = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 3, 4, 0, 1},
      {3, 4, 1, 2, 0},
      {4, 2, 0, 1, 3},
  };
  return m;
}

}  // namespace infconv
