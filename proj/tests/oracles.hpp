#pragma once

// Brute-force reference computations used to derive the frozen constants in
// the test suite. Nothing here calls into the library: Dynkin data is typed in
// by hand and everything else is plain enumeration.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

// a[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering
inline Matrix cartan(char type, int n) {
  Matrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

// all roots by closing the simple roots under simple reflections
inline std::set<std::vector<int>> roots(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    todo.push_back(e);
    seen.insert(e);
  }
  while (!todo.empty()) {
    const std::vector<int> b = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      int pairing = 0;  // <b, alpha_i^vee>
      for (int j = 0; j < n; ++j) pairing += b[j] * a[i][j];
      std::vector<int> c = b;
      c[i] -= pairing;
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  return seen;
}

inline int root_count(char type, int n) { return static_cast<int>(roots(cartan(type, n)).size()); }

inline bool preserves(const Matrix& a, const std::vector<int>& from, const std::vector<int>& to) {
  for (std::size_t i = 0; i < from.size(); ++i)
    for (std::size_t j = 0; j < from.size(); ++j)
      if (a[to[i]][to[j]] != a[from[i]][from[j]]) return false;
  return true;
}

inline int diagram_automorphism_count(char type, int n) {
  const Matrix a = cartan(type, n);
  std::vector<int> id(n), p(n);
  std::iota(id.begin(), id.end(), 0);
  p = id;
  int count = 0;
  do {
    if (preserves(a, id, p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// squared root lengths up to scale, from d_i a_ij = d_j a_ji on the connected diagram
inline std::vector<int> root_lengths(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> d(n, 0);
  d[0] = 6;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i] && !d[j] && a[i][j]) {
          d[j] = d[i] * a[i][j] / a[j][i];
          changed = true;
        }
  }
  return d;
}

// every pair of equal-size subsets, every bijection between them; keep the
// isometries (Cartan entries and root lengths preserved) whose iterates
// leave gamma1
inline int triple_count(char type, int n) {
  const Matrix a = cartan(type, n);
  const std::vector<int> len = root_lengths(a);
  int count = 0;
  for (int m1 = 0; m1 < (1 << n); ++m1) {
    for (int m2 = 0; m2 < (1 << n); ++m2) {
      if (__builtin_popcount(m1) != __builtin_popcount(m2)) continue;
      std::vector<int> g1, g2;
      for (int i = 0; i < n; ++i) {
        if (m1 >> i & 1) g1.push_back(i);
        if (m2 >> i & 1) g2.push_back(i);
      }
      std::vector<int> img = g2;
      do {
        if (!preserves(a, g1, img)) continue;
        bool lengths = true;
        for (std::size_t k = 0; k < g1.size(); ++k) lengths = lengths && len[g1[k]] == len[img[k]];
        if (!lengths) continue;
        std::vector<int> tau(n, -1);
        for (std::size_t k = 0; k < g1.size(); ++k) tau[g1[k]] = img[k];
        bool nilpotent = true;
        for (int start : g1) {
          int cur = start;
          int steps = 0;
          while (cur >= 0 && tau[cur] >= 0 && steps <= n) {
            cur = tau[cur];
            ++steps;
          }
          if (steps > n) nilpotent = false;
        }
        if (nilpotent) ++count;
      } while (std::next_permutation(img.begin(), img.end()));
    }
  }
  return count;
}

}  // namespace oracle
