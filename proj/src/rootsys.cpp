#include "bdforge/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bdforge/errors.hpp"

namespace bdforge {

namespace {

std::vector<std::vector<long>> gram_matrix(char type, int n) {
  std::vector<std::vector<long>> g(n, std::vector<long>(n, 0));
  auto link = [&](int i, int j, long v) { g[i][j] = g[j][i] = v; };
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'G':
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      break;
  }
  return g;
}

int min_rank(char type) {
  switch (type) {
    case 'A': return 1;
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'G': return 2;
    default: return -1;
  }
}

bool is_sorted_unique(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](int a, int b) { return a >= b; }) == v.end();
}

}  // namespace

RootSystem build_root_system(char type, int rank) {
  const int lo = min_rank(type);
  if (lo < 0) throw UnsupportedType(std::string("unknown root system type '") + type + "'");
  const int hi = type == 'G' ? 2 : kMaxRank;
  if (rank < lo || rank > hi) {
    throw UnsupportedType(std::string("unsupported rank ") + std::to_string(rank) + " for type " + type);
  }

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.gram_ = gram_matrix(type, rank);
  rs.cartan_.assign(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan_[i][j] = static_cast<int>(2 * rs.gram_[i][j] / rs.gram_[j][j]);

  // alpha-string algorithm, one height level at a time
  std::set<Root> known;
  std::vector<Root> level;
  for (int i = 0; i < rank; ++i) level.push_back(rs.simple_root(i));
  while (!level.empty()) {
    known.insert(level.begin(), level.end());
    std::set<Root> next;
    for (const Root& beta : level) {
      for (int i = 0; i < rank; ++i) {
        Root down = beta;
        int p = 0;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        const int q = p - rs.pairing(beta, i);
        if (q > 0 && beta != rs.simple_root(i)) {
          Root up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
  }

  rs.positive_.assign(known.begin(), known.end());
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
    const int ha = height(a);
    const int hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (int k = 0; k < rs.num_positive(); ++k) rs.positive_lookup_[rs.positive_[k]] = k;
  return rs;
}

std::vector<Root> RootSystem::roots() const {
  std::vector<Root> all = positive_;
  for (const Root& r : positive_) all.push_back(negate(r));
  return all;
}

int RootSystem::positive_index(const Root& r) const {
  auto it = positive_lookup_.find(r);
  return it == positive_lookup_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& r) const {
  return positive_index(r) >= 0 || positive_index(negate(r)) >= 0;
}

long RootSystem::inner(const Root& a, const Root& b) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += static_cast<long>(a[i]) * b[j] * gram_[i][j];
  }
  return s;
}

int RootSystem::pairing(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += beta[j] * cartan_[j][i];
  return s;
}

Root RootSystem::simple_root(int i) const {
  Root r(rank_, 0);
  r[i] = 1;
  return r;
}

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

Root negate(const Root& r) {
  Root out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = -r[i];
  return out;
}

Root add(const Root& a, const Root& b) {
  Root out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Root subtract(const Root& a, const Root& b) {
  Root out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

DiagramAutomorphism::DiagramAutomorphism(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<int> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < size(); ++i) {
    if (sorted[i] != i) throw InvalidArgument("diagram automorphism is not a permutation");
  }
}

DiagramAutomorphism DiagramAutomorphism::identity(int rank) {
  std::vector<int> p(rank);
  std::iota(p.begin(), p.end(), 0);
  return DiagramAutomorphism(std::move(p));
}

Root DiagramAutomorphism::apply(const Root& r) const {
  Root out(r.size(), 0);
  for (int i = 0; i < size(); ++i) out[perm_[i]] = r[i];
  return out;
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& other) const {
  std::vector<int> p(size());
  for (int i = 0; i < size(); ++i) p[i] = perm_[other.perm_[i]];
  return DiagramAutomorphism(std::move(p));
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  std::vector<int> p(size());
  for (int i = 0; i < size(); ++i) p[perm_[i]] = i;
  return DiagramAutomorphism(std::move(p));
}

bool DiagramAutomorphism::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

int DiagramAutomorphism::order() const {
  DiagramAutomorphism p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p.compose(*this);
    ++k;
  }
  return k;
}

bool preserves_cartan(const RootSystem& rs, const DiagramAutomorphism& pi) {
  if (pi.size() != rs.rank()) return false;
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (rs.cartan()[pi(i)][pi(j)] != rs.cartan()[i][j]) return false;
  return true;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
  std::vector<int> p(rs.rank());
  std::iota(p.begin(), p.end(), 0);
  std::vector<DiagramAutomorphism> out;
  do {
    DiagramAutomorphism pi(p);
    if (preserves_cartan(rs, pi)) out.push_back(std::move(pi));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void validate_triple_shape(const RootSystem& rs, const AdmissibleTriple& t) {
  auto in_range = [&](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [&](int i) { return i >= 0 && i < rs.rank(); });
  };
  if (!in_range(t.gamma1) || !in_range(t.gamma2)) throw InvalidArgument("triple index out of range");
  if (!is_sorted_unique(t.gamma1) || !is_sorted_unique(t.gamma2)) {
    throw InvalidArgument("triple subsets must be duplicate-free");
  }
  if (t.gamma1.size() != t.gamma2.size() || t.tau.size() != t.gamma1.size()) {
    throw InvalidArgument("tau must be a bijection between subsets of equal size");
  }
  std::set<int> image;
  for (int a : t.gamma1) {
    auto it = t.tau.find(a);
    if (it == t.tau.end()) throw InvalidArgument("tau is not defined on all of gamma1");
    if (!std::binary_search(t.gamma2.begin(), t.gamma2.end(), it->second)) {
      throw InvalidArgument("tau maps outside gamma2");
    }
    image.insert(it->second);
  }
  if (image.size() != t.gamma2.size()) throw InvalidArgument("tau is not injective");
}

bool tau_is_isometry(const RootSystem& rs, const AdmissibleTriple& t) {
  for (const auto& [a, ta] : t.tau)
    for (const auto& [b, tb] : t.tau)
      if (rs.gram()[ta][tb] != rs.gram()[a][b]) return false;
  return true;
}

std::optional<int> nilpotency_witness(const AdmissibleTriple& t, int alpha) {
  const int bound = static_cast<int>(t.gamma1.size());
  int cur = alpha;
  for (int k = 1; k <= bound + 1; ++k) {
    cur = t.tau.at(cur);
    if (!t.tau.count(cur)) return k;
  }
  return std::nullopt;
}

bool is_admissible(const RootSystem& rs, const AdmissibleTriple& t) {
  try {
    validate_triple_shape(rs, t);
  } catch (const InvalidArgument&) {
    return false;
  }
  if (!tau_is_isometry(rs, t)) return false;
  for (int a : t.gamma1)
    if (!nilpotency_witness(t, a)) return false;
  return true;
}

std::vector<AdmissibleTriple> enumerate_admissible_triples(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }

  std::vector<AdmissibleTriple> out;
  for (const auto& g1 : subsets) {
    for (const auto& g2 : subsets) {
      if (g1.size() != g2.size()) continue;
      std::vector<int> image = g2;
      do {
        AdmissibleTriple t;
        t.gamma1 = g1;
        t.gamma2 = g2;
        for (std::size_t k = 0; k < g1.size(); ++k) t.tau[g1[k]] = image[k];
        if (!tau_is_isometry(rs, t)) continue;
        bool nilpotent = true;
        for (int a : g1) {
          const auto k = nilpotency_witness(t, a);
          if (!k) {
            nilpotent = false;
            break;
          }
          if (*k > static_cast<int>(g1.size())) throw IdentityViolation("nilpotency witness exceeds |gamma1|");
        }
        if (nilpotent) out.push_back(std::move(t));
      } while (std::next_permutation(image.begin(), image.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool supported_on(const Root& r, const std::vector<int>& subset) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] != 0 && !std::binary_search(subset.begin(), subset.end(), static_cast<int>(i))) return false;
  }
  return true;
}

std::optional<Root> extend_tau(const RootSystem& rs, const AdmissibleTriple& t, const Root& alpha, int k) {
  if (k < 1) throw InvalidArgument("extend_tau needs k >= 1");
  if (static_cast<int>(alpha.size()) != rs.rank() || !rs.is_positive_root(alpha) || !supported_on(alpha, t.gamma1)) {
    throw InvalidArgument("extend_tau needs a positive root in the span of gamma1");
  }
  Root cur = alpha;
  for (int step = 0; step < k; ++step) {
    if (!supported_on(cur, t.gamma1)) return std::nullopt;
    Root next(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
      if (cur[i] != 0) next[t.tau.at(i)] += cur[i];
    cur = std::move(next);
  }
  if (!rs.is_positive_root(cur)) throw IdentityViolation("tau extension left the root system");
  return cur;
}

}  // namespace bdforge
