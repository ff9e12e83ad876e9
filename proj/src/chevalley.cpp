#include "bdforge/chevalley.hpp"

#include <functional>
#include <map>
#include <optional>

namespace bdforge {

namespace {

constexpr long kUnset = std::numeric_limits<long>::min();

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {
  compute_structure_constants();
  build_brackets();
  build_killing_and_casimir();
}

ChevalleyAlgebra build_chevalley(char type, int rank) { return ChevalleyAlgebra(build_root_system(type, rank)); }

int ChevalleyAlgebra::root_index(const Root& root) const {
  const int k = rs_.positive_index(root);
  if (k >= 0) return pos_index(k);
  const int m = rs_.positive_index(negate(root));
  if (m >= 0) return neg_index(m);
  throw InvalidArgument("not a root");
}

Root ChevalleyAlgebra::weight(int index) const {
  if (index < rank()) return Root(rank(), 0);
  const int p = rs_.num_positive();
  const int k = index - rank();
  return k < p ? rs_.positive_roots()[k] : negate(rs_.positive_roots()[k - p]);
}

int ChevalleyAlgebra::opposite(int index) const {
  if (index < rank()) return index;
  const int p = rs_.num_positive();
  const int k = index - rank();
  return k < p ? neg_index(k) : pos_index(k - p);
}

std::string ChevalleyAlgebra::basis_label(int index) const {
  if (index < rank()) return "H" + std::to_string(index + 1);
  const Root w = weight(index);
  std::string s = "X[";
  for (int i = 0; i < rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

std::vector<Rational> ChevalleyAlgebra::coroot(const Root& a) const {
  std::vector<Rational> h(rank());
  const long n2 = rs_.norm2(a);
  for (int i = 0; i < rank(); ++i) h[i] = Rational(a[i] * rs_.gram()[i][i], n2);
  return h;
}

void ChevalleyAlgebra::compute_structure_constants() {
  const auto& pos = rs_.positive_roots();
  const int np = rs_.num_positive();
  const int r = rank();
  n_pos_.assign(np, std::vector<long>(np, kUnset));
  decomp_.assign(np, Decomposition{-1, -1});

  // extraspecial pair of each non-simple positive root: the smallest gamma
  // (in root order) with xi - gamma positive
  std::vector<std::pair<int, int>> extraspecial(np, {-1, -1});
  for (int x = r; x < np; ++x) {
    for (int c = 0; c < x; ++c) {
      const int d = rs_.positive_index(subtract(pos[x], pos[c]));
      if (d >= 0) {
        extraspecial[x] = {c, d};
        break;
      }
    }
    for (int i = 0; i < r; ++i) {
      const int d = rs_.positive_index(subtract(pos[x], rs_.simple_root(i)));
      if (d >= 0) {
        decomp_[x] = {i, d};
        break;
      }
    }
  }

  // largest p with b - p a a root
  auto string_p = [&](const Root& a, const Root& b) {
    int p = 0;
    Root cur = subtract(b, a);
    while (rs_.is_root(cur)) {
      ++p;
      cur = subtract(cur, a);
    }
    return p;
  };

  std::function<long(const Root&, const Root&)> N;
  std::function<long(int, int)> N_pos = [&](int a, int b) -> long {
    long& slot = n_pos_[a][b];
    if (slot != kUnset) return slot;
    const Root sum = add(pos[a], pos[b]);
    const int x = rs_.positive_index(sum);
    if (x < 0) return slot = 0;
    const auto [c, d] = extraspecial[x];
    const long p1 = string_p(pos[c], pos[d]) + 1;
    if (a == c && b == d) return slot = p1;
    if (a == d && b == c) return slot = -p1;
    const Root& g = pos[c];
    const Root& dl = pos[d];
    const Root& ra = pos[a];
    const Root& rb = pos[b];
    Rational acc;
    const Root bg = subtract(rb, g);
    if (rs_.is_root(bg)) {
      acc += Rational(N(rb, negate(g)) * N(ra, negate(dl)), rs_.norm2(bg));
    }
    const Root ag = subtract(ra, g);
    if (rs_.is_root(ag)) {
      acc += Rational(N(negate(g), ra) * N(rb, negate(dl)), rs_.norm2(ag));
    }
    acc *= Rational(rs_.norm2(sum), p1);
    if (!acc.is_integer()) throw IdentityViolation("non-integral structure constant");
    return slot = acc.numerator().get_si();
  };
  N = [&](const Root& a, const Root& b) -> long {
    const Root c = add(a, b);
    if (!rs_.is_root(c)) return 0;
    const bool pa = rs_.is_positive_root(a);
    const bool pb = rs_.is_positive_root(b);
    if (pa && pb) return N_pos(rs_.positive_index(a), rs_.positive_index(b));
    if (!pa && !pb) return -N(negate(a), negate(b));
    if (!pa) return -N(b, a);
    // a > 0 > b
    Rational v;
    if (rs_.is_positive_root(c)) {
      v = Rational(rs_.norm2(c), rs_.norm2(a)) * Rational(N(c, negate(b)));
    } else {
      v = Rational(rs_.norm2(c), rs_.norm2(b)) * Rational(N(negate(c), a));
    }
    if (!v.is_integer()) throw IdentityViolation("non-integral structure constant");
    return v.numerator().get_si();
  };

  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) N_pos(a, b);
}

long ChevalleyAlgebra::structure_constant(const Root& a, const Root& b) const {
  const Root c = add(a, b);
  if (!rs_.is_root(c)) return 0;
  const bool pa = rs_.is_positive_root(a);
  const bool pb = rs_.is_positive_root(b);
  if (pa && pb) return n_pos_[rs_.positive_index(a)][rs_.positive_index(b)];
  if (!pa && !pb) return -structure_constant(negate(a), negate(b));
  if (!pa) return -structure_constant(b, a);
  Rational v;
  if (rs_.is_positive_root(c)) {
    v = Rational(rs_.norm2(c), rs_.norm2(a)) * Rational(structure_constant(c, negate(b)));
  } else {
    v = Rational(rs_.norm2(c), rs_.norm2(b)) * Rational(structure_constant(negate(c), a));
  }
  return v.numerator().get_si();
}

void ChevalleyAlgebra::build_brackets() {
  const int r = rank();
  const int dim = r + 2 * rs_.num_positive();
  sc_ = StructureConstants(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      StructureConstants::Row row;
      const bool hi = is_cartan(i);
      const bool hj = is_cartan(j);
      if (hi && hj) {
        // abelian
      } else if (hi) {
        const int c = rs_.pairing(weight(j), i);
        if (c != 0) row.emplace_back(j, Rational(c));
      } else if (hj) {
        const int c = rs_.pairing(weight(i), j);
        if (c != 0) row.emplace_back(i, Rational(-c));
      } else {
        const Root a = weight(i);
        const Root b = weight(j);
        const Root s = add(a, b);
        if (height(s) == 0 && std::all_of(s.begin(), s.end(), [](int v) { return v == 0; })) {
          const bool a_pos = rs_.is_positive_root(a);
          const auto h = coroot(a_pos ? a : b);
          for (int k = 0; k < r; ++k)
            if (!h[k].is_zero()) row.emplace_back(k, a_pos ? h[k] : -h[k]);
        } else if (rs_.is_root(s)) {
          const long n = structure_constant(a, b);
          if (n == 0) throw IdentityViolation("vanishing structure constant on a root sum");
          row.emplace_back(root_index(s), Rational(n));
        }
      }
      sc_.set_bracket(i, j, std::move(row));
    }
  }
}

void ChevalleyAlgebra::build_killing_and_casimir() {
  killing_ = sc_.killing_form();
  auto inv = inverse(killing_);
  if (!inv) throw IdentityViolation("degenerate Killing form");
  killing_inv_ = std::move(*inv);
  omega_ = Tensor2<Rational>();
  omega_h_ = Tensor2<Rational>();
  for (int i = 0; i < dimension(); ++i) {
    for (int j = 0; j < dimension(); ++j) {
      const Rational& c = killing_inv_(i, j);
      if (c.is_zero()) continue;
      omega_.add({i, j}, c);
      if (is_cartan(i) && is_cartan(j)) omega_h_.add({i, j}, c);
    }
  }
}

std::pair<Tensor2<Rational>, Tensor2<Rational>> casimir(const ChevalleyAlgebra& g) { return {g.omega(), g.omega_h()}; }

std::optional<std::array<int, 3>> killing_invariance_violation(const ChevalleyAlgebra& g) {
  const auto& sc = g.structure();
  const auto& kf = g.killing();
  const int n = g.dimension();
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      for (int y = x; y < n; ++y) {
        Rational s;
        for (const auto& [k, c] : sc.bracket(a, x)) s += c * kf(k, y);
        for (const auto& [k, c] : sc.bracket(a, y)) s += c * kf(x, k);
        if (!s.is_zero()) return std::array<int, 3>{a, x, y};
      }
    }
  }
  return std::nullopt;
}

CasimirKernel casimir_kernel(const ChevalleyAlgebra& g) {
  const auto& sc = g.structure();
  const int n = g.dimension();
  // column (i, j) has weight wt(i) + wt(j); every row of the map only
  // involves columns of a single weight
  std::map<Root, std::vector<std::array<int, 2>>> blocks;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) blocks[add(g.weight(i), g.weight(j))].push_back({i, j});

  CasimirKernel out;
  for (const auto& [w, cols] : blocks) {
    std::map<std::array<int, 2>, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;
    // rows keyed by (a, p, q)
    std::map<std::array<int, 3>, std::vector<Rational>> rows;
    for (int a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        Tensor2<Rational> s;
        s.add(cols[c], Rational(1));
        for (const auto& [pq, v] : ad_action2(sc, g.basis(a), s)) {
          auto& row = rows[{a, pq[0], pq[1]}];
          if (row.empty()) row.resize(cols.size());
          row[c] += v;
        }
      }
    }
    IncrementalRank<Rational> rk(cols.size());
    for (auto& [key, row] : rows) {
      if (rk.rank() == cols.size()) break;
      rk.insert(std::move(row));
    }
    out.dimension += static_cast<int>(cols.size() - rk.rank());
  }
  out.contains_omega = true;
  for (int a = 0; a < n && out.contains_omega; ++a)
    if (!ad_action2(sc, g.basis(a), g.omega()).is_zero()) out.contains_omega = false;
  return out;
}

int classical_root_count(char type, int rank) {
  switch (type) {
    case 'A': return rank * (rank + 1);
    case 'B':
    case 'C': return 2 * rank * rank;
    case 'D': return 2 * rank * (rank - 1);
    case 'G': return 12;
    default: return -1;
  }
}

AlgebraMap<Rational> chevalley_automorphism(const ChevalleyAlgebra& g) {
  std::vector<Element<Rational>> cols(g.dimension());
  for (int i = 0; i < g.dimension(); ++i) cols[i] = Element<Rational>::basis(g.opposite(i), Rational(-1));
  return AlgebraMap<Rational>::from_columns(cols);
}

AlgebraMap<Rational> lift_diagram_automorphism(const ChevalleyAlgebra& g, const DiagramAutomorphism& pi) {
  if (!preserves_cartan(g.root_system(), pi)) throw InvalidArgument("permutation does not preserve the Cartan matrix");
  std::vector<Element<Rational>> e, f;
  for (int i = 0; i < g.rank(); ++i) {
    e.push_back(g.basis(g.pos_index(pi(i))));
    f.push_back(g.basis(g.neg_index(pi(i))));
  }
  return extend_from_generators(g, e, f);
}

}  // namespace bdforge
