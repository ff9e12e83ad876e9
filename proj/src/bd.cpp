#include "bdforge/bd.hpp"

#include "bdforge/linalg.hpp"

namespace bdforge {

namespace {

// value of the simple-root functional alpha_a on H_i
Rational simple_functional(const ChevalleyAlgebra& g, int a, int i) {
  return Rational(g.root_system().cartan()[a][i]);
}

}  // namespace

std::vector<Rational> cartan_constraint(const ChevalleyAlgebra& g, const Tensor2<Rational>& r_h, int tau_a, int a) {
  std::vector<Rational> out(g.rank());
  for (const auto& [k, c] : r_h) {
    if (!g.is_cartan(k[0]) || !g.is_cartan(k[1])) throw InvalidArgument("r_h must lie in h (x) h");
    out[k[1]] += c * simple_functional(g, tau_a, k[0]);
    out[k[0]] += c * simple_functional(g, a, k[1]);
  }
  return out;
}

CartanSolution solve_cartan_part(const ChevalleyAlgebra& g, const AdmissibleTriple& triple) {
  if (!is_admissible(g.root_system(), triple)) throw InvalidArgument("triple is not admissible");
  const int r = g.rank();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
  auto wedge = [](int i, int j) {
    Tensor2<Rational> t;
    t.add({i, j}, Rational(1));
    t.add({j, i}, Rational(-1));
    return t;
  };

  Tensor2<Rational> half = Rational(1, 2) * g.omega_h();
  const std::size_t rows = triple.tau.size() * r;
  Matrix<Rational> a(rows, pairs.size());
  std::vector<Rational> b(rows);
  std::size_t row = 0;
  for (const auto& [src, dst] : triple.tau) {
    const auto base = cartan_constraint(g, half, dst, src);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto col = cartan_constraint(g, wedge(pairs[p].first, pairs[p].second), dst, src);
      for (int k = 0; k < r; ++k) a(row + k, p) = col[k];
    }
    for (int k = 0; k < r; ++k) b[row + k] = -base[k];
    row += r;
  }

  const auto x = solve(a, b);
  if (!x) throw NoSolution("Cartan constraints are inconsistent");
  CartanSolution sol;
  sol.particular = half;
  for (std::size_t p = 0; p < pairs.size(); ++p) sol.particular += (*x)[p] * wedge(pairs[p].first, pairs[p].second);
  for (const auto& v : nullspace(a)) {
    Tensor2<Rational> k;
    for (std::size_t p = 0; p < pairs.size(); ++p) k += v[p] * wedge(pairs[p].first, pairs[p].second);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::optional<std::string> quadruple_violation(const ChevalleyAlgebra& g, const AdmissibleQuadruple& q) {
  if (!is_admissible(g.root_system(), q.triple)) return "triple is not admissible";
  if (!supported_below(q.r_h, g.rank())) return "r_h is not supported on h (x) h";
  if (!(q.r_h + flip(q.r_h) == g.omega_h())) return "r_h + flip(r_h) != Omega_h";
  for (const auto& [src, dst] : q.triple.tau) {
    for (const auto& c : cartan_constraint(g, q.r_h, dst, src)) {
      if (!c.is_zero()) return "r_h violates the tau constraint at simple root " + std::to_string(src + 1);
    }
  }
  return std::nullopt;
}

AdmissibleQuadruple make_quadruple(const ChevalleyAlgebra& g, const AdmissibleTriple& triple,
                                   const std::optional<Tensor2<Rational>>& r_h) {
  AdmissibleQuadruple q{triple, r_h ? *r_h : solve_cartan_part(g, triple).particular};
  if (auto why = quadruple_violation(g, q)) throw InvalidArgument(*why);
  return q;
}

Rational pairing_coefficient(const ChevalleyAlgebra& g, int k) {
  return g.killing(g.pos_index(k), g.neg_index(k)).inverse();
}

std::optional<ThetaImage> theta_power(const ChevalleyAlgebra& g, const AdmissibleTriple& triple, const Root& beta,
                                      int k) {
  const RootSystem& rs = g.root_system();
  const auto& pos = rs.positive_roots();
  // sign of theta(X_{-gamma}) for one application, by recursion on height
  std::function<int(const Root&)> step_sign = [&](const Root& gamma) -> int {
    const int idx = rs.positive_index(gamma);
    if (idx < rs.rank()) return 1;
    const auto [i, rest] = g.decompositions()[idx];
    const Root ai = rs.simple_root(i);
    const Root& b = pos[rest];
    const Root tai = rs.simple_root(triple.tau.at(i));
    const Root tb = *extend_tau(rs, triple, b, 1);
    const long num = g.structure_constant(negate(tai), negate(tb));
    const long den = g.structure_constant(negate(ai), negate(b));
    if (num == 0 || den == 0 || (num != den && num != -den)) {
      throw IdentityViolation("tau does not extend to a homomorphism of nilpotent subalgebras");
    }
    return (num == den ? 1 : -1) * step_sign(b);
  };
  ThetaImage img{1, beta};
  for (int step = 0; step < k; ++step) {
    if (!supported_on(img.root, triple.gamma1)) return std::nullopt;
    img.sign *= step_sign(img.root);
    img.root = *extend_tau(rs, triple, img.root, 1);
  }
  return img;
}

RMatrix build_bd_rmatrix(const ChevalleyAlgebra& g, const AdmissibleQuadruple& q) {
  if (auto why = quadruple_violation(g, q)) throw InvalidArgument(*why);
  const RootSystem& rs = g.root_system();
  const auto& pos = rs.positive_roots();
  Tensor2<Rational> r = q.r_h;
  for (int k = 0; k < rs.num_positive(); ++k) r.add({g.pos_index(k), g.neg_index(k)}, pairing_coefficient(g, k));
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (q.triple.gamma1.empty() || !supported_on(pos[k], q.triple.gamma1)) continue;
    const Rational c = pairing_coefficient(g, k);
    for (int power = 1;; ++power) {
      const auto img = theta_power(g, q.triple, pos[k], power);
      if (!img) break;
      const int xb = g.pos_index(k);
      const int yg = g.root_index(negate(img->root));
      const Rational w = img->sign > 0 ? c : -c;
      r.add({xb, yg}, w);
      r.add({yg, xb}, -w);
    }
  }
  RMatrix out{std::move(r), Rational(1)};
  const auto v = verify_rmatrix(g, out.r);
  if (!v.ok() || *v.lambda != Rational(1)) {
    throw VerificationFailed(std::string("BD construction is not an r-matrix: ") + rejection_name(v.rejection));
  }
  return out;
}

RMatrix build_dj_rmatrix(const ChevalleyAlgebra& g) {
  Tensor2<Rational> r = Rational(1, 2) * g.omega_h();
  for (int k = 0; k < g.root_system().num_positive(); ++k) {
    r.add({g.pos_index(k), g.neg_index(k)}, pairing_coefficient(g, k));
  }
  RMatrix dj = build_bd_rmatrix(g, make_quadruple(g, AdmissibleTriple::trivial()));
  if (!(dj.r == r)) throw IdentityViolation("DJ r-matrix differs from the trivial BD r-matrix");
  return dj;
}

const char* rejection_name(Rejection r) {
  switch (r) {
    case Rejection::None: return "None";
    case Rejection::NotProportional: return "NotProportional";
    case Rejection::CYBNonzero: return "CYBNonzero";
    case Rejection::LambdaZero: return "LambdaZero";
  }
  return "?";
}

Tensor3<Rational> omega12_omega13(const ChevalleyAlgebra& g) {
  return cyb_parts(g.structure(), g.omega()).r12_r13;
}

Tensor3<Rational> lelim_residual(const ChevalleyAlgebra& g, const Tensor2<Rational>& r, const Rational& mu,
                                 const Rational& lambda) {
  Tensor3<Rational> lhs = cyb(g.structure(), r - mu * g.omega());
  Tensor3<Rational> rhs = (mu * (mu - lambda)) * omega12_omega13(g);
  if (!(lhs == rhs)) throw IdentityViolation("cyb(r - mu Omega) != mu (mu - lambda) [Omega12, Omega13]");
  return lhs;
}

}  // namespace bdforge
