#include "bdforge/descent.hpp"

namespace bdforge {

namespace {

Matrix<Rational> unit(int n, int i, int j) {
  Matrix<Rational> m(n, n);
  m(i, j) = Rational(1);
  return m;
}

Matrix<Rational> commutator(const Matrix<Rational>& a, const Matrix<Rational>& b) { return a * b - b * a; }

Matrix<Rational> scaled(Matrix<Rational> m, const Rational& s) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
  return m;
}

// columns of the form basis as an L-matrix and its inverse
struct FormFrame {
  Matrix<QuadExt> e;
  Matrix<QuadExt> e_inv;
};

FormFrame frame_of(const std::vector<Element<QuadExt>>& basis) {
  const std::size_t n = basis.size();
  FormFrame f{Matrix<QuadExt>(n, n), {}};
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [i, c] : basis[k]) f.e(i, k) = c;
  auto inv = inverse(f.e);
  if (!inv) throw DimensionMismatch("fixed vectors are not an L-basis");
  f.e_inv = std::move(*inv);
  return f;
}

std::optional<std::vector<Rational>> coordinates_in(const FormFrame& f, const Element<QuadExt>& x) {
  const std::size_t n = f.e.rows();
  std::vector<Rational> out(n);
  for (std::size_t p = 0; p < n; ++p) {
    QuadExt c;
    for (const auto& [i, v] : x) c += f.e_inv(p, i) * v;
    if (!c.is_rational()) return std::nullopt;
    out[p] = c.a();
  }
  return out;
}

int checked_rank(int n) {
  if (n < 2 || n > 4) throw UnsupportedRank("matrix realization needs 2 <= n <= 4");
  return n - 1;
}

}  // namespace

MatrixRealization::MatrixRealization(int n) : n_(n), g_(build_chevalley('A', checked_rank(n))) {
  const int dim = g_.dimension();
  const int r = g_.rank();
  mats_.assign(dim, Matrix<Rational>(n, n));
  for (int i = 0; i < r; ++i) {
    mats_[g_.h_index(i)] = unit(n, i, i) - unit(n, i + 1, i + 1);
    mats_[g_.pos_index(i)] = unit(n, i, i + 1);
    mats_[g_.neg_index(i)] = unit(n, i + 1, i);
  }
  const auto& pos = g_.root_system().positive_roots();
  for (int k = r; k < static_cast<int>(pos.size()); ++k) {
    const auto [i, rest] = g_.decompositions()[k];
    const Root ai = g_.root_system().simple_root(i);
    const long np = g_.structure_constant(ai, pos[rest]);
    const long nn = g_.structure_constant(negate(ai), negate(pos[rest]));
    mats_[g_.pos_index(k)] = scaled(commutator(mats_[g_.pos_index(i)], mats_[g_.pos_index(rest)]), Rational(1, np));
    mats_[g_.neg_index(k)] = scaled(commutator(mats_[g_.neg_index(i)], mats_[g_.neg_index(rest)]), Rational(1, nn));
  }
  vectorized_ = Matrix<Rational>(n * n, dim);
  for (int j = 0; j < dim; ++j)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) vectorized_(a * n + b, j) = mats_[j](a, b);
  if (rank(vectorized_) != static_cast<std::size_t>(dim)) throw IdentityViolation("matrix basis is not independent");
  if (auto bad = commutator_violation()) throw IdentityViolation("matrix realization does not preserve brackets");

  std::vector<Element<Rational>> cols;
  for (int j = 0; j < dim; ++j) cols.push_back(coordinates(mats_[j].transpose()));
  transpose_ = AlgebraMap<Rational>::from_columns(cols);
}

MatrixRealization sl_realization(int n) { return MatrixRealization(n); }

Element<Rational> MatrixRealization::coordinates(const Matrix<Rational>& m) const {
  if (static_cast<int>(m.rows()) != n_ || static_cast<int>(m.cols()) != n_) throw DimensionMismatch("matrix size");
  std::vector<Rational> v(n_ * n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) v[a * n_ + b] = m(a, b);
  const auto x = solve(vectorized_, v);
  if (!x) throw InvalidArgument("matrix is not traceless");
  Element<Rational> out;
  for (std::size_t j = 0; j < x->size(); ++j) out.add(static_cast<int>(j), (*x)[j]);
  return out;
}

std::optional<std::pair<int, int>> MatrixRealization::commutator_violation() const {
  const auto& sc = g_.structure();
  const int dim = g_.dimension();
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Matrix<Rational> expect(n_, n_);
      for (const auto& [k, c] : sc.bracket(i, j)) {
        for (int a = 0; a < n_; ++a)
          for (int b = 0; b < n_; ++b) expect(a, b) += c * mats_[k](a, b);
      }
      if (!(commutator(mats_[i], mats_[j]) == expect)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

GaloisCocycle unitary_cocycle(const MatrixRealization& m, long d) {
  if (d == 1 || !is_squarefree(d)) throw InvalidArgument("d must be a squarefree integer other than 0 and 1");
  GaloisCocycle c{d, m.transpose_map().scaled(Rational(-1)).lift<QuadExt>()};
  validate_cocycle(m.algebra().structure(), c);
  return c;
}

const char* alpha_class_name(AlphaClass a) { return a == AlphaClass::Rational ? "rational" : "sqrt_d"; }

DescendedForm fixed_points(const StructureConstants& sc, const GaloisCocycle& cocycle) {
  validate_cocycle(sc, cocycle);
  const int n = sc.dimension();
  const Rational d(cocycle.d);
  // x = a + b sqrt(d); u(conj x) = x splits into two rational systems
  Matrix<Rational> sys(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const QuadExt& uij = cocycle.u.entry(i, j);
      const Rational& u0 = uij.a();
      const Rational& u1 = uij.b();
      sys(i, j) = u0 - (i == j ? Rational(1) : Rational(0));
      sys(i, n + j) = -(d * u1);
      sys(n + i, j) = u1;
      sys(n + i, n + j) = -u0 - (i == j ? Rational(1) : Rational(0));
    }
  }
  const auto null = nullspace(sys);
  if (static_cast<int>(null.size()) != n) {
    throw DimensionMismatch("fixed space has K-dimension " + std::to_string(null.size()) + ", expected " +
                            std::to_string(n));
  }
  DescendedForm form;
  form.cocycle = cocycle;
  for (const auto& v : null) {
    Element<QuadExt> x;
    for (int i = 0; i < n; ++i) {
      if (v[i].is_zero() && v[n + i].is_zero()) continue;
      x.add(i, v[n + i].is_zero() ? QuadExt(v[i]) : QuadExt(v[i], v[n + i], cocycle.d));
    }
    form.basis.push_back(std::move(x));
  }
  const FormFrame frame = frame_of(form.basis);
  form.structure = StructureConstants(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto c = coordinates_in(frame, sc.bracket(form.basis[i], form.basis[j]));
      if (!c) throw NotClosed("bracket of fixed vectors leaves the rational span");
      StructureConstants::Row row;
      for (int k = 0; k < n; ++k)
        if (!(*c)[k].is_zero()) row.emplace_back(k, (*c)[k]);
      form.structure.set_bracket(i, j, std::move(row));
    }
  }
  return form;
}

std::optional<std::vector<Rational>> form_coordinates(const DescendedForm& form, const Element<QuadExt>& x) {
  return coordinates_in(frame_of(form.basis), x);
}

DescentCase pfields_decide(const Tensor2<Rational>& r, const GaloisCocycle& cocycle, AlphaClass alpha) {
  const Tensor2<QuadExt> rl = lift_tensor<QuadExt>(r);
  const Tensor2<QuadExt> image = apply_map2(cocycle.u, rl);
  if (alpha == AlphaClass::Rational && image == rl) return DescentCase::Case1;
  if (alpha == AlphaClass::SqrtD && image == flip(rl)) return DescentCase::Case2;
  return DescentCase::NoDescent;
}

Cobracket<Rational> descend_cobracket(const StructureConstants& sc, const Tensor2<Rational>& r,
                                      const GaloisCocycle& cocycle, const DescendedForm& form, AlphaClass alpha) {
  if (pfields_decide(r, cocycle, alpha) == DescentCase::NoDescent) {
    throw InvalidArgument("the cobracket does not descend for this cocycle and alpha");
  }
  const QuadExt a = alpha == AlphaClass::Rational ? QuadExt(1) : QuadExt::sqrt(cocycle.d);
  const Cobracket<Rational> delta = coboundary(sc, r);
  const FormFrame frame = frame_of(form.basis);
  const int n = sc.dimension();
  Cobracket<Rational> out;
  for (int k = 0; k < n; ++k) {
    // delta(x_k) in the standard basis, then C = E^{-1} D E^{-T}
    Tensor2<QuadExt> dx;
    for (const auto& [i, c] : form.basis[k]) dx += (a * c) * lift_tensor<QuadExt>(delta.values[i]);
    Tensor2<Rational> value;
    std::map<std::array<int, 2>, QuadExt> acc;
    for (const auto& [key, v] : dx) {
      for (int p = 0; p < n; ++p) {
        const QuadExt& ep = frame.e_inv(p, key[0]);
        if (ep.is_zero()) continue;
        for (int q = 0; q < n; ++q) {
          const QuadExt& eq = frame.e_inv(q, key[1]);
          if (!eq.is_zero()) acc[{p, q}] += ep * eq * v;
        }
      }
    }
    for (const auto& [key, c] : acc) {
      if (!c.is_rational()) throw NotClosed("cobracket value leaves form (x) form at basis element " + std::to_string(k));
      value.add(key, c.a());
    }
    out.values.push_back(std::move(value));
  }
  const AxiomReport rep = check_bialgebra_axioms(form.structure, out);
  if (!rep.antisymmetric) throw AxiomViolation("antisymmetry", rep.antisymmetry_witness);
  if (!rep.cojacobi) throw AxiomViolation("co-Jacobi", rep.cojacobi_witness);
  if (!rep.cocycle) throw AxiomViolation("cocycle", rep.cocycle_witness.first);
  return out;
}

Cobracket<QuadExt> reextend(const DescendedForm& form, const Cobracket<Rational>& delta_prime) {
  const FormFrame frame = frame_of(form.basis);
  const int n = static_cast<int>(form.basis.size());
  // value of delta' on x_k as an L-tensor in the standard basis
  std::vector<Tensor2<QuadExt>> on_form(n);
  for (int k = 0; k < n; ++k) {
    for (const auto& [key, c] : delta_prime.values[k]) {
      on_form[k] += outer(QuadExt(c) * form.basis[key[0]], form.basis[key[1]]);
    }
  }
  Cobracket<QuadExt> out;
  for (int i = 0; i < n; ++i) {
    Tensor2<QuadExt> v;
    for (int k = 0; k < n; ++k)
      if (!frame.e_inv(k, i).is_zero()) v += frame.e_inv(k, i) * on_form[k];
    out.values.push_back(std::move(v));
  }
  return out;
}

}  // namespace bdforge
