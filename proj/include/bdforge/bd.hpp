#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdforge/chevalley.hpp"
#include "bdforge/rootsys.hpp"
#include "bdforge/tensors.hpp"

namespace bdforge {

/// Affine solution set {particular + span(kernel)} of the Cartan-part
/// constraints r_h + flip(r_h) = Omega_h and (tau(a) (x) 1 + 1 (x) a)(r_h) = 0
/// for a in gamma1. The particular solution has every free variable set to
/// zero; kernel elements are antisymmetric tensors on h (x) h.
struct CartanSolution {
  Tensor2<Rational> particular;
  std::vector<Tensor2<Rational>> kernel;
};

/// Throws InvalidArgument if the triple is not admissible and NoSolution if
/// the constraint system is inconsistent.
CartanSolution solve_cartan_part(const ChevalleyAlgebra& g, const AdmissibleTriple& triple);

/// The element (f (x) 1 + 1 (x) f')(r_h) of h, with f = tau(a), f' = a, in
/// H-coordinates. Zero for every a in gamma1 on a valid quadruple.
std::vector<Rational> cartan_constraint(const ChevalleyAlgebra& g, const Tensor2<Rational>& r_h, int tau_a, int a);

struct AdmissibleQuadruple {
  AdmissibleTriple triple;
  Tensor2<Rational> r_h;
};

/// Checks every quadruple invariant; returns an explanation on failure.
std::optional<std::string> quadruple_violation(const ChevalleyAlgebra& g, const AdmissibleQuadruple& q);

/// Quadruple with the canonical r_h (or the given one, validated). Throws
/// InvalidArgument when the triple or r_h violates the constraints.
AdmissibleQuadruple make_quadruple(const ChevalleyAlgebra& g, const AdmissibleTriple& triple,
                                   const std::optional<Tensor2<Rational>>& r_h = std::nullopt);

/// r with r + flip(r) = lambda Omega and cyb(r) = 0.
struct RMatrix {
  Tensor2<Rational> r;
  Rational lambda;
};

/// c_a = 1 / K(X_a, X_{-a}) for the positive root with index k.
Rational pairing_coefficient(const ChevalleyAlgebra& g, int k);

/// Image of X_{-beta} under the homomorphism of negative nilpotent
/// subalgebras extending X_{-a} -> X_{-tau(a)}, iterated k times: returns
/// (sign, tau^k(beta)) with theta^k(X_{-beta}) = sign X_{-tau^k(beta)}, or
/// nullopt when tau^k(beta) is undefined.
struct ThetaImage {
  int sign;
  Root root;
};
std::optional<ThetaImage> theta_power(const ChevalleyAlgebra& g, const AdmissibleTriple& triple, const Root& beta,
                                      int k);

/// r_h + sum_{a>0} c_a X_a (x) X_{-a}
///     + sum_{beta, k} c_beta theta^k-sign (X_beta (x) X_{-tau^k beta} - X_{-tau^k beta} (x) X_beta).
/// Throws VerificationFailed if the result is not an r-matrix with lambda 1.
RMatrix build_bd_rmatrix(const ChevalleyAlgebra& g, const AdmissibleQuadruple& q);

/// 1/2 Omega_h + sum_{a>0} c_a X_a (x) X_{-a}.
RMatrix build_dj_rmatrix(const ChevalleyAlgebra& g);

enum class Rejection { None, NotProportional, CYBNonzero, LambdaZero };

const char* rejection_name(Rejection r);

template <class S>
struct RVerdict {
  Rejection rejection = Rejection::None;
  std::optional<S> lambda;
  bool ok() const { return rejection == Rejection::None; }
};

/// Checks proportionality of r + flip(r) to Omega first, then lambda != 0,
/// then cyb(r) = 0; the first failure is reported.
template <class S>
RVerdict<S> verify_rmatrix(const ChevalleyAlgebra& g, const Tensor2<S>& r) {
  RVerdict<S> v;
  const Tensor2<S> omega = lift_tensor<S>(g.omega());
  v.lambda = proportionality(r + flip(r), omega);
  if (!v.lambda) {
    v.rejection = Rejection::NotProportional;
    return v;
  }
  if (is_zero(*v.lambda)) {
    v.rejection = Rejection::LambdaZero;
    return v;
  }
  if (!cyb(g.structure(), r).is_zero()) v.rejection = Rejection::CYBNonzero;
  return v;
}

/// [Omega_12, Omega_13].
Tensor3<Rational> omega12_omega13(const ChevalleyAlgebra& g);

/// cyb(r - mu Omega), checked against mu (mu - lambda) [Omega_12, Omega_13].
/// Throws IdentityViolation if the two sides differ.
Tensor3<Rational> lelim_residual(const ChevalleyAlgebra& g, const Tensor2<Rational>& r, const Rational& mu,
                                 const Rational& lambda);

}  // namespace bdforge
