#include "bdforge/twist.hpp"

#include <algorithm>

namespace bdforge {

namespace {

std::vector<int> image_set(const DiagramAutomorphism& pi, const std::vector<int>& s) {
  std::vector<int> out;
  for (int i : s) out.push_back(pi(i));
  std::sort(out.begin(), out.end());
  return out;
}

// pi^ chi as a rational map
AlgebraMap<Rational> pi_chi(const ChevalleyAlgebra& g, const DiagramAutomorphism& pi) {
  return lift_diagram_automorphism(g, pi).compose(chevalley_automorphism(g));
}

AlgebraMap<Rational> chi_pi(const ChevalleyAlgebra& g, const DiagramAutomorphism& pi) {
  return chevalley_automorphism(g).compose(lift_diagram_automorphism(g, pi));
}

}  // namespace

bool in_A_Gamma_Q(const ChevalleyAlgebra& g, const DiagramAutomorphism& pi, const AdmissibleQuadruple& q) {
  if (!preserves_cartan(g.root_system(), pi)) return false;
  const auto& t = q.triple;
  if (image_set(pi, t.gamma1) != t.gamma1) return false;
  for (const auto& [a, ta] : t.tau)
    if (pi(ta) != t.tau.at(pi(a))) return false;
  const auto hat = lift_diagram_automorphism(g, pi);
  return apply_map2(hat, q.r_h) == q.r_h;
}

bool satisfies_pi_condition(const ChevalleyAlgebra& g, const AdmissibleQuadruple& q, const DiagramAutomorphism& pi) {
  if (!preserves_cartan(g.root_system(), pi)) return false;
  const auto& t = q.triple;
  if (image_set(pi, t.gamma1) != t.gamma2 || image_set(pi, t.gamma2) != t.gamma1) return false;
  std::map<int, int> tau_inv;
  for (const auto& [a, ta] : t.tau) tau_inv[ta] = a;
  const auto pinv = pi.inverse();
  for (int b : t.gamma2)
    if (pi(t.tau.at(pinv(b))) != tau_inv.at(b)) return false;
  const auto hat = lift_diagram_automorphism(g, pi);
  return apply_map2(hat, q.r_h) == flip(q.r_h);
}

std::optional<DiagramAutomorphism> find_pi(const ChevalleyAlgebra& g, const AdmissibleQuadruple& q,
                                           const Tensor2<Rational>& r_bd) {
  for (const auto& pi : diagram_automorphisms(g.root_system())) {
    if (pi.order() > 2 || !satisfies_pi_condition(g, q, pi)) continue;
    if (!(apply_map2(chi_pi(g, pi), r_bd) == flip(r_bd))) {
      throw IdentityViolation("(chi pi^ (x) chi pi^)(r_BD) != flip(r_BD)");
    }
    return pi;
  }
  return std::nullopt;
}

bool satisfies_cocycle_condition(const GaloisCocycle& c) {
  return c.u.compose(c.u.conjugate()).is_identity();
}

void validate_cocycle(const StructureConstants& sc, const GaloisCocycle& c) {
  if (c.d == 1 || !is_squarefree(c.d)) throw InvalidArgument("d must be a squarefree integer other than 0 and 1");
  if (c.u.dimension() != sc.dimension()) throw DimensionMismatch("cocycle has the wrong dimension");
  if (!satisfies_cocycle_condition(c)) throw VerificationFailed("u conj(u) != id");
  if (!c.u.is_automorphism(sc)) throw VerificationFailed("cocycle value is not a Lie automorphism");
}

GaloisCocycle build_twist_cocycle(const ChevalleyAlgebra& g, const AdmissibleQuadruple& q,
                                  const DiagramAutomorphism& pi, long d, const Tensor2<Rational>& r_bd) {
  if (d == 1 || !is_squarefree(d)) throw InvalidArgument("d must be a squarefree integer other than 0 and 1");
  if (pi.order() > 2 || !satisfies_pi_condition(g, q, pi)) {
    throw PiConditionViolated("diagram automorphism does not satisfy the pi condition for this quadruple");
  }
  const auto u = chi_pi(g, pi);
  GaloisCocycle c{d, u.lift<QuadExt>()};
  validate_cocycle(g.structure(), c);
  if (!(apply_map2(u, r_bd) == flip(r_bd))) throw IdentityViolation("(u (x) u)(r_BD) != flip(r_BD)");
  return c;
}

const char* descent_case_name(DescentCase c) {
  switch (c) {
    case DescentCase::Case1: return "Case1";
    case DescentCase::Case2: return "Case2";
    case DescentCase::NoDescent: return "NoDescent";
  }
  return "?";
}

AlgebraMap<QuadExt> hat_map(const ChevalleyAlgebra& g, const TwistedCocycleClass& cls, const DiagramAutomorphism& pi) {
  if (cls.case_tag != DescentCase::Case2) throw InvalidArgument("hat map is defined on case 2 classes");
  const AlgebraMap<QuadExt>& u = cls.cocycle.u;
  const auto pc = pi_chi(g, pi).lift<QuadExt>();
  const auto cp = chi_pi(g, pi).lift<QuadExt>();
  AlgebraMap<QuadExt> hat = u.compose(pc);
  const Tensor2<QuadExt> r = lift_tensor<QuadExt>(cls.r.r);
  if (!(apply_map2(hat, r) == r)) throw IdentityViolation("hat u does not fix r_BD");
  if (!hat.compose(cp).compose(hat.conjugate()).compose(pc).is_identity()) {
    throw IdentityViolation("hat u fails the twisted cocycle condition");
  }
  return hat;
}

bool cocycles_equivalent_via(const AlgebraMap<QuadExt>& u, const AlgebraMap<QuadExt>& w,
                             const AlgebraMap<QuadExt>& rho) {
  const auto inv = rho.inverse();
  if (!inv) throw InvalidArgument("witness is not invertible");
  return inv->compose(u).compose(rho.conjugate()) == w;
}

bool twisted_equivalent_via(const ChevalleyAlgebra& g, const AlgebraMap<QuadExt>& hat_u,
                            const AlgebraMap<QuadExt>& hat_w, const AlgebraMap<QuadExt>& rho,
                            const DiagramAutomorphism& pi) {
  const auto inv = rho.inverse();
  if (!inv) throw InvalidArgument("witness is not invertible");
  const auto pc = pi_chi(g, pi).lift<QuadExt>();
  const auto cp = chi_pi(g, pi).lift<QuadExt>();
  return inv->compose(hat_u).compose(cp).compose(rho.conjugate()).compose(pc) == hat_w;
}

}  // namespace bdforge
