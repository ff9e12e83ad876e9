#include "bdforge/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

#include "bdforge/bd.hpp"
#include "bdforge/bialgebra.hpp"
#include "bdforge/descent.hpp"
#include "bdforge/twist.hpp"

namespace bdforge {

namespace {

struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng() % n; }
  // numerator in [-5, 5] \ {0}, denominator in [1, 4]
  Rational small() {
    const long p = static_cast<long>(below(10));
    return Rational(p < 5 ? p - 5 : p - 4, static_cast<long>(below(4)) + 1);
  }
  QuadExt small_quad(long d) { return QuadExt(small(), small(), d); }
  std::mt19937_64 eng;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t k) { return seed ^ (0x9E3779B97F4A7C15ULL * (k + 1)); }

class Checks {
public:
  void add(const std::string& name, bool passed, json detail = json::object()) {
    json c = json::object();
    c["name"] = name;
    c["passed"] = passed;
    c["detail"] = std::move(detail);
    list_.push_back(std::move(c));
    passed_ = passed_ && passed;
  }

  // f fills detail and returns the verdict; exceptions become failures
  void run(const std::string& name, const std::function<bool(json&)>& f) {
    json detail = json::object();
    bool ok = false;
    try {
      ok = f(detail);
    } catch (const std::exception& e) {
      detail["error"] = e.what();
      ok = false;
    }
    add(name, ok, std::move(detail));
  }

  bool passed() const { return passed_; }
  json list() const { return list_; }

private:
  json list_ = json::array();
  bool passed_ = true;
};

json pair_json(const std::pair<int, int>& p) { return json::array({p.first, p.second}); }

int expected_group_order(char type, int rank) {
  if (type == 'A' && rank >= 2) return 2;
  if (type == 'D') return rank == 4 ? 6 : 2;
  return 1;
}

// classes of i ~ tau(i); one random value per class
template <class S>
TorusElement<S> centralizer_sample(const AdmissibleTriple& t, int rank, const std::function<S()>& draw) {
  std::vector<int> parent(rank);
  for (int i = 0; i < rank; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
  for (const auto& [a, b] : t.tau) parent[find(a)] = find(b);
  std::vector<S> value(rank);
  std::vector<bool> set(rank, false);
  std::vector<S> coords(rank);
  for (int i = 0; i < rank; ++i) {
    const int root = find(i);
    if (!set[root]) {
      value[root] = draw();
      set[root] = true;
    }
    coords[i] = value[root];
  }
  return TorusElement<S>(std::move(coords));
}

TorusElement<Rational> random_torus(Rng& rng, int rank) {
  std::vector<Rational> t(rank);
  for (auto& x : t) x = rng.small();
  return TorusElement<Rational>(std::move(t));
}

// t with t_{pi(i)} = conj(t_i)
TorusElement<QuadExt> pi_conjugate_torus(Rng& rng, const DiagramAutomorphism& pi, long d) {
  std::vector<QuadExt> t(pi.size());
  for (int i = 0; i < pi.size(); ++i) {
    const int j = pi(i);
    if (j == i) {
      t[i] = QuadExt(rng.small());
    } else if (i < j) {
      t[i] = rng.small_quad(d);
      t[j] = conj(t[i]);
    }
  }
  return TorusElement<QuadExt>(std::move(t));
}

TorusElement<QuadExt> random_quad_torus(Rng& rng, int rank, long d) {
  std::vector<QuadExt> t(rank);
  for (auto& x : t) x = rng.small_quad(d);
  return TorusElement<QuadExt>(std::move(t));
}

void algebra_checks(const ChevalleyAlgebra& g, const SuiteOptions& opt, const std::vector<DiagramAutomorphism>& group,
                    const RMatrix& dj, Checks& out) {
  const auto& rs = g.root_system();
  const auto& sc = g.structure();
  const int n = g.dimension();
  Rng rng(mix(opt.seed, 0xA1));

  out.run("root_system", [&](json& d) {
    const int expected = classical_root_count(rs.type(), rs.rank());
    const auto roots = rs.roots();
    d["roots"] = static_cast<int>(roots.size());
    d["positive_roots"] = rs.num_positive();
    d["expected"] = expected;
    bool ok = static_cast<int>(roots.size()) == expected;
    for (const auto& a : roots) ok = ok && rs.is_root(negate(a));
    return ok;
  });

  out.run("bracket_antisymmetry", [&](json& d) {
    const auto bad = sc.antisymmetry_violation();
    if (bad) d["witness"] = pair_json(*bad);
    return !bad;
  });

  out.run("jacobi", [&](json& d) {
    d["triples_checked"] = sc.jacobi_triple_count();
    const auto bad = sc.jacobi_violation();
    if (bad) d["witness"] = json::array({(*bad)[0], (*bad)[1], (*bad)[2]});
    return !bad;
  });

  out.run("killing_invariance", [&](json& d) {
    const auto bad = killing_invariance_violation(g);
    if (bad) d["witness"] = json::array({(*bad)[0], (*bad)[1], (*bad)[2]});
    return !bad;
  });

  out.run("casimir_symmetric", [&](json&) { return flip(g.omega()) == g.omega(); });

  out.run("casimir_kernel", [&](json& d) {
    const CasimirKernel k = casimir_kernel(g);
    d["dimension"] = k.dimension;
    d["contains_omega"] = k.contains_omega;
    return k.dimension == 1 && k.contains_omega;
  });

  out.run("chevalley_involution", [&](json& d) {
    const auto chi = chevalley_automorphism(g);
    const bool aut = chi.is_automorphism(sc);
    const bool inv = chi.compose(chi).is_identity();
    const bool omega = apply_map2(chi, g.omega()) == g.omega();
    d["automorphism"] = aut;
    d["involution"] = inv;
    d["fixes_omega"] = omega;
    return aut && inv && omega;
  });

  out.run("diagram_automorphisms", [&](json& d) {
    json list = json::array();
    bool ok = !group.empty() && group.front().is_identity();
    for (const auto& pi : group) {
      list.push_back(to_json(pi));
      const auto lift = lift_diagram_automorphism(g, pi);
      const bool good = lift.is_automorphism(sc) && apply_map2(lift, g.omega()) == g.omega() &&
                        apply_map2(lift, g.omega_h()) == g.omega_h();
      if (!good && ok) d["witness"] = to_json(pi);
      ok = ok && good;
      for (const auto& rho : group) {
        if (std::find(group.begin(), group.end(), pi.compose(rho)) == group.end()) ok = false;
      }
    }
    const int expected = expected_group_order(rs.type(), rs.rank());
    d["group"] = std::move(list);
    d["order"] = static_cast<int>(group.size());
    d["expected_order"] = expected;
    d["trivial"] = group.size() == 1;
    return ok && static_cast<int>(group.size()) == expected;
  });

  out.run("torus_fixes_omega", [&](json& d) {
    const int samples = 5;
    d["samples"] = samples;
    for (int s = 0; s < samples; ++s) {
      const auto t = random_torus(rng, g.rank());
      if (apply_map2(torus_adjoint(g, t), g.omega()) != g.omega()) {
        json w = json::array();
        for (const auto& x : t.coords()) w.push_back(x.to_string());
        d["witness"] = std::move(w);
        return false;
      }
    }
    return true;
  });

  out.run("omega_not_rmatrix", [&](json& d) {
    const auto v = verify_rmatrix(g, g.omega());
    const bool nonzero = !omega12_omega13(g).is_zero();
    d["rejection"] = rejection_name(v.rejection);
    d["omega12_omega13_nonzero"] = nonzero;
    return v.rejection == Rejection::CYBNonzero && nonzero;
  });

  out.run("dj_rmatrix", [&](json& d) {
    const auto v = verify_rmatrix(g, dj.r);
    d["rejection"] = rejection_name(v.rejection);
    if (v.lambda) d["lambda"] = v.lambda->to_string();
    return v.ok() && *v.lambda == Rational(1) && dj.r + flip(dj.r) == g.omega();
  });

  out.run("casimir_shift_cyb", [&](json& d) {
    json rows = json::array();
    bool ok = true;
    for (long mu : {0L, 1L, 2L, -3L}) {
      const auto res = lelim_residual(g, dj.r, Rational(mu), dj.lambda);
      const bool zero = res.is_zero();
      json row = json::object();
      row["mu"] = Rational(mu).to_string();
      row["residual_zero"] = zero;
      rows.push_back(std::move(row));
      ok = ok && (zero == (mu == 0 || mu == 1));
    }
    d["values"] = std::move(rows);
    return ok;
  });

  out.run("automorphism_equivalences", [&](json& d) {
    const auto chi = chevalley_automorphism(g);
    const Tensor2<Rational> flipped = flip(dj.r);
    int fixing = 0, morphisms = 0;
    for (int s = 0; s < opt.automorphism_samples; ++s) {
      const auto pi = lift_diagram_automorphism(g, group[s % group.size()]);
      AlgebraMap<Rational> phi = AlgebraMap<Rational>::identity(n);
      switch (s % 5) {
        case 0: phi = torus_adjoint(g, random_torus(rng, g.rank())); break;
        case 1: phi = chi; break;
        case 2: phi = pi; break;
        case 3: phi = chi.compose(torus_adjoint(g, random_torus(rng, g.rank()))); break;
        default: phi = pi.compose(torus_adjoint(g, random_torus(rng, g.rank()))).compose(chi); break;
      }
      // both functions throw IdentityViolation on disagreement
      if (is_bialgebra_automorphism(g, phi, dj.r)) ++fixing;
      const Tensor2<Rational> shifted = apply_map2(phi, dj.r) + g.omega();
      for (const auto* r2 : {&dj.r, &flipped, &shifted}) {
        if (surjective_morphism_criterion(g, phi, dj.r, *r2)) ++morphisms;
      }
    }
    d["samples"] = opt.automorphism_samples;
    d["automorphisms_of_structure"] = fixing;
    d["morphism_pairs_checked"] = 3 * opt.automorphism_samples;
    d["morphisms"] = morphisms;
    return opt.automorphism_samples > 0;
  });
}

void descent_checks(const SuiteOptions& opt, Checks& out) {
  const int n = opt.rank + 1;
  out.run("transpose_identity", [&](json& d) {
    const MatrixRealization m(n);
    const RMatrix dj = build_dj_rmatrix(m.algebra());
    d["n"] = n;
    return apply_map2(m.transpose_map(), dj.r) == flip(dj.r);
  });

  out.run("unitary_descent", [&](json& d) {
    const MatrixRealization m(n);
    const auto& g = m.algebra();
    const auto& sc = g.structure();
    const RMatrix dj = build_dj_rmatrix(g);
    const GaloisCocycle u = unitary_cocycle(m, opt.d);
    const DescendedForm form = fixed_points(sc, u);
    const DescentCase with_sqrt = pfields_decide(dj.r, u, AlphaClass::SqrtD);
    const DescentCase with_one = pfields_decide(dj.r, u, AlphaClass::Rational);
    const Cobracket<Rational> delta = descend_cobracket(sc, dj.r, u, form, AlphaClass::SqrtD);
    const AxiomReport rep = check_bialgebra_axioms(form.structure, delta);
    const Cobracket<QuadExt> back = reextend(form, delta);
    const Cobracket<QuadExt> expect = coboundary(sc, Tensor2<QuadExt>(QuadExt::sqrt(opt.d) * lift_tensor<QuadExt>(dj.r)));
    const bool roundtrip = back.values == expect.values;
    d["n"] = n;
    d["d"] = opt.d;
    d["form_dimension"] = static_cast<int>(form.basis.size());
    d["case_sqrt_d"] = descent_case_name(with_sqrt);
    d["case_one"] = descent_case_name(with_one);
    d["axioms"] = to_json(rep);
    d["roundtrip"] = roundtrip;
    return static_cast<int>(form.basis.size()) == n * n - 1 && with_sqrt == DescentCase::Case2 &&
           with_one == DescentCase::NoDescent && rep.antisymmetric && rep.cojacobi && rep.cocycle && roundtrip;
  });

  out.run("scalar_multiple_obstruction", [&](json& d) {
    // sampled automorphisms only; non-isomorphism for all of Aut is not checked
    const MatrixRealization m(n);
    const auto& g = m.algebra();
    const RMatrix dj = build_dj_rmatrix(g);
    const Tensor2<QuadExt> r = lift_tensor<QuadExt>(dj.r);
    const QuadExt alpha = QuadExt::sqrt(opt.d);
    const auto chi = chevalley_automorphism(g).lift<QuadExt>();
    const auto group = diagram_automorphisms(g.root_system());
    Rng rng(mix(opt.seed, 0xD5));
    int tested = 0;
    bool ok = true;
    for (long beta : {1L, -1L, 2L, -2L}) {
      for (int s = 0; s < 8; ++s) {
        const auto pi = lift_diagram_automorphism(g, group[s % group.size()]).lift<QuadExt>();
        AlgebraMap<QuadExt> phi = torus_adjoint(g, random_quad_torus(rng, g.rank(), opt.d));
        if (s % 4 == 1) phi = chi.compose(phi);
        if (s % 4 == 2) phi = pi.compose(phi);
        if (s % 4 == 3) phi = pi.compose(chi).compose(phi);
        ++tested;
        if (scalar_multiple_obstruction(g, r, alpha, QuadExt(Rational(beta)), phi)) {
          d["witness_beta"] = beta;
          ok = false;
        }
      }
    }
    const GaloisCocycle u = unitary_cocycle(m, opt.d);
    const bool control = scalar_multiple_obstruction(g, r, alpha, -alpha, u.u);
    d["sampled_maps"] = tested;
    d["control_minus_alpha"] = control;
    d["partial"] = true;
    return ok && control;
  });
}

json quadruple_report(const ChevalleyAlgebra& g, const SuiteOptions& opt, const std::vector<DiagramAutomorphism>& group,
                      const AdmissibleTriple& triple, int index) {
  Checks out;
  Rng rng(mix(opt.seed, 0x100 + static_cast<std::uint64_t>(index)));
  json rep = json::object();
  rep["index"] = index;
  rep["triple"] = to_json(triple);

  std::optional<AdmissibleQuadruple> q;
  std::optional<RMatrix> r;
  out.run("cartan_part", [&](json& d) {
    const CartanSolution sol = solve_cartan_part(g, triple);
    q = make_quadruple(g, triple);
    d["kernel_dimension"] = static_cast<int>(sol.kernel.size());
    const auto bad = quadruple_violation(g, *q);
    if (bad) d["violation"] = *bad;
    return !bad;
  });
  rep["r_h"] = q ? to_json(q->r_h) : json(nullptr);
  if (!q) {
    rep["passed"] = false;
    rep["checks"] = out.list();
    return rep;
  }

  out.run("rmatrix", [&](json& d) {
    r = build_bd_rmatrix(g, *q);
    const auto v = verify_rmatrix(g, r->r);
    d["rejection"] = rejection_name(v.rejection);
    if (v.lambda) d["lambda"] = v.lambda->to_string();
    d["terms"] = static_cast<int>(r->r.size());
    return v.ok() && *v.lambda == Rational(1);
  });

  out.run("kernel_offsets", [&](json& d) {
    const CartanSolution sol = solve_cartan_part(g, triple);
    int tested = 0;
    for (const auto& k : sol.kernel) {
      for (const Rational& c : {Rational(1), Rational(-2), rng.small()}) {
        const AdmissibleQuadruple shifted = make_quadruple(g, triple, Tensor2<Rational>(sol.particular + c * k));
        const RMatrix rs = build_bd_rmatrix(g, shifted);
        ++tested;
        if (!verify_rmatrix(g, rs.r).ok()) {
          d["witness"] = to_json(shifted.r_h);
          return false;
        }
      }
    }
    d["offsets_tested"] = tested;
    return true;
  });

  if (!r) {
    rep["passed"] = false;
    rep["checks"] = out.list();
    return rep;
  }

  out.run("bialgebra_axioms", [&](json& d) {
    const AxiomReport a = check_bialgebra_axioms(g.structure(), coboundary(g.structure(), r->r));
    d = to_json(a);
    return a.antisymmetric && a.cojacobi && a.cocycle;
  });

  out.run("scaling", [&](json& d) {
    const Rational s(3, 2);
    const auto v = verify_rmatrix(g, Tensor2<Rational>(s * r->r));
    if (v.lambda) d["lambda"] = v.lambda->to_string();
    return v.ok() && *v.lambda == s;
  });

  out.run("automorphism_factorization", [&](json& d) {
    int members = 0;
    for (int s = 0; s < opt.taut_samples; ++s) {
      const DiagramAutomorphism& pi = group[s % group.size()];
      const TorusElement<Rational> t =
          s % 2 == 0 ? centralizer_sample<Rational>(triple, g.rank(), [&] { return rng.small(); })
                     : random_torus(rng, g.rank());
      if (taut_membership(g, pi, t, *q, r->r)) ++members;
    }
    d["samples"] = opt.taut_samples;
    d["members"] = members;
    return opt.taut_samples > 0;
  });

  out.run("find_pi", [&](json& d) {
    const auto pi = find_pi(g, *q, r->r);
    json all = json::array();
    std::optional<DiagramAutomorphism> first;
    for (const auto& p : group) {
      if (!satisfies_pi_condition(g, *q, p)) continue;
      all.push_back(to_json(p));
      if (!first && p.order() <= 2) first = p;
    }
    d["pi"] = pi ? to_json(*pi) : json(nullptr);
    d["exhaustive"] = std::move(all);
    bool ok = pi == first;
    if (triple.is_trivial()) ok = ok && pi && pi->is_identity();
    if (pi) {
      const GaloisCocycle u = build_twist_cocycle(g, *q, *pi, opt.d, r->r);
      const AlgebraMap<QuadExt> hat = hat_map(g, TwistedCocycleClass{u, *r, DescentCase::Case2}, *pi);
      d["cocycle_condition"] = satisfies_cocycle_condition(u);
      d["hat_is_identity"] = hat.is_identity();
      ok = ok && satisfies_cocycle_condition(u) && hat.is_identity();
    }
    return ok;
  });

  if (triple.is_trivial()) {
    out.run("twisted_cocycles", [&](json& d) {
      const auto chi = chevalley_automorphism(g);
      int pairs = 0, preserved = 0, reflected = 0;
      for (const auto& pi : group) {
        if (pi.order() > 2 || !satisfies_pi_condition(g, *q, pi)) continue;
        const auto chi_pi = chi.compose(lift_diagram_automorphism(g, pi)).lift<QuadExt>();
        for (int s = 0; s < opt.cocycle_pairs; ++s) {
          const AlgebraMap<QuadExt> u = torus_adjoint(g, pi_conjugate_torus(rng, pi, opt.d)).compose(chi_pi);
          const AlgebraMap<QuadExt> other = torus_adjoint(g, pi_conjugate_torus(rng, pi, opt.d)).compose(chi_pi);
          const AlgebraMap<QuadExt> rho = torus_adjoint(g, random_quad_torus(rng, g.rank(), opt.d));
          const AlgebraMap<QuadExt> w = rho.inverse()->compose(u).compose(rho.conjugate());
          const AlgebraMap<QuadExt> hu = hat_map(g, TwistedCocycleClass{GaloisCocycle{opt.d, u}, *r}, pi);
          const AlgebraMap<QuadExt> hw = hat_map(g, TwistedCocycleClass{GaloisCocycle{opt.d, w}, *r}, pi);
          const AlgebraMap<QuadExt> ho = hat_map(g, TwistedCocycleClass{GaloisCocycle{opt.d, other}, *r}, pi);
          ++pairs;
          const bool plain = cocycles_equivalent_via(u, w, rho);
          const bool twisted = twisted_equivalent_via(g, hu, hw, rho, pi);
          if (plain && twisted) ++preserved;
          const bool plain_other = cocycles_equivalent_via(u, other, rho);
          const bool twisted_other = twisted_equivalent_via(g, hu, ho, rho, pi);
          if (plain_other == twisted_other) ++reflected;
          if (!plain || !twisted || plain_other != twisted_other) {
            d["witness_pi"] = to_json(pi);
            d["witness_pair"] = pairs;
          }
        }
      }
      d["pairs"] = pairs;
      d["preserved"] = preserved;
      d["reflected"] = reflected;
      return pairs > 0 && preserved == pairs && reflected == pairs;
    });
  }

  rep["passed"] = out.passed();
  rep["checks"] = out.list();
  return rep;
}

}  // namespace

int suite_thread_count(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("BDFORGE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<long>(n, cap);
  }
  return n;
}

json run_full_suite(const SuiteOptions& opt) {
  if (opt.d == 1 || !is_squarefree(opt.d)) throw InvalidArgument("d must be a squarefree integer other than 0 and 1");
  const ChevalleyAlgebra g = build_chevalley(opt.type, opt.rank);
  const auto group = diagram_automorphisms(g.root_system());
  const RMatrix dj = build_dj_rmatrix(g);

  Checks checks;
  algebra_checks(g, opt, group, dj, checks);

  std::vector<AdmissibleTriple> triples;
  checks.run("triples", [&](json& d) {
    triples = enumerate_admissible_triples(g.root_system());
    bool ok = !triples.empty() && triples.front().is_trivial();
    for (const auto& t : triples) ok = ok && is_admissible(g.root_system(), t);
    d["count"] = static_cast<int>(triples.size());
    return ok;
  });

  if (opt.type == 'A' && opt.rank + 1 <= 4) descent_checks(opt, checks);

  std::vector<json> reports(triples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < triples.size();) {
      reports[i] = quadruple_report(g, opt, group, triples[i], static_cast<int>(i));
    }
  };
  const int workers = std::min<int>(suite_thread_count(opt.threads), std::max<std::size_t>(triples.size(), 1));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool passed = checks.passed();
  json quads = json::array();
  for (auto& r : reports) {
    passed = passed && r["passed"].get<bool>();
    quads.push_back(std::move(r));
  }

  json out = json::object();
  out["type"] = std::string(1, opt.type);
  out["rank"] = opt.rank;
  out["dimension"] = g.dimension();
  out["d"] = opt.d;
  out["seed"] = opt.seed;
  out["passed"] = passed;
  out["checks"] = checks.list();
  out["quadruples"] = std::move(quads);
  return out;
}

}  // namespace bdforge
