#include "bdforge/bdforge.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "bdforge/bd.hpp"
#include "bdforge/descent.hpp"
#include "bdforge/serialize.hpp"
#include "bdforge/suite.hpp"
#include "bdforge/twist.hpp"

struct bdf_algebra {
  bdforge::ChevalleyAlgebra g;
};

namespace {

using namespace bdforge;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bdf_status emit(const json& j, char** out_json, bdf_status status = BDF_OK) {
  if (status == BDF_VERIFICATION_FAILED && last_error.empty()) last_error = "verification failed";
  *out_json = dup(j.dump(2));
  if (!*out_json) {
    last_error = "out of memory";
    return BDF_INTERNAL_ERROR;
  }
  return status;
}

bdf_status fail(bdf_status status, const char* message) {
  last_error = message;
  return status;
}

template <class F>
bdf_status guarded(char** out_json, F&& f) {
  last_error.clear();
  if (out_json) *out_json = nullptr;
  try {
    return f();
  } catch (const UnsupportedType& e) {
    return fail(BDF_UNSUPPORTED_TYPE, e.what());
  } catch (const UnsupportedRank& e) {
    return fail(BDF_UNSUPPORTED_TYPE, e.what());
  } catch (const ParseError& e) {
    return fail(BDF_PARSE_ERROR, e.what());
  } catch (const InvalidArgument& e) {
    return fail(BDF_INVALID_ARGUMENT, e.what());
  } catch (const DimensionMismatch& e) {
    return fail(BDF_INVALID_ARGUMENT, e.what());
  } catch (const NotLieMorphism& e) {
    return fail(BDF_INVALID_ARGUMENT, e.what());
  } catch (const Error& e) {
    return fail(BDF_VERIFICATION_FAILED, e.what());
  } catch (const json::exception& e) {
    return fail(BDF_PARSE_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(BDF_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(BDF_INTERNAL_ERROR, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " must not be null");
}

char parse_type(const char* type) {
  require(type, "type");
  if (std::strlen(type) != 1) throw UnsupportedType("type must be one of A, B, C, D, G");
  return type[0];
}

AdmissibleQuadruple quadruple_from(const ChevalleyAlgebra& g, const char* triple_json, const char* rh_json) {
  require(triple_json, "triple_json");
  const AdmissibleTriple t = triple_from_json(parse_json_text(triple_json), g.rank());
  std::optional<Tensor2<Rational>> rh;
  if (rh_json) rh = tensor2_from_json<Rational>(parse_json_text(rh_json), g.dimension());
  return make_quadruple(g, t, rh);
}

DiagramAutomorphism pi_from_json(const json& j, int rank) {
  if (!j.is_object()) throw ParseError("pi must be an object {\"1\": \"2\", ...}");
  std::vector<int> perm(rank, -1);
  auto index = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad pi index '" + s + "'");
    }
    if (pos != s.size()) throw ParseError("bad pi index '" + s + "'");
    if (v < 1 || v > rank) throw InvalidArgument("pi index out of range");
    return v - 1;
  };
  for (const auto& [k, v] : j.items()) {
    const std::string target = v.is_string() ? v.get<std::string>() : v.is_number_integer() ? std::to_string(v.get<int>()) : "";
    perm[index(k)] = index(target);
  }
  for (int p : perm)
    if (p < 0) throw InvalidArgument("pi must list every simple root");
  return DiagramAutomorphism(perm);
}

// coefficients are read over Q(sqrt d); rational tensors are narrowed back
bool all_rational(const Tensor2<QuadExt>& t) {
  for (const auto& [k, c] : t)
    if (!c.is_rational()) return false;
  return true;
}

Tensor2<Rational> narrow(const Tensor2<QuadExt>& t) {
  Tensor2<Rational> out;
  for (const auto& [k, c] : t) out.add(k, c.a());
  return out;
}

template <class S>
json verdict_json(const RVerdict<S>& v) {
  json out = json::object();
  out["is_rmatrix"] = v.ok();
  out["rejection"] = rejection_name(v.rejection);
  out["lambda"] = v.lambda ? json(to_string(*v.lambda)) : json(nullptr);
  return out;
}

}  // namespace

extern "C" {

const char* bdf_status_name(bdf_status status) {
  switch (status) {
    case BDF_OK: return "OK";
    case BDF_VERIFICATION_FAILED: return "VERIFICATION_FAILED";
    case BDF_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case BDF_UNSUPPORTED_TYPE: return "UNSUPPORTED_TYPE";
    case BDF_PARSE_ERROR: return "PARSE_ERROR";
    case BDF_INTERNAL_ERROR: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

const char* bdf_last_error_message(void) { return last_error.c_str(); }

void bdf_free_string(char* s) { std::free(s); }

bdf_status bdf_algebra_create(const char* type, int rank, bdf_algebra** out) {
  return guarded(nullptr, [&] {
    require(out, "out");
    *out = nullptr;
    *out = new bdf_algebra{build_chevalley(parse_type(type), rank)};
    return BDF_OK;
  });
}

void bdf_algebra_destroy(bdf_algebra* algebra) { delete algebra; }

int bdf_algebra_dimension(const bdf_algebra* algebra) { return algebra ? algebra->g.dimension() : -1; }

bdf_status bdf_basis_json(const bdf_algebra* algebra, char** out_json) {
  return guarded(out_json, [&] {
    require(algebra, "algebra");
    require(out_json, "out_json");
    return emit(basis_to_json(algebra->g), out_json);
  });
}

bdf_status bdf_casimir_json(const bdf_algebra* algebra, char** out_json) {
  return guarded(out_json, [&] {
    require(algebra, "algebra");
    require(out_json, "out_json");
    json j = json::object();
    j["omega"] = to_json(algebra->g.omega());
    j["omega_h"] = to_json(algebra->g.omega_h());
    return emit(j, out_json);
  });
}

bdf_status bdf_enumerate_triples(const bdf_algebra* algebra, char** out_json) {
  return guarded(out_json, [&] {
    require(algebra, "algebra");
    require(out_json, "out_json");
    const auto triples = enumerate_admissible_triples(algebra->g.root_system());
    json j = json::object();
    j["count"] = triples.size();
    j["triples"] = json::array();
    for (const auto& t : triples) j["triples"].push_back(to_json(t));
    return emit(j, out_json);
  });
}

bdf_status bdf_bd_build(const bdf_algebra* algebra, const char* triple_json, const char* rh_json, char** out_json) {
  return guarded(out_json, [&] {
    require(algebra, "algebra");
    require(out_json, "out_json");
    const auto& g = algebra->g;
    const AdmissibleQuadruple q = quadruple_from(g, triple_json, rh_json);
    const RMatrix r = build_bd_rmatrix(g, q);
    json j = json::object();
    j["r"] = to_json(r.r);
    j["lambda"] = r.lambda.to_string();
    j["cyb_zero"] = cyb(g.structure(), r.r).is_zero();
    j["r_h"] = to_json(q.r_h);
    return emit(j, out_json);
  });
}

bdf_status bdf_verify_rmatrix(const bdf_algebra* algebra, const char* r_json, char** out_json) {
  return guarded(out_json, [&] {
    require(algebra, "algebra");
    require(r_json, "r_json");
    require(out_json, "out_json");
    const auto& g = algebra->g;
    const Tensor2<QuadExt> r = tensor2_from_json<QuadExt>(parse_json_text(r_json), g.dimension());
    json j;
    bool ok = false;
    if (all_rational(r)) {
      const auto v = verify_rmatrix(g, narrow(r));
      j = verdict_json(v);
      ok = v.ok();
      if (!ok) last_error = std::string("not an r-matrix: ") + rejection_name(v.rejection);
    } else {
      const auto v = verify_rmatrix(g, r);
      j = verdict_json(v);
      ok = v.ok();
      if (!ok) last_error = std::string("not an r-matrix: ") + rejection_name(v.rejection);
    }
    return emit(j, out_json, ok ? BDF_OK : BDF_VERIFICATION_FAILED);
  });
}

bdf_status bdf_verify_bialgebra(const bdf_algebra* algebra, const char* r_json, char** out_json) {
  return guarded(out_json, [&] {
    require(algebra, "algebra");
    require(r_json, "r_json");
    require(out_json, "out_json");
    const auto& g = algebra->g;
    const Tensor2<QuadExt> r = tensor2_from_json<QuadExt>(parse_json_text(r_json), g.dimension());
    const AxiomReport rep = all_rational(r) ? check_bialgebra_axioms(g.structure(), coboundary(g.structure(), narrow(r)))
                                            : check_bialgebra_axioms(g.structure(), coboundary(g.structure(), r));
    const bool ok = rep.antisymmetric && rep.cojacobi && rep.cocycle;
    if (!ok) last_error = "coboundary cobracket fails the bialgebra axioms";
    return emit(to_json(rep), out_json, ok ? BDF_OK : BDF_VERIFICATION_FAILED);
  });
}

bdf_status bdf_find_pi(const bdf_algebra* algebra, const char* triple_json, const char* rh_json, char** out_json) {
  return guarded(out_json, [&] {
    require(algebra, "algebra");
    require(out_json, "out_json");
    const auto& g = algebra->g;
    const AdmissibleQuadruple q = quadruple_from(g, triple_json, rh_json);
    const RMatrix r = build_bd_rmatrix(g, q);
    const auto pi = find_pi(g, q, r.r);
    json j = json::object();
    j["pi"] = pi ? to_json(*pi) : json(nullptr);
    return emit(j, out_json);
  });
}

bdf_status bdf_twist_cocycle(const bdf_algebra* algebra, const char* triple_json, const char* rh_json, long d,
                             const char* pi_json, char** out_json) {
  return guarded(out_json, [&] {
    require(algebra, "algebra");
    require(out_json, "out_json");
    const auto& g = algebra->g;
    const AdmissibleQuadruple q = quadruple_from(g, triple_json, rh_json);
    const RMatrix r = build_bd_rmatrix(g, q);
    std::optional<DiagramAutomorphism> pi;
    if (pi_json) {
      pi = pi_from_json(parse_json_text(pi_json), g.rank());
    } else {
      pi = find_pi(g, q, r.r);
    }
    json j = json::object();
    j["d"] = d;
    if (!pi) {
      last_error = "no diagram automorphism satisfies the pi condition";
      j["pi"] = nullptr;
      j["u"] = nullptr;
      j["cocycle_condition"] = false;
      return emit(j, out_json, BDF_VERIFICATION_FAILED);
    }
    const GaloisCocycle u = build_twist_cocycle(g, q, *pi, d, r.r);
    j["pi"] = to_json(*pi);
    j["u"] = to_json(u.u);
    j["cocycle_condition"] = satisfies_cocycle_condition(u);
    return emit(j, out_json);
  });
}

bdf_status bdf_descend_sun(int n, long d, char** out_json) {
  return guarded(out_json, [&] {
    require(out_json, "out_json");
    const MatrixRealization m(n);
    const auto& g = m.algebra();
    const auto& sc = g.structure();
    const RMatrix dj = build_dj_rmatrix(g);
    const GaloisCocycle u = unitary_cocycle(m, d);
    const DescendedForm form = fixed_points(sc, u);
    const DescentCase with_sqrt = pfields_decide(dj.r, u, AlphaClass::SqrtD);
    const DescentCase with_one = pfields_decide(dj.r, u, AlphaClass::Rational);
    const Cobracket<Rational> delta = descend_cobracket(sc, dj.r, u, form, AlphaClass::SqrtD);
    const AxiomReport rep = check_bialgebra_axioms(form.structure, delta);
    const Cobracket<QuadExt> expect = coboundary(sc, Tensor2<QuadExt>(QuadExt::sqrt(d) * lift_tensor<QuadExt>(dj.r)));
    const bool roundtrip = reextend(form, delta).values == expect.values;
    json j = json::object();
    j["n"] = n;
    j["d"] = d;
    j["dimension"] = form.basis.size();
    json basis = json::array();
    for (const auto& x : form.basis) basis.push_back(to_json(x));
    j["basis"] = std::move(basis);
    j["structure"] = to_json(form.structure);
    j["cobracket"] = to_json(delta);
    j["axioms"] = to_json(rep);
    j["case_sqrt_d"] = descent_case_name(with_sqrt);
    j["case_one"] = descent_case_name(with_one);
    j["roundtrip"] = roundtrip;
    const bool ok = rep.antisymmetric && rep.cojacobi && rep.cocycle && roundtrip &&
                    with_sqrt == DescentCase::Case2 && with_one == DescentCase::NoDescent;
    return emit(j, out_json, ok ? BDF_OK : BDF_VERIFICATION_FAILED);
  });
}

bdf_status bdf_full_suite(const char* type, int rank, long d, int threads, char** out_json) {
  return guarded(out_json, [&] {
    require(out_json, "out_json");
    SuiteOptions opt;
    opt.type = parse_type(type);
    opt.rank = rank;
    opt.d = d;
    opt.threads = threads;
    const json report = run_full_suite(opt);
    const bool ok = report["passed"].get<bool>();
    if (!ok) last_error = "one or more checks failed";
    return emit(report, out_json, ok ? BDF_OK : BDF_VERIFICATION_FAILED);
  });
}

}  // extern "C"
