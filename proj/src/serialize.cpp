#include "bdforge/serialize.hpp"

#include <algorithm>

namespace bdforge {

namespace {

int parse_index(const json& v, int bound, const char* what) {
  long long i = 0;
  if (v.is_number_integer()) {
    i = v.get<long long>();
  } else if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 9) {
      throw ParseError(std::string("bad ") + what + " index '" + s + "'");
    }
    i = std::stoll(s);
  } else {
    throw ParseError(std::string("bad ") + what + " index");
  }
  if (i < 1 || i > bound) throw InvalidArgument(std::string(what) + " index out of range");
  return static_cast<int>(i - 1);
}

template <class S>
S scalar_from_json(const json& v) {
  if (v.is_string()) return parse_scalar<S>(v.get<std::string>());
  if (v.is_number_integer()) return S(Rational(v.get<long>()));
  throw ParseError("scalars must be strings or integers");
}

}  // namespace

json to_json(const Root& r) {
  json out = json::array();
  for (int c : r) out.push_back(c);
  return out;
}

json to_json(const AdmissibleTriple& t) {
  json out = json::object();
  out["gamma1"] = json::array();
  out["gamma2"] = json::array();
  for (int i : t.gamma1) out["gamma1"].push_back(i + 1);
  for (int i : t.gamma2) out["gamma2"].push_back(i + 1);
  out["tau"] = json::object();
  for (const auto& [a, b] : t.tau) out["tau"][std::to_string(a + 1)] = std::to_string(b + 1);
  return out;
}

json to_json(const DiagramAutomorphism& pi) {
  json out = json::object();
  for (int i = 0; i < pi.size(); ++i) out[std::to_string(i + 1)] = std::to_string(pi(i) + 1);
  return out;
}

json to_json(const StructureConstants& sc) {
  json out = json::array();
  for (int i = 0; i < sc.dimension(); ++i) {
    for (int j = i + 1; j < sc.dimension(); ++j) {
      for (const auto& [k, c] : sc.bracket(i, j)) out.push_back(json::array({i, j, k, c.to_string()}));
    }
  }
  return out;
}

json to_json(const AxiomReport& rep) {
  json out = json::object();
  out["antisymmetric"] = rep.antisymmetric;
  out["cojacobi"] = rep.cojacobi;
  out["cocycle"] = rep.cocycle;
  if (!rep.antisymmetric) out["antisymmetry_witness"] = rep.antisymmetry_witness;
  if (!rep.cojacobi) out["cojacobi_witness"] = rep.cojacobi_witness;
  if (!rep.cocycle) out["cocycle_witness"] = json::array({rep.cocycle_witness.first, rep.cocycle_witness.second});
  return out;
}

json basis_to_json(const ChevalleyAlgebra& g) {
  json out = json::object();
  out["type"] = std::string(1, g.root_system().type());
  out["rank"] = g.rank();
  out["dimension"] = g.dimension();
  json cartan = json::array();
  for (const auto& row : g.root_system().cartan()) cartan.push_back(row);
  out["cartan_matrix"] = std::move(cartan);
  json basis = json::array();
  for (int i = 0; i < g.dimension(); ++i) {
    json b = json::object();
    b["index"] = i;
    b["label"] = g.basis_label(i);
    b["weight"] = to_json(g.weight(i));
    basis.push_back(std::move(b));
  }
  out["basis"] = std::move(basis);
  return out;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

AdmissibleTriple triple_from_json(const json& j, int rank) {
  if (!j.is_object() || !j.contains("gamma1") || !j.contains("gamma2") || !j.contains("tau")) {
    throw ParseError("triple must be an object with gamma1, gamma2 and tau");
  }
  if (!j["gamma1"].is_array() || !j["gamma2"].is_array() || !j["tau"].is_object()) {
    throw ParseError("gamma1/gamma2 must be arrays and tau an object");
  }
  AdmissibleTriple t;
  for (const auto& v : j["gamma1"]) t.gamma1.push_back(parse_index(v, rank, "gamma1"));
  for (const auto& v : j["gamma2"]) t.gamma2.push_back(parse_index(v, rank, "gamma2"));
  std::sort(t.gamma1.begin(), t.gamma1.end());
  std::sort(t.gamma2.begin(), t.gamma2.end());
  for (const auto& [k, v] : j["tau"].items()) {
    const int a = parse_index(json(k), rank, "tau");
    if (t.tau.count(a)) throw ParseError("tau lists an index twice");
    t.tau[a] = parse_index(v, rank, "tau");
  }
  return t;
}

template <class S>
Tensor2<S> tensor2_from_json(const json& j, int dim) {
  if (!j.is_array()) throw ParseError("tensor must be a list of [i, j, coefficient] entries");
  Tensor2<S> t;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("tensor entries must be [i, j, coefficient]");
    }
    const long long a = e[0].get<long long>();
    const long long b = e[1].get<long long>();
    if (a < 0 || b < 0 || a >= dim || b >= dim) throw InvalidArgument("tensor index out of range");
    t.add({static_cast<int>(a), static_cast<int>(b)}, scalar_from_json<S>(e[2]));
  }
  return t;
}

template Tensor2<Rational> tensor2_from_json<Rational>(const json&, int);
template Tensor2<QuadExt> tensor2_from_json<QuadExt>(const json&, int);

}  // namespace bdforge
