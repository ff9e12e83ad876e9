#pragma once

#include <json.hpp>

#include "bdforge/algebra.hpp"
#include "bdforge/bialgebra.hpp"
#include "bdforge/chevalley.hpp"
#include "bdforge/rootsys.hpp"
#include "bdforge/tensors.hpp"

namespace bdforge {

using json = nlohmann::ordered_json;

template <class S>
json to_json(const Element<S>& x) {
  json out = json::object();
  for (const auto& [i, c] : x) out[std::to_string(i)] = to_string(c);
  return out;
}

/// [[i, j, "c"], ...] in index order.
template <class S, std::size_t N>
json to_json(const Tensor<S, N>& t) {
  json out = json::array();
  for (const auto& [k, c] : t) {
    json entry = json::array();
    for (int i : k) entry.push_back(i);
    entry.push_back(to_string(c));
    out.push_back(std::move(entry));
  }
  return out;
}

/// {"j": {"i": "c"}}: column j holds the image of basis vector j.
template <class S>
json to_json(const AlgebraMap<S>& f) {
  json out = json::object();
  for (int j = 0; j < f.dimension(); ++j) out[std::to_string(j)] = to_json(f.column(j));
  return out;
}

template <class S>
json to_json(const Cobracket<S>& delta) {
  json out = json::array();
  for (const auto& v : delta.values) out.push_back(to_json(v));
  return out;
}

json to_json(const Root& r);
/// {"gamma1": [1], "gamma2": [2], "tau": {"1": "2"}} with 1-based indices.
json to_json(const AdmissibleTriple& t);
/// {"1": "2", "2": "1"} with 1-based indices.
json to_json(const DiagramAutomorphism& pi);
json to_json(const StructureConstants& sc);
json to_json(const AxiomReport& rep);

/// Basis labels, weights and the Cartan matrix.
json basis_to_json(const ChevalleyAlgebra& g);

/// Parses a JSON document; throws ParseError on malformed text.
json parse_json_text(const std::string& text);

AdmissibleTriple triple_from_json(const json& j, int rank);

/// Accepts [[i, j, "c"], ...] with c a string or an integer; indices must be
/// below dim.
template <class S>
Tensor2<S> tensor2_from_json(const json& j, int dim);

}  // namespace bdforge
