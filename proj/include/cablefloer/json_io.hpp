#pragma once

// JSON dumps of the intermediate modules, for fixtures and debugging.

#include <string>

#include "cablefloer/box_pairing.hpp"
#include "cablefloer/typea_pattern.hpp"
#include "cablefloer/typed_complement.hpp"
#include "json.hpp"

namespace cablefloer {

inline nlohmann::json grading_json(const GradingElement& x) {
  // doubled entries keep half-integers exact
  return {{"doubled", {x.a2(), x.b2(), x.c2(), x.d2()}}, {"text", x.to_string()}};
}

inline std::string chord_sequence(const std::vector<Chord>& seq) {
  std::string s;
  for (auto c : seq) {
    if (!s.empty()) s += ',';
    s += chord_label(c);
  }
  return s;
}

inline nlohmann::json to_json(const TypeDModule& D) {
  using nlohmann::json;
  json gens = json::array();
  for (const auto& g : D.generators)
    gens.push_back({{"name", g.name},
                    {"idempotent", g.idempotent == Idempotent::iota0 ? 0 : 1},
                    {"grading", grading_json(g.grading)}});
  json edges = json::array();
  for (const auto& e : D.edges)
    edges.push_back({{"source", D.generators[e.source].name},
                     {"target", D.generators[e.target].name},
                     {"label", std::string(chord_label(e.label))}});
  return {{"tau", D.tau}, {"n", D.n}, {"h", grading_json(D.h)}, {"generators", gens}, {"edges", edges}};
}

/// Operation table up to `max_inputs` algebra inputs.
inline nlohmann::json to_json(const TypeAModule& A, std::size_t max_inputs) {
  using nlohmann::json;
  json gens = json::array();
  for (const auto& g : A.generators())
    gens.push_back({{"name", g.name},
                    {"idempotent", g.pairs_with == Idempotent::iota0 ? 0 : 1},
                    {"grading", grading_json(g.grading)}});
  json ops = json::array();
  for (const auto& op : A.operations(max_inputs))
    ops.push_back({{"source", A.generators()[op.source].name},
                   {"inputs", chord_sequence(op.inputs)},
                   {"u_power", op.u_power},
                   {"target", A.generators()[op.target].name}});
  return {{"p", A.p()}, {"g", grading_json(A.g())}, {"generators", gens}, {"operations", ops}};
}

inline nlohmann::json to_json(const BigradedComplex& C) {
  using nlohmann::json;
  json gens = json::array();
  for (const auto& g : C.generators)
    gens.push_back({{"name", g.name},
                    {"N", g.normalized.N},
                    {"Aprime", g.normalized.Aprime},
                    {"alexander", g.alexander},
                    {"maslov", g.maslov}});
  json arrows = json::array();
  for (const auto& a : C.arrows)
    arrows.push_back({{"source", C.generators[a.source].name}, {"target", C.generators[a.target].name}});
  return {{"generators", gens}, {"arrows", arrows}};
}

}  // namespace cablefloer
