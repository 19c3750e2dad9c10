#ifndef LIECOALG_JSON_IO_HPP
#define LIECOALG_JSON_IO_HPP

// JSON forms. Coefficients are strings ("3", "-1/2") so they stay exact.
//   word   {"word":["a","b"]}
//   tree   {"label":"a","children":[...]}
//   graph  {"vertices":["a","b"],"edges":[[0,1]]}
//   lie    {"gen":"a"} | {"bracket":[l, r]}
//   combo  {"terms":[{"coeff":"2","shape":...}]}
//   tensor {"terms":[{"coeff":"1","left":...,"right":...}]}

#include <json.hpp>

#include "liecoalg/terms.hpp"

namespace liecoalg {

inline nlohmann::json to_json(const Generator& g) { return g.name(); }

inline nlohmann::json to_json(const Word& w) {
  nlohmann::json letters = nlohmann::json::array();
  for (const Generator& g : w.letters()) letters.push_back(g.name());
  return {{"word", letters}};
}

inline nlohmann::json to_json(const RootedTree& t) {
  nlohmann::json kids = nlohmann::json::array();
  for (const RootedTree& k : t.children()) kids.push_back(to_json(k));
  return {{"label", t.label().name()}, {"children", kids}};
}

inline nlohmann::json to_json(const OrientedGraph& g) {
  nlohmann::json vertices = nlohmann::json::array(), edges = nlohmann::json::array();
  for (const Generator& x : g.labels()) vertices.push_back(x.name());
  for (const auto& [s, t] : g.edges()) edges.push_back({s, t});
  return {{"vertices", vertices}, {"edges", edges}};
}

inline nlohmann::json to_json(const LieExpr& l) {
  if (l.is_leaf()) return {{"gen", l.generator().name()}};
  return {{"bracket", {to_json(l.left()), to_json(l.right())}}};
}

template <class Basis>
nlohmann::json to_json(const LinearCombo<Basis>& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [b, c] : x) terms.push_back({{"coeff", to_string(c)}, {"shape", to_json(b)}});
  return {{"terms", terms}};
}

template <class Basis>
nlohmann::json to_json(const TensorCombo<Basis>& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : x) {
    terms.push_back({{"coeff", to_string(c)}, {"left", to_json(p.first)}, {"right", to_json(p.second)}});
  }
  return {{"terms", terms}};
}

}  // namespace liecoalg

#endif  // LIECOALG_JSON_IO_HPP
