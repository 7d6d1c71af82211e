#pragma once

// JSON serialization of group elements, root-system summaries and poset
// dumps.  Words are over the affine node alphabet {0,1,..,rank} (0 = affine
// node); length-zero elements are labelled by the affine node their diagram
// automorphism sends node 0 to.

#include <json.hpp>

#include "localization.hpp"

namespace richadm {

inline nlohmann::json root_system_json(const RootSystem& rs) {
  nlohmann::json j;
  j["type"] = std::string(1, rs.type);
  j["rank"] = rs.rank;
  j["cartan"] = rs.cartan;
  j["n_roots"] = rs.n_roots();
  j["highest_root_coords"] = rs.roots[rs.highest];
  return j;
}

inline nlohmann::json element_json(const AffineWeyl& aw, const AffineElt& x) {
  ReducedWord rw = aw.reduced_word(x);
  nlohmann::json j;
  j["omega"] = aw.omega_of(rw.tau).label;
  j["word"] = rw.word;
  return j;
}

inline AffineElt element_from_json(const AffineWeyl& aw, const nlohmann::json& j) {
  int label = j.at("omega").get<int>();
  const OmegaElt* tau = nullptr;
  for (const auto& o : aw.omega_group())
    if (o.label == label) tau = &o;
  if (!tau) throw std::invalid_argument("unknown omega label");
  std::vector<int> word = j.at("word").get<std::vector<int>>();
  for (int i : word)
    if (i < 0 || i > aw.rank()) throw std::invalid_argument("word letter out of range");
  return aw.from_word(tau->elt, word);
}

inline std::vector<int> one_based(const std::vector<int>& J) {
  std::vector<int> out;
  for (int j : J) out.push_back(j + 1);
  return out;
}

inline nlohmann::json finite_word_json(const WeylGroup& W, WIdx u) {
  nlohmann::json w = nlohmann::json::array();
  for (int i : W.word(u)) w.push_back(i + 1);
  return w;
}

// Q_J / Adm dump: elements with grades, Hasse edges of (Q_J, preceq),
// diagnostics, and the admissible set with lengths.
inline nlohmann::json poset_dump_json(const AffineWeyl& aw, const Vec& lam) {
  const WeylGroup& W = aw.W();
  nlohmann::json j;
  j["root_system"] = root_system_json(W.rs());
  j["lambda"] = lam;
  j["J"] = one_based(J_of(W.rs(), lam));
  auto qj = build_QJ(W, lam);
  nlohmann::json elems = nlohmann::json::array();
  for (const auto& p : qj)
    elems.push_back({{"x_word", finite_word_json(W, p.x)},
                     {"y_word", finite_word_json(W, p.y)},
                     {"grade", W.length(p.x) - W.length(p.y)}});
  j["elements"] = std::move(elems);
  PosetGraph pg = qj_poset(W, lam);
  nlohmann::json hasse = nlohmann::json::array();
  for (auto [a, b] : pg.hasse()) hasse.push_back({a, b});
  j["hasse"] = std::move(hasse);
  auto diag = poset_diagnostics(pg);
  j["diagnostics"] = {{"thin", diag.thin}, {"eulerian", diag.eulerian}};
  auto adm = admissible_set(aw, lam);
  nlohmann::json adm_json = nlohmann::json::array();
  for (const auto& z : adm.elements) {
    nlohmann::json e = element_json(aw, z);
    e["length"] = aw.length(z);
    adm_json.push_back(std::move(e));
  }
  j["admissible"] = std::move(adm_json);
  j["n_elements"] = qj.size();
  j["n_admissible"] = adm.elements.size();
  return j;
}

}  // namespace richadm
