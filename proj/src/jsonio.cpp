#include "lpsem/jsonio.hpp"

#include <algorithm>

namespace lpsem {

ojson interp3_to_json(const Interp3& i) {
  ojson out = ojson::object();
  for (int a = 0; a < i.size(); ++a)
    out[i.atoms().name(a)] = std::string(1, tri_char(i.get(a)));
  return out;
}

ojson interp2_to_json(const Interp2& i) {
  return ojson(i.true_names());
}

ojson subspace_to_json(const Interp3& i) {
  ojson out = ojson::object();
  for (int a = 0; a < i.size(); ++a) {
    Tri v = i.get(a);
    out[i.atoms().name(a)] = std::string(1, v == Tri::T ? '1' : (v == Tri::F ? '0' : '*'));
  }
  return out;
}

ojson models3_to_json(const std::vector<Interp3>& models) {
  ojson out = ojson::array();
  for (const Interp3& m : models) out.push_back(interp3_to_json(m));
  return out;
}

ojson models2_to_json(const std::vector<Interp2>& models) {
  ojson out = ojson::array();
  for (const Interp2& m : models) out.push_back(interp2_to_json(m));
  return out;
}

ojson subspaces_to_json(const std::vector<Interp3>& spaces) {
  ojson out = ojson::array();
  for (const Interp3& m : spaces) out.push_back(subspace_to_json(m));
  return out;
}

ojson graph_to_json(const SignedDigraph& g) {
  ojson out;
  ojson vertices = ojson::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertices().name(v));
  out["vertices"] = std::move(vertices);
  ojson arcs = ojson::array();
  for (const Arc& a : g.arcs()) {
    ojson arc;
    arc["from"] = g.vertices().name(a.from);
    arc["to"] = g.vertices().name(a.to);
    arc["sign"] = std::string(1, sign_char(a.sign));
    arcs.push_back(std::move(arc));
  }
  out["arcs"] = std::move(arcs);
  return out;
}

ojson classification_to_json(const Classification& c, const std::vector<AtomId>& pos_fvs,
                             const AtomTable& atoms) {
  ojson out;
  out["tight"] = c.tight;
  out["locally_stratified"] = c.locally_stratified;
  out["well_founded_stratified"] = c.well_founded_stratified;
  out["neg_cycle_free"] = c.neg_cycle_free;
  out["pos_cycle_free"] = c.pos_cycle_free;
  out["quasi_interpretation"] = c.quasi_interpretation;
  out["positive"] = c.positive;
  ojson fvs = ojson::array();
  for (AtomId v : pos_fvs) fvs.push_back(atoms.name(v));
  out["pos_fvs"] = std::move(fvs);
  out["k"] = pos_fvs.size();
  return out;
}

ojson cycles_to_json(const CycleReport& report, const AtomTable& atoms) {
  ojson out = ojson::array();
  for (const Cycle& c : report.cycles) {
    ojson item;
    ojson vertices = ojson::array();
    for (const Arc& a : c.arcs) vertices.push_back(atoms.name(a.from));
    ojson signs = ojson::array();
    for (const Arc& a : c.arcs) signs.push_back(std::string(1, sign_char(a.sign)));
    item["vertices"] = std::move(vertices);
    item["arc_signs"] = std::move(signs);
    item["sign"] = std::string(1, sign_char(c.sign));
    out.push_back(std::move(item));
  }
  return out;
}

namespace {
ojson state_names(const AtomTable& atoms, std::uint64_t state) {
  std::vector<std::string> names;
  for (int a = 0; a < atoms.size(); ++a)
    if ((state >> a) & 1u) names.push_back(atoms.name(a));
  std::sort(names.begin(), names.end());
  return ojson(names);
}
}  // namespace

ojson transition_graph_to_json(const TransitionGraph& g) {
  ojson out;
  ojson atoms = ojson::array();
  for (int a = 0; a < g.atoms->size(); ++a) atoms.push_back(g.atoms->name(a));
  out["atoms"] = std::move(atoms);
  ojson arcs = ojson::array();
  for (size_t s = 0; s < g.succ.size(); ++s) {
    ojson arc;
    arc["from"] = state_names(*g.atoms, s);
    arc["to"] = state_names(*g.atoms, g.succ[s]);
    arcs.push_back(std::move(arc));
  }
  out["transitions"] = std::move(arcs);
  return out;
}

ojson nondet_graph_to_json(const NondetTransitionGraph& g) {
  ojson out;
  ojson vars = ojson::array();
  for (int a = 0; a < g.vars->size(); ++a) vars.push_back(g.vars->name(a));
  out["vars"] = std::move(vars);
  ojson arcs = ojson::array();
  for (size_t s = 0; s < g.succs.size(); ++s) {
    ojson arc;
    arc["from"] = state_names(*g.vars, s);
    ojson tos = ojson::array();
    for (std::uint32_t t : g.succs[s]) tos.push_back(state_names(*g.vars, t));
    arc["to"] = std::move(tos);
    arcs.push_back(std::move(arc));
  }
  out["transitions"] = std::move(arcs);
  return out;
}

ojson attractors_to_json(const AtomTable& vars,
                         const std::vector<std::vector<std::uint32_t>>& attrs) {
  ojson out = ojson::array();
  for (const auto& a : attrs) {
    ojson states = ojson::array();
    for (std::uint32_t s : a) states.push_back(state_names(vars, s));
    out.push_back(std::move(states));
  }
  return out;
}

}  // namespace lpsem
