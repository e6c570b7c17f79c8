#pragma once

#include <vector>

#include "json.hpp"
#include "lpsem/boolnet.hpp"
#include "lpsem/core.hpp"
#include "lpsem/depgraph.hpp"
#include "lpsem/dynamics.hpp"

namespace lpsem {

using ojson = nlohmann::ordered_json;

/// {"p": "t", "q": "f", "r": "u"} in atom-table order.
ojson interp3_to_json(const Interp3& i);

/// Sorted array of the true atom names.
ojson interp2_to_json(const Interp2& i);

/// {"p": "1", "q": "0", "r": "*"} in variable order (sub-space view).
ojson subspace_to_json(const Interp3& i);

ojson models3_to_json(const std::vector<Interp3>& models);
ojson models2_to_json(const std::vector<Interp2>& models);
ojson subspaces_to_json(const std::vector<Interp3>& spaces);

ojson graph_to_json(const SignedDigraph& g);
ojson classification_to_json(const Classification& c, const std::vector<AtomId>& pos_fvs,
                             const AtomTable& atoms);
ojson cycles_to_json(const CycleReport& report, const AtomTable& atoms);

ojson transition_graph_to_json(const TransitionGraph& g);
ojson nondet_graph_to_json(const NondetTransitionGraph& g);
ojson attractors_to_json(const AtomTable& vars, const std::vector<std::vector<std::uint32_t>>& attrs);

}  // namespace lpsem
