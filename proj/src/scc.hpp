#pragma once

#include <algorithm>
#include <vector>

namespace lpsem::detail {

struct TarjanResult {
  std::vector<int> comp_of;               // vertex -> component index (emit order)
  std::vector<std::vector<int>> comps;    // each sorted ascending
};

// Iterative Tarjan. adj(v) must return a random-access range of successors.
// Components come out in reverse topological order of the condensation.
template <class AdjFn>
TarjanResult tarjan_scc(int n, AdjFn&& adj) {
  TarjanResult res;
  res.comp_of.assign(static_cast<size_t>(n), -1);
  std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<char> on_stack(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  struct Frame {
    int v;
    size_t child;
  };
  std::vector<Frame> frames;
  int next_index = 0;

  for (int root = 0; root < n; ++root) {
    if (index[static_cast<size_t>(root)] != -1) continue;
    frames.push_back({root, 0});
    index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<size_t>(root)] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto&& succs = adj(f.v);
      if (f.child < succs.size()) {
        int w = static_cast<int>(succs[f.child++]);
        if (index[static_cast<size_t>(w)] == -1) {
          index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = 1;
          frames.push_back({w, 0});  // invalidates f
        } else if (on_stack[static_cast<size_t>(w)]) {
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().v;
          low[static_cast<size_t>(parent)] =
              std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
        }
        if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
          res.comps.emplace_back();
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[static_cast<size_t>(w)] = 0;
            res.comp_of[static_cast<size_t>(w)] = static_cast<int>(res.comps.size()) - 1;
            res.comps.back().push_back(w);
          } while (w != v);
        }
      }
    }
  }
  for (auto& c : res.comps) std::sort(c.begin(), c.end());
  return res;
}

}  // namespace lpsem::detail
