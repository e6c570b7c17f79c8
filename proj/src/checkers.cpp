#include "lpsem/checkers.hpp"

#include <algorithm>
#include <chrono>

#include "lpsem/boolnet.hpp"
#include "lpsem/depgraph.hpp"
#include "lpsem/dynamics.hpp"
#include "lpsem/lfp.hpp"
#include "lpsem/parser.hpp"
#include "lpsem/semantics.hpp"

namespace lpsem {

using ojson = nlohmann::ordered_json;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::SkippedPrecondition: return "skipped-precondition";
    case Verdict::TooLarge: return "too-large";
  }
  return "?";
}

const char* bias_name(GenBias b) {
  switch (b) {
    case GenBias::Uniform: return "uniform";
    case GenBias::Tight: return "tight";
    case GenBias::Quasi: return "quasi";
    case GenBias::NegativeHeavy: return "negative-heavy";
  }
  return "?";
}

GenBias bias_from_name(const std::string& name) {
  if (name == "uniform") return GenBias::Uniform;
  if (name == "tight") return GenBias::Tight;
  if (name == "quasi") return GenBias::Quasi;
  if (name == "negative-heavy") return GenBias::NegativeHeavy;
  throw Error("unknown bias '" + name + "'");
}

ojson report_to_json(const CheckReport& r) {
  ojson out;
  out["check"] = r.check;
  out["verdict"] = verdict_name(r.verdict);
  out["stats"] = r.stats;
  if (r.witness) out["witness"] = *r.witness;
  out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

ojson profile_to_json(const GenProfile& p) {
  ojson out;
  out["atoms"] = p.n_atoms;
  out["rules"] = p.n_rules;
  out["max_pbody"] = p.max_pbody;
  out["max_nbody"] = p.max_nbody;
  out["bias"] = bias_name(p.bias);
  out["seed"] = p.seed;
  return out;
}

GenProfile profile_from_json(const ojson& j) {
  GenProfile p;
  p.n_atoms = j.at("atoms").get<int>();
  p.n_rules = j.at("rules").get<int>();
  p.max_pbody = j.at("max_pbody").get<int>();
  p.max_nbody = j.at("max_nbody").get<int>();
  p.bias = bias_from_name(j.at("bias").get<std::string>());
  p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}

namespace {

// Counter-based splitmix: reproducible across platforms, no hidden state.
struct Rng {
  std::uint64_t seed;
  std::uint64_t counter = 0;

  std::uint64_t next() {
    std::uint64_t z = seed + (++counter) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

// First `take` elements of a partial Fisher-Yates shuffle of `pool`.
std::vector<int> sample_distinct(Rng& rng, std::vector<int> pool, size_t take) {
  take = std::min(take, pool.size());
  for (size_t j = 0; j < take; ++j) {
    size_t k = j + static_cast<size_t>(rng.below(pool.size() - j));
    std::swap(pool[j], pool[k]);
  }
  pool.resize(take);
  return pool;
}

std::int64_t pow_int(std::int64_t base, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (std::int64_t(1) << 60) / std::max<std::int64_t>(base, 1)) return std::int64_t(1) << 62;
    r *= base;
  }
  return r;
}

template <class Fn>
CheckReport guarded(const std::string& name, Fn&& fn) {
  CheckReport r;
  r.check = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    fn(r);
  } catch (const TooLargeError& e) {
    r.verdict = Verdict::TooLarge;
    r.stats["error"] = e.what();
    r.witness.reset();
  }
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

void violation(CheckReport& r, const Program& p, const std::string& detail, ojson extra = {}) {
  r.verdict = Verdict::Violated;
  ojson w;
  w["program"] = serialize_program(p);
  w["detail"] = detail;
  if (extra.is_object())
    for (auto& [key, value] : extra.items()) w[key] = value;
  r.witness = std::move(w);
}

void skipped(CheckReport& r, const std::string& reason) {
  r.verdict = Verdict::SkippedPrecondition;
  r.stats["reason"] = reason;
}

}  // namespace

Program gen_program(const GenProfile& profile) {
  if (profile.n_atoms < 1) throw Error("generation profile needs at least one atom");
  if (profile.n_rules < 0 || profile.max_pbody < 0 || profile.max_nbody < 0)
    throw Error("generation profile has a negative count");
  Rng rng{profile.seed, 0};
  int n = profile.n_atoms;

  std::vector<std::string> names(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) names[static_cast<size_t>(i)] = "x" + std::to_string(i);

  // topological rank: positive bodies of a tight program only look downward
  std::vector<int> rank(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(rank[static_cast<size_t>(i)], rank[static_cast<size_t>(j)]);
  }

  std::string text;
  for (int ri = 0; ri < profile.n_rules; ++ri) {
    int head = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    size_t psize = 0, nsize = 0;
    switch (profile.bias) {
      case GenBias::Quasi:
        psize = 0;
        nsize = rng.below(static_cast<std::uint64_t>(profile.max_nbody) + 1);
        break;
      case GenBias::NegativeHeavy:
        psize = (rng.below(2) == 0) ? 0 : rng.below(static_cast<std::uint64_t>(profile.max_pbody) + 1);
        nsize = profile.max_nbody == 0
                    ? 0
                    : 1 + rng.below(static_cast<std::uint64_t>(profile.max_nbody));
        break;
      case GenBias::Uniform:
      case GenBias::Tight:
        psize = rng.below(static_cast<std::uint64_t>(profile.max_pbody) + 1);
        nsize = rng.below(static_cast<std::uint64_t>(profile.max_nbody) + 1);
        break;
    }
    std::vector<int> ppool;
    if (profile.bias == GenBias::Tight) {
      for (int a = 0; a < n; ++a)
        if (rank[static_cast<size_t>(a)] < rank[static_cast<size_t>(head)]) ppool.push_back(a);
    } else {
      for (int a = 0; a < n; ++a) ppool.push_back(a);
    }
    std::vector<int> npool;
    for (int a = 0; a < n; ++a) npool.push_back(a);

    std::vector<int> pb = sample_distinct(rng, std::move(ppool), psize);
    std::vector<int> nb = sample_distinct(rng, std::move(npool), nsize);

    text += names[static_cast<size_t>(head)];
    if (!pb.empty() || !nb.empty()) {
      text += " :- ";
      bool first = true;
      for (int a : pb) {
        if (!first) text += ", ";
        text += names[static_cast<size_t>(a)];
        first = false;
      }
      for (int a : nb) {
        if (!first) text += ", ";
        text += "not " + names[static_cast<size_t>(a)];
        first = false;
      }
    }
    text += ".\n";
  }
  return parse_program(text);
}

CheckReport check_encoding_bridge(const Program& p, const Limits& lim) {
  return guarded("encoding-bridge", [&](CheckReport& r) {
    BooleanNetwork f = encode_bn(p);
    SignedDigraph dg = build_dg(p);
    SignedDigraph ig = influence_graph(f, lim);
    r.stats["ig_arcs"] = ig.arcs().size();
    r.stats["dg_arcs"] = dg.arcs().size();
    r.stats["ig_equals_dg"] = (ig == dg);
    if (!ig.subgraph_of(dg)) {
      violation(r, p, "influence graph is not a subgraph of the dependency graph");
      return;
    }
    TransitionGraph tg = build_tgsp(p, lim);
    TransitionGraph st = sync_stg(f, lim);
    if (!(tg == st)) {
      violation(r, p, "supported transition graph differs from the synchronous state graph");
      return;
    }
    std::vector<Interp3> ts_p = supported_trap_spaces(p, lim);
    std::vector<Interp3> ts_f = trap_spaces(f, lim);
    if (!(ts_p == ts_f)) {
      violation(r, p, "supported trap spaces differ from the network trap spaces");
      return;
    }
    r.stats["trap_spaces"] = ts_p.size();
  });
}

CheckReport check_regular_equals_min_stable_ts(const Program& p, const Limits& lim) {
  return guarded("regular-min-ts", [&](CheckReport& r) {
    std::vector<Interp3> reg = regular_models(p, lim);
    std::vector<Interp3> mts = min_stable_trap_spaces(p, lim);
    r.stats["regular_models"] = reg.size();
    r.stats["min_stable_trap_spaces"] = mts.size();
    if (!(reg == mts)) {
      ojson extra;
      extra["regular_count"] = reg.size();
      extra["min_trap_space_count"] = mts.size();
      violation(r, p, "regular models differ from the minimal stable trap spaces", extra);
    }
  });
}

CheckReport check_neg_cycle_necessity(const Program& p, const Limits& lim) {
  return guarded("neg-cycle-necessity", [&](CheckReport& r) {
    SignedDigraph dg = build_dg(p);
    if (has_negative_cycle(dg, lim)) {
      skipped(r, "dependency graph has a negative cycle");
      return;
    }
    std::vector<Interp3> reg = regular_models(p, lim);
    std::vector<Interp2> stable = stable_models(p, lim);
    r.stats["regular_models"] = reg.size();
    r.stats["stable_models"] = stable.size();
    for (const Interp3& m : reg) {
      if (!m.is_two_valued()) {
        ojson extra;
        extra["model"] = m.to_pattern();
        violation(r, p, "a regular model is not 2-valued although no negative cycle exists", extra);
        return;
      }
    }
    if (stable.empty()) {
      violation(r, p, "no stable model although no negative cycle exists");
      return;
    }
    Classification cls = classify(p, lim);
    r.stats["locally_stratified"] = cls.locally_stratified;
    if (cls.locally_stratified) {
      bool unique = reg.size() == 1 && stable.size() == 1 && reg[0].as_interp2() == stable[0];
      if (!unique) {
        violation(r, p, "locally stratified program lacks a unique regular = unique stable model");
        return;
      }
    }
  });
}

CheckReport check_pos_cycle_unicity(const Program& p, const Limits& lim) {
  return guarded("pos-cycle-unicity", [&](CheckReport& r) {
    SignedDigraph dg = build_dg(p);
    if (has_positive_cycle(dg, lim)) {
      skipped(r, "dependency graph has a positive cycle");
      return;
    }
    std::vector<Interp3> reg = regular_models(p, lim);
    std::vector<Interp2> stable = stable_models(p, lim);
    r.stats["regular_models"] = reg.size();
    r.stats["stable_models"] = stable.size();
    if (reg.size() != 1) {
      violation(r, p, "regular model is not unique although no positive cycle exists");
      return;
    }
    if (stable.size() > 1) {
      violation(r, p, "more than one stable model although no positive cycle exists");
      return;
    }
  });
}

CheckReport check_fvs_bounds(const Program& p, const Limits& lim) {
  return guarded("fvs-bounds", [&](CheckReport& r) {
    SignedDigraph dg = build_dg(p);
    std::vector<AtomId> fvs = min_positive_fvs(dg, lim);
    int k = static_cast<int>(fvs.size());
    std::vector<Interp3> reg = regular_models(p, lim);
    bool tight = classify(p, lim).tight;
    std::int64_t bound3 = pow_int(3, k);
    std::int64_t bound2 = pow_int(2, k);
    std::int64_t count = static_cast<std::int64_t>(reg.size());
    r.stats["k"] = k;
    r.stats["regular_models"] = count;
    r.stats["tight"] = tight;
    r.stats["bound_3k"] = bound3;
    r.stats["margin_3k"] = bound3 - count;
    if (tight) {
      r.stats["bound_2k"] = bound2;
      r.stats["margin_2k"] = bound2 - count;
    }
    if (count > bound3) {
      ojson extra;
      extra["k"] = k;
      extra["regular_count"] = count;
      violation(r, p, "more regular models than 3^k", extra);
      return;
    }
    if (tight && count > bound2) {
      ojson extra;
      extra["k"] = k;
      extra["regular_count"] = count;
      violation(r, p, "tight program with more regular models than 2^k", extra);
      return;
    }
  });
}

CheckReport check_lfp_invariants(const Program& p, const Limits& lim) {
  return guarded("lfp-invariants", [&](CheckReport& r) {
    QuasiProgram lf = lfp(p);
    r.stats["lfp_rules"] = lf.program.rules().size();
    TransitionGraph a = build_tgst(p, lim);
    TransitionGraph b = build_tgst(lf.program, lim);
    if (!(a == b)) {
      violation(r, p, "stable transition graph changed under the least-fixpoint unfolding");
      return;
    }
    SignedDigraph dg_p = build_dg(p);
    SignedDigraph dg_lf = build_dg(lf.program);
    bool p_neg = has_negative_cycle(dg_p, lim);
    bool lf_neg = has_negative_cycle(dg_lf, lim);
    r.stats["dg_has_pos_cycle"] = has_positive_cycle(dg_p, lim);
    r.stats["dg_lfp_has_pos_cycle"] = has_positive_cycle(dg_lf, lim);
    if (!p_neg && lf_neg) {
      violation(r, p, "unfolding introduced a negative cycle");
      return;
    }
    Classification cls = classify(p, lim);
    if (cls.locally_stratified && has_any_cycle(dg_lf)) {
      violation(r, p, "locally stratified program unfolded to a cyclic dependency graph");
      return;
    }
    TransitionGraph sp = build_tgsp(lf.program, lim);
    if (!(sp == b)) {
      violation(r, p, "unfolded program has distinct stable and supported transition graphs");
      return;
    }
  });
}

CheckReport hunt_bound_single(const Program& p, const Limits& lim, int bound_base) {
  return guarded("hunt-2k", [&](CheckReport& r) {
    r.stats["bound_base"] = bound_base;
    if (classify(p, lim).tight) {
      skipped(r, "program is tight; the conjecture targets non-tight programs");
      return;
    }
    int k = static_cast<int>(min_positive_fvs(build_dg(p), lim).size());
    std::int64_t count = static_cast<std::int64_t>(regular_models(p, lim).size());
    std::int64_t bound = pow_int(bound_base, k);
    r.stats["k"] = k;
    r.stats["regular_models"] = count;
    r.stats["bound"] = bound;
    if (count > bound) {
      ojson extra;
      extra["k"] = k;
      extra["regular_count"] = count;
      extra["bound_base"] = bound_base;
      violation(r, p, "non-tight program exceeds the bound_base^k regular-model bound", extra);
    }
  });
}

CheckReport hunt_conjecture_2k(const GenProfile& profile, int trials, const Limits& lim,
                               int bound_base) {
  return guarded("hunt-2k", [&](CheckReport& r) {
    std::int64_t attempts = 0, checked = 0, tight_skipped = 0;
    std::int64_t max_count = 0;
    int max_k = 0;
    const std::int64_t max_attempts = std::max<std::int64_t>(trials, 50LL * trials);
    for (; checked < trials && attempts < max_attempts; ++attempts) {
      GenProfile prof = profile;
      prof.seed = profile.seed + static_cast<std::uint64_t>(attempts);
      Program p = gen_program(prof);
      if (classify(p, lim).tight) {
        ++tight_skipped;
        continue;
      }
      ++checked;
      int k = static_cast<int>(min_positive_fvs(build_dg(p), lim).size());
      std::int64_t count = static_cast<std::int64_t>(regular_models(p, lim).size());
      if (count > max_count) {
        max_count = count;
        max_k = k;
      }
      if (count > pow_int(bound_base, k)) {
        ojson extra;
        extra["k"] = k;
        extra["regular_count"] = count;
        extra["bound_base"] = bound_base;
        extra["profile"] = profile_to_json(prof);
        extra["seed"] = prof.seed;
        violation(r, p, "non-tight program exceeds the bound_base^k regular-model bound", extra);
        break;
      }
    }
    r.stats["bound_base"] = bound_base;
    r.stats["trials_requested"] = trials;
    r.stats["non_tight_checked"] = checked;
    r.stats["tight_skipped"] = tight_skipped;
    r.stats["attempts"] = attempts;
    r.stats["max_regular_models"] = max_count;
    r.stats["max_regular_models_k"] = max_k;
  });
}

std::vector<std::string> check_names() {
  return {"encoding-bridge", "regular-min-ts",  "neg-cycle-necessity", "pos-cycle-unicity",
          "fvs-bounds",      "lfp-invariants",  "hunt-2k"};
}

CheckReport run_check(const std::string& name, const Program& p, const Limits& lim) {
  if (name == "encoding-bridge") return check_encoding_bridge(p, lim);
  if (name == "regular-min-ts") return check_regular_equals_min_stable_ts(p, lim);
  if (name == "neg-cycle-necessity") return check_neg_cycle_necessity(p, lim);
  if (name == "pos-cycle-unicity") return check_pos_cycle_unicity(p, lim);
  if (name == "fvs-bounds") return check_fvs_bounds(p, lim);
  if (name == "lfp-invariants") return check_lfp_invariants(p, lim);
  if (name == "hunt-2k") return hunt_bound_single(p, lim);
  throw Error("unknown check '" + name + "'");
}

nlohmann::ordered_json witness_file_json(const CheckReport& r,
                                         const std::optional<GenProfile>& profile) {
  ojson out;
  if (profile) {
    out["profile"] = profile_to_json(*profile);
    out["seed"] = profile->seed;
  } else if (r.witness && r.witness->contains("profile")) {
    out["profile"] = (*r.witness)["profile"];
    out["seed"] = (*r.witness)["seed"];
  } else {
    out["profile"] = nullptr;
    out["seed"] = nullptr;
  }
  out["program"] = r.witness ? (*r.witness)["program"] : ojson(nullptr);
  out["check"] = r.check;
  out["verdict"] = verdict_name(r.verdict);
  ojson details = ojson::object();
  if (r.witness)
    for (auto& [key, value] : r.witness->items())
      if (key != "program" && key != "profile" && key != "seed") details[key] = value;
  out["details"] = std::move(details);
  return out;
}

CheckReport replay_witness(const nlohmann::ordered_json& witness, const Limits& lim) {
  std::string name = witness.at("check").get<std::string>();
  if (!witness.at("program").is_string()) throw Error("witness file has no program text");
  Program p = parse_program(witness.at("program").get<std::string>());
  if (name == "hunt-2k") {
    int base = 2;
    if (witness.contains("details") && witness.at("details").contains("bound_base"))
      base = witness.at("details").at("bound_base").get<int>();
    return hunt_bound_single(p, lim, base);
  }
  return run_check(name, p, lim);
}

}  // namespace lpsem
