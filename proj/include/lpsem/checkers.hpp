#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpsem/core.hpp"

namespace lpsem {

enum class Verdict { Holds, Violated, SkippedPrecondition, TooLarge };

const char* verdict_name(Verdict v);

/// Outcome of one check on one program. A violated verdict always carries a
/// witness that reproduces the violation when replayed in isolation.
struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::Holds;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  std::optional<nlohmann::ordered_json> witness;
  double elapsed_ms = 0.0;
};

nlohmann::ordered_json report_to_json(const CheckReport& r);

enum class GenBias { Uniform, Tight, Quasi, NegativeHeavy };

const char* bias_name(GenBias b);
GenBias bias_from_name(const std::string& name);

/// Deterministic generation profile; equal profiles give byte-identical
/// programs on every platform (counter-based splitmix RNG).
struct GenProfile {
  int n_atoms = 6;
  int n_rules = 8;
  int max_pbody = 2;
  int max_nbody = 2;
  GenBias bias = GenBias::Uniform;
  std::uint64_t seed = 1;
};

nlohmann::ordered_json profile_to_json(const GenProfile& p);
GenProfile profile_from_json(const nlohmann::ordered_json& j);

Program gen_program(const GenProfile& profile);

/// Encoded-network bridge: influence graph contained in the dependency
/// graph, supported transition graph equal to the synchronous state graph,
/// and supported trap spaces equal to network trap spaces.
CheckReport check_encoding_bridge(const Program& p, const Limits& lim = {});

/// Regular models computed by the reduct route must equal the minimal stable
/// trap spaces computed by the transition-graph route.
CheckReport check_regular_equals_min_stable_ts(const Program& p, const Limits& lim = {});

/// Without negative cycles every regular model is 2-valued and at least one
/// stable model exists; locally stratified programs additionally have a
/// unique regular model that is the unique stable model.
CheckReport check_neg_cycle_necessity(const Program& p, const Limits& lim = {});

/// Without positive cycles there is exactly one regular model and at most
/// one stable model.
CheckReport check_pos_cycle_unicity(const Program& p, const Limits& lim = {});

/// With k the exact minimum positive feedback vertex set size, the number of
/// regular models is at most 3^k, and at most 2^k for tight programs.
CheckReport check_fvs_bounds(const Program& p, const Limits& lim = {});

/// The unfolded program has the same stable transition graph, inherits
/// negative-cycle freedom, is acyclic for locally stratified input, and has
/// identical stable and supported transition graphs.
CheckReport check_lfp_invariants(const Program& p, const Limits& lim = {});

/// One bound trial on a single program: skipped for tight programs,
/// violated iff the program has more regular models than bound_base^k.
CheckReport hunt_bound_single(const Program& p, const Limits& lim = {}, int bound_base = 2);

/// Searches seeded random non-tight programs for |regular| > bound_base^k.
/// Stops at the first violation and ships it as a replayable witness.
CheckReport hunt_conjecture_2k(const GenProfile& profile, int trials, const Limits& lim = {},
                               int bound_base = 2);

/// Names accepted by run_check / the CLI --suite option.
std::vector<std::string> check_names();

/// Runs the named check; "all" is not accepted here.
CheckReport run_check(const std::string& name, const Program& p, const Limits& lim = {});

/// Witness file: {profile, seed, program, check, verdict, details}.
nlohmann::ordered_json witness_file_json(const CheckReport& r,
                                         const std::optional<GenProfile>& profile);

/// Re-runs the check recorded in a witness file on the recorded program and
/// returns the fresh report; deterministic, so the verdict must reproduce.
CheckReport replay_witness(const nlohmann::ordered_json& witness, const Limits& lim = {});

}  // namespace lpsem
