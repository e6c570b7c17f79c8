// lpsem: command-line front end for the logic-program semantics toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 enumeration limit
// exceeded, 4 check violated (the witness is printed on stdout).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpsem/boolnet.hpp"
#include "lpsem/checkers.hpp"
#include "lpsem/core.hpp"
#include "lpsem/depgraph.hpp"
#include "lpsem/dynamics.hpp"
#include "lpsem/jsonio.hpp"
#include "lpsem/lfp.hpp"
#include "lpsem/parser.hpp"
#include "lpsem/semantics.hpp"

namespace {

using namespace lpsem;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitViolated = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Program load_program(const std::string& path) { return parse_program(read_file(path)); }

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

BooleanNetwork load_network(const std::string& path) {
  if (ends_with(path, ".bn")) return parse_bn(read_file(path));
  return encode_bn(load_program(path));
}

void print_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

struct ProfileArgs {
  GenProfile prof;
  int count = 100;    // programs per corpus run
  int trials = 1000;  // hunter trials
};

ProfileArgs parse_profile_string(const std::string& text) {
  ProfileArgs out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("profile entries look like key=value; got '" + item + "'");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    try {
      if (key == "atoms")
        out.prof.n_atoms = std::stoi(value);
      else if (key == "rules")
        out.prof.n_rules = std::stoi(value);
      else if (key == "maxp")
        out.prof.max_pbody = std::stoi(value);
      else if (key == "maxn")
        out.prof.max_nbody = std::stoi(value);
      else if (key == "bias")
        out.prof.bias = bias_from_name(value);
      else if (key == "seed")
        out.prof.seed = std::stoull(value);
      else if (key == "count")
        out.count = std::stoi(value);
      else if (key == "trials")
        out.trials = std::stoi(value);
      else
        throw Error("unknown profile key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw Error("bad value for profile key '" + key + "'");
    }
  }
  return out;
}

int run_check_command(const std::string& file, const std::string& random_profile,
                      const std::string& suite, const std::string& replay_path,
                      const std::string& witness_out, int bound_base, int trials_override,
                      const Limits& lim) {
  auto emit_witness = [&](const ojson& w) {
    print_json(w);
    if (!witness_out.empty()) {
      std::ofstream out(witness_out, std::ios::binary);
      out << w.dump(2) << "\n";
    }
  };

  if (!replay_path.empty()) {
    ojson stored = ojson::parse(read_file(replay_path));
    CheckReport fresh = replay_witness(stored, lim);
    print_json(report_to_json(fresh));
    return fresh.verdict == Verdict::Violated ? kExitViolated : kExitOk;
  }

  std::vector<std::string> selected;
  if (suite == "all")
    selected = check_names();
  else
    selected = {suite};
  for (const auto& name : selected) {
    auto known = check_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw CLI::ValidationError("--suite", "unknown check '" + name + "'");
  }

  if (!random_profile.empty()) {
    ProfileArgs args = parse_profile_string(random_profile);
    if (trials_override >= 0) args.trials = trials_override;

    if (suite == "hunt-2k") {
      CheckReport r = hunt_conjecture_2k(args.prof, args.trials, lim, bound_base);
      print_json(report_to_json(r));
      if (r.verdict == Verdict::Violated) {
        emit_witness(witness_file_json(r, std::nullopt));
        return kExitViolated;
      }
      return kExitOk;
    }

    ojson summary;
    summary["profile"] = profile_to_json(args.prof);
    summary["count"] = args.count;
    ojson per_check = ojson::object();
    bool any_violation = false;
    std::vector<ojson> witnesses;
    for (const auto& name : selected) {
      if (name == "hunt-2k") continue;  // corpus mode runs the per-program checks
      ojson counts;
      counts["holds"] = 0;
      counts["violated"] = 0;
      counts["skipped-precondition"] = 0;
      counts["too-large"] = 0;
      per_check[name] = counts;
    }
    for (int i = 0; i < args.count; ++i) {
      GenProfile prof = args.prof;
      prof.seed = args.prof.seed + static_cast<std::uint64_t>(i);
      Program p = gen_program(prof);
      for (const auto& name : selected) {
        if (name == "hunt-2k") continue;
        CheckReport r = run_check(name, p, lim);
        auto& slot = per_check[name][verdict_name(r.verdict)];
        slot = slot.get<int>() + 1;
        if (r.verdict == Verdict::Violated) {
          any_violation = true;
          witnesses.push_back(witness_file_json(r, prof));
        }
      }
    }
    summary["checks"] = per_check;
    print_json(summary);
    for (const auto& w : witnesses) emit_witness(w);
    return any_violation ? kExitViolated : kExitOk;
  }

  Program p = load_program(file);
  ojson reports = ojson::array();
  bool any_violation = false;
  std::optional<ojson> first_witness;
  for (const auto& name : selected) {
    CheckReport r = run_check(name, p, lim);
    reports.push_back(report_to_json(r));
    if (r.verdict == Verdict::Violated) {
      any_violation = true;
      if (!first_witness) first_witness = witness_file_json(r, std::nullopt);
    }
  }
  print_json(reports);
  if (any_violation) {
    emit_witness(*first_witness);
    return kExitViolated;
  }
  return kExitOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"model-theoretic analysis of finite ground normal logic programs"};
  app.require_subcommand(1);
  Limits lim;
  app.add_option("--max-atoms-2v", lim.max_atoms_2v,
                 "cap n for operations sweeping 2^n states");
  app.add_option("--max-atoms-3v", lim.max_atoms_3v,
                 "cap n for operations sweeping 3^n interpretations");
  app.add_option("--cycle-cap", lim.cycle_cap, "cap on enumerated simple cycles");
  app.add_option("--jobs", lim.jobs, "worker threads for state sweeps");

  auto* cmd_parse = app.add_subcommand("parse", "echo the canonical form of a program");
  std::string parse_file;
  cmd_parse->add_option("file", parse_file, "program file (.lp)")->required();

  auto* cmd_graph = app.add_subcommand("graph", "dependency graph of a program");
  std::string graph_file;
  bool graph_positive = false, graph_dot = false;
  cmd_graph->add_option("file", graph_file)->required();
  cmd_graph->add_flag("--positive", graph_positive, "positive dependency graph only");
  cmd_graph->add_flag("--dot", graph_dot, "emit DOT instead of JSON");

  auto* cmd_classify = app.add_subcommand("classify", "graph-theoretic program classes");
  std::string classify_file;
  cmd_classify->add_option("file", classify_file)->required();

  auto* cmd_models = app.add_subcommand("models", "model sets of a program");
  std::string models_file;
  bool m_regular = false, m_stable = false, m_stable_partial = false, m_supported_partial = false,
       m_stable_ts = false, m_supported_ts = false;
  cmd_models->add_option("file", models_file)->required();
  cmd_models->add_flag("--regular", m_regular, "regular models");
  cmd_models->add_flag("--stable", m_stable, "2-valued stable models");
  cmd_models->add_flag("--stable-partial", m_stable_partial, "stable partial models");
  cmd_models->add_flag("--supported-partial", m_supported_partial, "supported partial models");
  cmd_models->add_flag("--stable-trap-spaces", m_stable_ts, "stable trap spaces");
  cmd_models->add_flag("--supported-trap-spaces", m_supported_ts, "supported trap spaces");

  auto* cmd_lfp = app.add_subcommand("lfp", "least fixpoint of the rule unfolding");
  std::string lfp_file;
  cmd_lfp->add_option("file", lfp_file)->required();

  auto* cmd_bn = app.add_subcommand("bn", "Boolean-network view of a program (or .bn file)");
  std::string bn_file;
  bool bn_encode = false, bn_influence = false, bn_traps = false, bn_min_traps = false,
       bn_dot = false;
  std::string bn_stg, bn_attractors;
  cmd_bn->add_option("file", bn_file)->required();
  cmd_bn->add_flag("--encode", bn_encode, "print the network text form");
  cmd_bn->add_flag("--influence", bn_influence, "influence graph");
  cmd_bn->add_option("--stg", bn_stg, "state transition graph (sync|async)");
  cmd_bn->add_option("--attractors", bn_attractors, "attractors (sync|async)");
  cmd_bn->add_flag("--trap-spaces", bn_traps, "all trap spaces");
  cmd_bn->add_flag("--min-trap-spaces", bn_min_traps, "minimal trap spaces");
  cmd_bn->add_flag("--dot", bn_dot, "emit DOT where applicable");

  auto* cmd_dyn = app.add_subcommand("dynamics", "transition graphs of a program");
  std::string dyn_file;
  bool dyn_tgst = false, dyn_tgsp = false, dyn_dot = false;
  cmd_dyn->add_option("file", dyn_file)->required();
  cmd_dyn->add_flag("--tgst", dyn_tgst, "stable transition graph");
  cmd_dyn->add_flag("--tgsp", dyn_tgsp, "supported transition graph");
  cmd_dyn->add_flag("--dot", dyn_dot, "emit DOT instead of JSON");

  auto* cmd_check = app.add_subcommand("check", "run verification checks");
  std::string check_file, check_random, check_suite = "all", check_replay, check_witness_out;
  int check_base = 2;
  int check_trials = -1;
  cmd_check->add_option("file", check_file, "program file to check");
  cmd_check->add_option("--random", check_random, "generation profile, e.g. atoms=6,rules=8,seed=1,count=100");
  cmd_check->add_option("--suite", check_suite, "all or one check name");
  cmd_check->add_option("--replay", check_replay, "re-run a stored witness file");
  cmd_check->add_option("--witness-out", check_witness_out, "also write violations to this file");
  cmd_check->add_option("--base", check_base, "bound base for the hunter (default 2)");
  cmd_check->add_option("--trials", check_trials, "hunter trials (overrides the profile)");

  auto* cmd_gen = app.add_subcommand("gen", "generate a seeded random program");
  std::string gen_profile;
  cmd_gen->add_option("profile", gen_profile, "e.g. atoms=6,rules=8,bias=uniform,seed=1")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_parse->parsed()) {
    std::cout << serialize_program(load_program(parse_file));
    return kExitOk;
  }

  if (cmd_graph->parsed()) {
    Program p = load_program(graph_file);
    SignedDigraph g = graph_positive ? build_pdg(p) : build_dg(p);
    if (graph_dot)
      std::cout << to_dot(g);
    else
      print_json(graph_to_json(g));
    return kExitOk;
  }

  if (cmd_classify->parsed()) {
    Program p = load_program(classify_file);
    Classification c = classify(p, lim);
    std::vector<AtomId> fvs = min_positive_fvs(build_dg(p), lim);
    print_json(classification_to_json(c, fvs, p.atoms()));
    return kExitOk;
  }

  if (cmd_models->parsed()) {
    Program p = load_program(models_file);
    int picked = m_regular + m_stable + m_stable_partial + m_supported_partial + m_stable_ts +
                 m_supported_ts;
    if (picked != 1)
      throw CLI::ValidationError("models", "pick exactly one model class flag");
    if (m_regular) print_json(models3_to_json(regular_models(p, lim)));
    if (m_stable) print_json(models2_to_json(stable_models(p, lim)));
    if (m_stable_partial) print_json(models3_to_json(stable_partial_models(p, lim)));
    if (m_supported_partial) print_json(models3_to_json(supported_partial_models(p, lim)));
    if (m_stable_ts) print_json(models3_to_json(stable_trap_spaces(p, lim)));
    if (m_supported_ts) print_json(models3_to_json(supported_trap_spaces(p, lim)));
    return kExitOk;
  }

  if (cmd_lfp->parsed()) {
    std::cout << serialize_program(lfp(load_program(lfp_file)).program);
    return kExitOk;
  }

  if (cmd_bn->parsed()) {
    BooleanNetwork f = load_network(bn_file);
    int picked = bn_encode + bn_influence + bn_traps + bn_min_traps + !bn_stg.empty() +
                 !bn_attractors.empty();
    if (picked != 1)
      throw CLI::ValidationError("bn", "pick exactly one of --encode/--influence/--stg/"
                                       "--attractors/--trap-spaces/--min-trap-spaces");
    auto scheme_of = [](const std::string& s) {
      if (s != "sync" && s != "async")
        throw CLI::ValidationError("bn", "scheme must be sync or async");
      return s == "sync";
    };
    if (bn_encode) std::cout << serialize_bn(f);
    if (bn_influence) {
      SignedDigraph ig = influence_graph(f, lim);
      if (bn_dot)
        std::cout << to_dot(ig);
      else
        print_json(graph_to_json(ig));
    }
    if (!bn_stg.empty()) {
      if (scheme_of(bn_stg)) {
        TransitionGraph g = sync_stg(f, lim);
        if (bn_dot)
          std::cout << to_dot(g, attractors(g));
        else
          print_json(transition_graph_to_json(g));
      } else {
        NondetTransitionGraph g = async_stg(f, lim);
        if (bn_dot)
          std::cout << to_dot(g, attractors(g));
        else
          print_json(nondet_graph_to_json(g));
      }
    }
    if (!bn_attractors.empty()) {
      if (scheme_of(bn_attractors)) {
        TransitionGraph g = sync_stg(f, lim);
        print_json(attractors_to_json(*f.vars, attractors(g)));
      } else {
        NondetTransitionGraph g = async_stg(f, lim);
        print_json(attractors_to_json(*f.vars, attractors(g)));
      }
    }
    if (bn_traps) print_json(subspaces_to_json(trap_spaces(f, lim)));
    if (bn_min_traps) print_json(subspaces_to_json(min_trap_spaces(f, lim)));
    return kExitOk;
  }

  if (cmd_dyn->parsed()) {
    Program p = load_program(dyn_file);
    if (dyn_tgst == dyn_tgsp)
      throw CLI::ValidationError("dynamics", "pick exactly one of --tgst/--tgsp");
    TransitionGraph g = dyn_tgst ? build_tgst(p, lim) : build_tgsp(p, lim);
    if (dyn_dot)
      std::cout << to_dot(g);
    else
      print_json(transition_graph_to_json(g));
    return kExitOk;
  }

  if (cmd_check->parsed()) {
    if (check_file.empty() && check_random.empty() && check_replay.empty())
      throw CLI::ValidationError("check", "give a program file, --random PROFILE, or --replay");
    return run_check_command(check_file, check_random, check_suite, check_replay,
                             check_witness_out, check_base, check_trials, lim);
  }

  if (cmd_gen->parsed()) {
    ProfileArgs args = parse_profile_string(gen_profile);
    std::cout << serialize_program(gen_program(args.prof));
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.span.line << ":" << e.span.col << ": " << e.what()
              << "\n";
    return kExitParse;
  } catch (const TooLargeError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
