// Command-line front end: single-algebra reports, resolutions, epsilon,
// exhaustive sweeps. Exit codes: 0 all good, 1 a check failed, 2 usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nakayama/filtration.hpp"
#include "nakayama/harness.hpp"
#include "nakayama/invariants.hpp"
#include "nakayama/io.hpp"
#include "nakayama/modules.hpp"

namespace {

using namespace nakayama;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct AlgebraArgs {
  std::string kupisch;
  std::string relations;
};

void add_algebra_options(CLI::App* cmd, AlgebraArgs* args) {
  auto* k = cmd->add_option("--kupisch", args->kupisch, "Kupisch series, e.g. 3,4,3,3,2");
  auto* r = cmd->add_option("--relations", args->relations,
                            "defining relations, e.g. n=5;1:3,3:3,5:2");
  k->excludes(r);
  r->excludes(k);
}

Algebra algebra_from_args(const AlgebraArgs& args) {
  if (!args.kupisch.empty()) return parse_kupisch_text(args.kupisch);
  if (!args.relations.empty()) return parse_relations_text(args.relations);
  throw Error("one of --kupisch or --relations is required");
}

std::vector<CheckId> parse_check_list(const std::string& text) {
  if (text.empty() || text == "all") {
    return {kAllChecks.begin(), kAllChecks.end()};
  }
  std::vector<CheckId> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::optional<CheckId> id = check_from_name(token);
    if (!id) throw Error("unknown check '" + token + "'");
    out.push_back(*id);
  }
  return out;
}

int cmd_invariants(const AlgebraArgs& args, bool as_json) {
  const Algebra a = algebra_from_args(args);
  if (as_json) {
    std::cout << invariants_json(a).dump(2) << "\n";
  } else {
    std::cout << invariants_table(a);
  }
  return kExitOk;
}

int cmd_resolve(const AlgebraArgs& args, const std::string& module_text, int max_steps) {
  const Algebra a = algebra_from_args(args);
  const UniserialModule m = parse_module_text(a, module_text);
  const OrbitInfo orbit = syzygy_orbit(a, m);
  const std::vector<DeltaBlock> blocks = delta_blocks(a);

  const int shown = std::min<int>(static_cast<int>(orbit.visited.size()), max_steps + 1);
  for (int d = 0; d < shown; ++d) {
    const UniserialModule term = orbit.visited[static_cast<size_t>(d)];
    std::cout << (d == 0 ? "M    " : "omega^" + std::to_string(d)) << "\t(top="
              << term.top << ",len=" << term.len << ")\t" << format_factors(a, term);
    if (is_projective(a, term)) std::cout << "\tprojective";
    if (d >= 2) {
      std::optional<Filtration> f = try_b_filtration(blocks, term);
      if (f) {
        std::cout << "\tB-filtration:";
        for (int ord : f->ordinals) {
          const DeltaBlock& b = blocks[static_cast<size_t>(ord - 1)];
          std::cout << " " << format_factors(a, {b.top, b.len});
        }
      }
    }
    std::cout << "\n";
  }
  if (orbit.period) {
    std::cout << "periodic tail: preperiod " << orbit.preperiod << ", period "
              << *orbit.period << "\n";
  } else if (static_cast<int>(orbit.visited.size()) <= max_steps + 1) {
    std::cout << "resolution terminates: pdim " << orbit.preperiod << "\n";
  } else {
    std::cout << "stopped after " << max_steps << " steps (use --max-steps to extend)\n";
  }
  return kExitOk;
}

int cmd_epsilon(const AlgebraArgs& args) {
  const Algebra a = algebra_from_args(args);
  const EpsilonResult eps = epsilon(a);  // throws SelfinjectiveInput -> usage error
  std::cout << "epsilon " << format_kupisch(eps.kupisch);
  if (!eps.algebra) std::cout << "  (degenerate: not a cyclic Nakayama series)";
  std::cout << "\n";
  for (const DeltaBlock& b : eps.blocks) {
    std::cout << "new_vertex " << b.ordinal << " <-> interval "
              << format_factors(a, {b.top, b.len}) << "\n";
  }
  return kExitOk;
}

int cmd_check(const AlgebraArgs& args, const std::string& checks_text) {
  const Algebra a = algebra_from_args(args);
  const CheckReport report = run_checks(a, parse_check_list(checks_text));
  bool failed = false;
  for (const auto& [id, outcome] : report.results) {
    std::cout << check_name(id) << "\t";
    switch (outcome.status) {
      case CheckStatus::Pass: std::cout << "pass"; break;
      case CheckStatus::Fail:
        std::cout << "FAIL\t" << outcome.note;
        failed = true;
        break;
      case CheckStatus::Skip: std::cout << "skip\t" << outcome.note; break;
    }
    std::cout << "\n";
  }
  return failed ? kExitCounterexample : kExitOk;
}

int cmd_sweep(int rank_min, int rank_max, int max_len, const std::string& checks_text,
              int jobs, const std::string& out_path) {
  EnumerationSpec spec;
  spec.rank_min = rank_min;
  spec.rank_max = rank_max;
  spec.max_len = max_len;
  spec.dedupe = true;
  const SweepReport report = sweep(spec, parse_check_list(checks_text), jobs);

  std::cout << "algebras " << report.algebra_count << ", failures "
            << report.failure_count() << ", wall " << report.wall_seconds << "s\n";
  for (const auto& [id, totals] : report.totals) {
    std::cout << check_name(id) << "\tpass " << totals.pass << "\tfail " << totals.fail
              << "\tskip " << totals.skip << "\n";
  }
  for (const SweepFailure& f : report.failures) {
    std::cout << "FAIL " << check_name(f.check) << " [" << format_kupisch(f.kupisch)
              << "] " << f.payload << "\n";
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + out_path + "'");
    if (out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".csv") {
      out << sweep_csv(report);
    } else {
      out << sweep_json(report).dump(2) << "\n";
    }
  }
  return report.failures.empty() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological invariants of cyclic Nakayama algebras"};
  app.require_subcommand(1);

  AlgebraArgs inv_args;
  bool inv_json = false;
  CLI::App* inv = app.add_subcommand("invariants", "single-algebra dimension report");
  add_algebra_options(inv, &inv_args);
  inv->add_flag("--json", inv_json, "emit JSON instead of a table");

  AlgebraArgs res_args;
  std::string res_module;
  int res_max_steps = 64;
  CLI::App* res = app.add_subcommand("resolve", "print a minimal projective resolution");
  add_algebra_options(res, &res_args);
  res->add_option("--module", res_module, "module as top=T,len=L")->required();
  res->add_option("--max-steps", res_max_steps, "maximum syzygy steps to print");

  AlgebraArgs eps_args;
  CLI::App* eps = app.add_subcommand("epsilon", "syzygy filtered algebra and block table");
  add_algebra_options(eps, &eps_args);

  AlgebraArgs chk_args;
  std::string chk_checks = "all";
  CLI::App* chk = app.add_subcommand("check", "run verification checks on one algebra");
  add_algebra_options(chk, &chk_args);
  chk->add_option("--checks", chk_checks, "comma-separated check names, or 'all'");

  int sw_rank_min = 1, sw_rank_max = 5, sw_max_len = 7, sw_jobs = 1;
  std::string sw_checks = "all", sw_out;
  CLI::App* sw = app.add_subcommand("sweep", "run checks over all algebras in a window");
  sw->add_option("--rank-min", sw_rank_min, "smallest rank");
  sw->add_option("--rank-max", sw_rank_max, "largest rank");
  sw->add_option("--max-len", sw_max_len, "largest Kupisch entry");
  sw->add_option("--checks", sw_checks, "comma-separated check names, or 'all'");
  sw->add_option("--jobs", sw_jobs, "worker threads");
  sw->add_option("--out", sw_out, "write the report to FILE.json or FILE.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(inv_args, inv_json);
    if (res->parsed()) return cmd_resolve(res_args, res_module, res_max_steps);
    if (eps->parsed()) return cmd_epsilon(eps_args);
    if (chk->parsed()) return cmd_check(chk_args, chk_checks);
    if (sw->parsed()) return cmd_sweep(sw_rank_min, sw_rank_max, sw_max_len, sw_checks,
                                       sw_jobs, sw_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
