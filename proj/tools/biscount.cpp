// biscount: approximate and exact independent-set counting for dense regular
// bipartite graphs.
//
//   biscount count  --input G.txt --epsilon 0.3 --seed 1 [--t0 k] [--c-const c] [--exact] [--json]
//   biscount gen    --n 20 --d 10 --seed 7 --out G.txt
//   biscount verify --input G.txt [--t0 k]
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "biscount/biscount.hpp"
#include "biscount/report.hpp"

namespace {

using namespace biscount;

struct CountOptions {
  std::string input;
  double epsilon = 0.25;
  std::uint64_t seed = 0;
  std::optional<std::size_t> t0;
  double c_const = 1.0;
  bool exact = false;
  bool json = false;
  bool force_fpras = false;
  bool no_timing = false;
  bool verbose = false;
  unsigned threads = 1;
  std::optional<std::size_t> brute_threshold;
  std::string dump_cuts;
  std::string dump_family;
  Budgets budgets;
};

int run_count(const CountOptions& o) {
  const BipartiteGraph g = read_graph(o.input);
  RunConfig cfg;
  cfg.epsilon = o.epsilon;
  cfg.seed = o.seed;
  cfg.t0_override = o.t0;
  cfg.c_const = o.c_const;
  cfg.threads = o.threads;
  cfg.budgets = o.budgets;
  if (o.brute_threshold) cfg.brute_force_threshold = *o.brute_threshold;
  if (o.force_fpras) {
    cfg.enforce_regime = false;
    cfg.brute_force_threshold = 0;
  }
  if (o.exact) {
    cfg.brute_force_threshold = g.n();
    cfg.exact_limit = std::max(cfg.exact_limit, g.n());
  }
  if (!o.dump_cuts.empty())
    cfg.on_cut_family = [&](const CutFamily& f) {
      std::ofstream out(o.dump_cuts);
      write_cut_family(f, out);
    };
  if (!o.dump_family.empty())
    cfg.on_family = [&](const ContractingFamily& f) {
      std::ofstream out(o.dump_family);
      write_family(f, out);
    };

  const ApproxResult r = count_bis(g, cfg);
  if (o.verbose) {
    for (const auto& e : r.estimates)
      std::cerr << "estimate |A|=" << e.set_size << " s=" << e.cover_size << " m=" << e.samples << " hits=" << e.hits
                << " eps'=" << e.eps_prime << " rho=" << e.rho << '\n';
    if (!r.fallback_reason.empty()) std::cerr << "fallback: " << r.fallback_reason << '\n';
  }
  if (o.json) {
    std::cout << result_json(r, !o.no_timing).dump() << '\n';
  } else {
    std::cout << "estimate       " << to_decimal(r.estimate, 40) << '\n'
              << "log2 estimate  " << r.log2_estimate << '\n'
              << "method         " << method_name(r.method) << (r.fallback_reason.empty() ? "" : " (" + r.fallback_reason + ")")
              << '\n'
              << "epsilon        " << r.epsilon << '\n'
              << "t0             " << r.t0 << '\n'
              << "threshold rank " << r.threshold_rank << '\n'
              << "cut family     " << r.cut_family_size << '\n'
              << "family size    " << r.family_size << '\n'
              << "seed           " << r.seed << '\n';
    if (!o.no_timing)
      std::cout << "wall ms        " << std::chrono::duration<double, std::milli>(r.wall_time).count() << '\n';
  }
  return 0;
}

int run_gen(std::size_t n, std::size_t d, std::uint64_t seed, const std::string& out) {
  write_graph(generate_regular(n, d, seed), out);
  return 0;
}

int run_verify(const std::string& input, std::size_t t0) {
  const BipartiteGraph g = read_graph(input);
  bool ok = true;
  auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    ok = ok && pass;
  };
  auto skip = [](const std::string& name, const std::string& why) { std::cout << "SKIP " << name << ": " << why << '\n'; };

  std::optional<BigInt> count;
  if (g.n() <= kDefaultExactLimit) {
    count = oracle::exact_count(g);
    if (2 * g.n() <= 32) {
      const BigInt second = oracle::count_independent_sets(g);
      report("exact counters agree", *count == second, count->str() + " vs " + second.str());
    } else {
      skip("exact counters agree", "2n > 32");
    }
  } else {
    skip("exact counters agree", "n > " + std::to_string(kDefaultExactLimit));
  }

  const SpectralBasis basis = decompose(g);
  report("trace bound", basis.threshold_rank * g.d() <= 4 * g.n(),
         "k = " + std::to_string(basis.threshold_rank) + ", 4n/d = " + std::to_string(4.0 * g.n() / g.d()));
  const CutFamily cuts = build_cut_family(g, basis);

  if (2 * g.n() <= 16) {
    std::size_t failures = 0;
    const std::uint64_t total = std::uint64_t{1} << (2 * g.n());
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      VertexSet s(Part::V, 2 * g.n());
      for (std::size_t i = 0; i < 2 * g.n(); ++i)
        if ((bits >> i) & 1u) s.insert(i);
      const std::size_t t = std::max<std::size_t>(1, (cut_value(g, s) + g.d() - 1) / g.d());
      if (!find_covering_cut(g, cuts, s, t)) ++failures;
    }
    report("cut family covers every S", failures == 0, std::to_string(failures) + " uncovered of " + std::to_string(total));
  } else {
    skip("cut family covers every S", "2n > 16");
  }

  if (g.n() <= oracle::kFamilyLimit) {
    const ContractingFamily fam = build_family(g, cuts, t0);
    std::vector<VertexSet> built;
    for (const auto& a : fam.sets) built.push_back(a.set);
    const std::vector<VertexSet> expected = oracle::exact_family(g, t0);
    report("family matches brute force", built == expected,
           std::to_string(built.size()) + " vs " + std::to_string(expected.size()) + " sets");
    if (count) {
      const Rational sum = oracle::identity_sum(g, t0);
      report("identity sum equals i(G)", sum == Rational(*count), to_decimal(sum) + " vs " + count->str());
      const BigInt lower = oracle::truncated_sum(g, expected);
      report("truncated sum <= i(G)", lower <= *count, lower.str() + " <= " + count->str());
    }
  } else {
    skip("family matches brute force", "n > " + std::to_string(oracle::kFamilyLimit));
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count independent sets in regular bipartite graphs"};
  app.require_subcommand(1);

  CountOptions co;
  auto* count = app.add_subcommand("count", "Estimate the number of independent sets");
  count->add_option("--input", co.input, "Edge-list file")->required();
  count->add_option("--epsilon", co.epsilon, "Relative error (clamped to 1)");
  count->add_option("--seed", co.seed, "Random seed");
  count->add_option("--t0", co.t0, "Override the contraction threshold t0");
  count->add_option("--c-const", co.c_const, "Constant C in t0 = C ln(n/eps)");
  count->add_flag("--exact", co.exact, "Count exactly");
  count->add_flag("--json", co.json, "Emit JSON");
  count->add_flag("--force-fpras", co.force_fpras, "Run the approximation pipeline outside its valid regime");
  count->add_option("--brute-force-threshold", co.brute_threshold, "Count exactly when n is at most this");
  count->add_option("--threads", co.threads, "Sampler threads");
  count->add_flag("--no-timing", co.no_timing, "Report wall time as 0");
  count->add_option("--dump-cuts", co.dump_cuts, "Write the cut family, one cut per line");
  count->add_option("--dump-family", co.dump_family, "Write the contracting family, one set per line");
  count->add_option("--net-budget", co.budgets.net_points, "Maximum epsilon-net points");
  count->add_option("--family-budget", co.budgets.family_size, "Maximum contracting family size");
  count->add_option("--sample-budget", co.budgets.samples, "Maximum samples per component estimate");
  count->add_flag("-v,--verbose", co.verbose, "Log per-component estimates to stderr");

  std::size_t gn = 0, gd = 0;
  std::uint64_t gseed = 0;
  std::string gout;
  auto* gen = app.add_subcommand("gen", "Generate a random d-regular bipartite graph");
  gen->add_option("--n", gn, "Vertices per side")->required();
  gen->add_option("--d", gd, "Degree")->required();
  gen->add_option("--seed", gseed, "Random seed")->required();
  gen->add_option("--out", gout, "Output path")->required();

  std::string vin;
  std::size_t vt0 = 1;
  auto* verify = app.add_subcommand("verify", "Cross-check the pipeline against brute-force oracles");
  verify->add_option("--input", vin, "Edge-list file")->required();
  verify->add_option("--t0", vt0, "Contraction threshold t0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*count) return run_count(co);
    if (*gen) return run_gen(gn, gd, gseed, gout);
    if (*verify) return run_verify(vin, vt0);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
