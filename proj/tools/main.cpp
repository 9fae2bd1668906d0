#include "orbitstar/bgs.hpp"
#include "orbitstar/exceptional.hpp"
#include "orbitstar/joseph.hpp"
#include "orbitstar/orbit.hpp"
#include "orbitstar/star.hpp"
#include "orbitstar/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

using namespace orbitstar;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::optional<int> n;
  std::optional<int> N;
  std::optional<unsigned> p;
  std::string l;
  std::optional<std::string> D;
  std::uint64_t seed = 1;
  int max_rank = 4;
  bool json = false;
  bool timing = false;
};

int need_n(const Options& o) {
  if (!o.n) throw UsageError("--n is required for family " + o.family);
  return *o.n;
}

Rational parse_rational(const std::string& s, const char* flag) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + flag + " value '" + s + "'");
  }
}

bool classical(const std::string& f) { return f == "sl" || f == "so" || f == "sp"; }

Report cmd_solve(const Options& o) {
  if (is_exceptional_name(o.family)) {
    std::optional<Rational> D;
    if (o.D) D = parse_rational(*o.D, "--D");
    return exceptional_suite(o.family, D);
  }
  if (!classical(o.family)) throw UsageError("solve: --family must be sl, so, sp, G2, F4, E6, E7 or E8");
  return solve_suite(o.family, need_n(o));
}

Report cmd_so3(const Options& o) {
  if (o.l.empty()) throw UsageError("--l is required");
  Rational l = parse_rational(o.l, "--l");
  Rational two_l = l * Rational(2);
  if (!two_l.is_integer() || two_l <= Rational(0)) throw UsageError("--l must be a positive half-integer");
  return so3_suite(l);
}

Report cmd_generators(const Options& o) {
  Report r;
  std::vector<IdealGenerator> gens;
  if (is_exceptional_name(o.family)) {
    ExceptionalSpec s = exceptional_spec(o.family);
    if (o.D) s.D = parse_rational(*o.D, "--D");
    gens = ideal_generators(s, solve_exceptional(s).solution);
  } else if (o.family == "sl" || o.family == "so") {
    StarProduct P(solve_family(o.family, need_n(o)));
    gens = ideal_generators(P);
  } else {
    throw UsageError("joseph generators: --family must be sl, so or exceptional");
  }
  std::vector<std::string> listing;
  std::size_t bad = 0;
  std::string witness;
  for (auto& g : gens) {
    listing.push_back(g.name + " = " + g.rhs.str());
    if (!g.verified && !bad++) witness = g.name + ": " + (g.lhs - g.rhs).str();
  }
  r.list("generators", listing);
  r.records.push_back({"joseph.generators", "generators of the Joseph ideal hold in the deformed algebra",
                       bad == 0 && !gens.empty(), witness, std::to_string(gens.size()) + " generators"});
  return r;
}

Report cmd_hw(const Options& o) {
  if (o.family != "sl" && o.family != "so") throw UsageError("joseph hw: --family must be sl or so");
  return weights_suite(o.family, need_n(o));
}

Report cmd_repcheck(const Options& o) {
  if (!o.n || !o.N) throw UsageError("joseph repcheck needs --n and --N");
  return repcheck_suite(*o.n, *o.N);
}

OrbitSpec orbit_spec(const Options& o) {
  if (o.family == "cone") return simple_cone(need_n(o));
  if (o.family == "so3" || o.family == "so21") return minimal_orbit(o.family, 3);
  if (!classical(o.family)) throw UsageError("orbit: --family must be sl, so, sp, so3, so21 or cone");
  return minimal_orbit(o.family, need_n(o));
}

Report cmd_relations(const Options& o) {
  OrbitSpec s = orbit_spec(o);
  Report r;
  std::vector<std::string> rel;
  for (auto& g : s.relations) rel.push_back(g.str());
  r.list("relations", rel);
  r.value("count", std::to_string(s.relations.size()));
  OracleOptions opt;
  opt.seed = o.seed;
  std::size_t bad = 0;
  std::string witness;
  for (auto& g : s.relations)
    if (!vanishes_on_orbit(s, g, opt) && !bad++) witness = g.str();
  r.records.push_back({"relations.vanish", "every quadratic relation vanishes on the orbit", bad == 0, witness, ""});
  return r;
}

Report cmd_chains(const Options& o) {
  if (!o.p) throw UsageError("--p is required");
  OrbitSpec s = orbit_spec(o);
  ChainSpace cs = closed_linear_chains(s, *o.p);
  Report r;
  r.value("kernel_dim", std::to_string(cs.kernel_dim));
  OracleOptions opt;
  opt.seed = o.seed;
  std::size_t total = 0, closed = 0, sectored = 0;
  for (auto& sec : cs.sectors) {
    std::string key = "sector(" + std::to_string(cs.p) + "," + std::to_string(sec.k) + ")";
    std::vector<std::string> chains;
    for (auto& c : sec.basis) {
      chains.push_back(c.str());
      ++total;
      closed += chain_is_closed(s, c, opt);
      sectored += perm_act(garsia(cs.p, sec.k), c) == c;
    }
    r.list(key, chains);
    r.value(key + ".dim", std::to_string(sec.basis.size()));
  }
  r.check("chains.closed", "basis chains are closed modulo the orbit ideal", closed == total,
          std::to_string(closed) + "/" + std::to_string(total));
  r.check("chains.sectors", "each basis chain is fixed by its Eulerian idempotent", sectored == total);
  r.check("chains.dimension", "sector dimensions add up to the closed-chain space", total == cs.kernel_dim);
  return r;
}

Report cmd_bgs_table(const Options& o) {
  int n = o.n ? *o.n : -1;
  if (n < 1 || n > 7) throw UsageError("bgs table needs --n between 1 and 7");
  Report r = bgs_suite(static_cast<unsigned>(n), 0, o.seed);
  const auto& e = garsia_idempotents(static_cast<unsigned>(n));
  for (std::size_t k = 0; k < e.size(); ++k) {
    std::vector<std::string> terms;
    for (auto& [perm, c] : e[k].terms()) terms.push_back(perm.word() + ": " + c.str());
    r.list("e_" + std::to_string(n) + "(" + std::to_string(k + 1) + ")", terms);
  }
  return r;
}

Report cmd_verify_all(const Options& o) {
  if (o.max_rank < 1) throw UsageError("--max-rank must be positive");
  return verify_all({o.max_rank, o.seed});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitstar: exact deformation quantization of minimal orbits"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "emit the report as JSON");
    c->add_flag("--timing", o.timing, "include wall-clock timing in the report");
    c->add_option("--seed", o.seed, "seed for randomized checks");
  };
  std::function<Report()> run;

  auto* solve = app.add_subcommand("solve", "solve the star-product constraint system");
  solve->add_option("--family", o.family)->required();
  solve->add_option("--n", o.n);
  solve->add_option("--D", o.D, "override the adjoint dimension for exceptional rows");
  common(solve);
  solve->callback([&] { run = [&] { return cmd_solve(o); }; });

  auto* so3 = app.add_subcommand("so3", "finite quotients of the so(3) star algebra");
  so3->add_option("--l", o.l, "spin as a half-integer, e.g. 3/2");
  common(so3);
  so3->callback([&] { run = [&] { return cmd_so3(o); }; });

  auto* joseph = app.add_subcommand("joseph", "Joseph ideal, highest weights and representations");
  joseph->require_subcommand(1);
  auto* gens = joseph->add_subcommand("generators");
  gens->add_option("--family", o.family)->required();
  gens->add_option("--n", o.n);
  gens->add_option("--D", o.D);
  common(gens);
  gens->callback([&] { run = [&] { return cmd_generators(o); }; });
  auto* hw = joseph->add_subcommand("hw");
  hw->add_option("--family", o.family)->required();
  hw->add_option("--n", o.n);
  common(hw);
  hw->callback([&] { run = [&] { return cmd_hw(o); }; });
  auto* rep = joseph->add_subcommand("repcheck");
  rep->add_option("--n", o.n);
  rep->add_option("--N", o.N);
  common(rep);
  rep->callback([&] { run = [&] { return cmd_repcheck(o); }; });

  auto* orbit = app.add_subcommand("orbit", "minimal orbit relations and closed chains");
  orbit->require_subcommand(1);
  auto* rel = orbit->add_subcommand("relations");
  rel->add_option("--family", o.family)->required();
  rel->add_option("--n", o.n);
  common(rel);
  rel->callback([&] { run = [&] { return cmd_relations(o); }; });
  auto* chains = orbit->add_subcommand("chains");
  chains->add_option("--family", o.family)->required();
  chains->add_option("--n", o.n);
  chains->add_option("--p", o.p);
  common(chains);
  chains->callback([&] { run = [&] { return cmd_chains(o); }; });

  auto* bgs = app.add_subcommand("bgs", "Eulerian idempotents");
  bgs->require_subcommand(1);
  auto* table = bgs->add_subcommand("table");
  table->add_option("--n", o.n);
  common(table);
  table->callback([&] { run = [&] { return cmd_bgs_table(o); }; });

  auto* all = app.add_subcommand("verify-all", "run every verification suite");
  all->add_option("--max-rank", o.max_rank);
  common(all);
  all->callback([&] { run = [&] { return cmd_verify_all(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command = "orbitstar";
  for (int i = 1; i < argc; ++i) command += std::string(" ") + argv[i];
  Report report;
  auto t0 = std::chrono::steady_clock::now();
  try {
    report = run();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  report.command = command;
  if (o.timing)
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (o.json)
    std::cout << report.to_json() << "\n";
  else
    std::cout << report.table();
  return report.exit_code();
}
