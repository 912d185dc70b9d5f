#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "lkcds/closure.hpp"
#include "lkcds/core.hpp"
#include "lkcds/domset.hpp"
#include "lkcds/hardness.hpp"
#include "lkcds/kernel_io.hpp"
#include "lkcds/oracles.hpp"
#include "lkcds/order.hpp"
#include "lkcds/pipeline.hpp"
#include "lkcds/projections.hpp"

namespace lkcds::cli {

namespace {

constexpr std::uint64_t kDefaultBudget = 50'000'000;

std::string csv_header(const std::string& command, const std::string& columns) {
  return "# lkcds " + command + " csv v1\n" + columns + '\n';
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// "0 1 2", "0,1,2" or "@file"
VertexSet parse_ids(const std::string& arg) {
  std::string text = !arg.empty() && arg.front() == '@' ? slurp(arg.substr(1)) : arg;
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::vector<Vertex> ids;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw ParseError(1, "bad vertex id '" + tok + "'");
    ids.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(ids));
}

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

Graph load_graph(const RunConfig& cfg) { return read_graph_file(cfg.input, parse_format_name(cfg.format)); }

SearchBudget budget(const RunConfig& cfg) {
  SearchBudget b;
  b.max_nodes = cfg.budget_nodes;
  return b;
}

KernelParams params(const RunConfig& cfg) {
  return KernelParams::make(cfg.k, cfg.r, parse_rational(cfg.alpha), parse_rational(cfg.epsilon));
}

std::string field(const Fields& fields, const std::string& key) {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  return {};
}

int report_solve(const SolveResult& res) {
  std::cout << "status " << to_string(res.status) << '\n';
  if (res.value) std::cout << "value " << *res.value << '\n';
  if (res.solution) std::cout << "solution " << join(*res.solution) << '\n';
  std::cout << "nodes " << res.nodes << '\n';
  return res.status == SolveResult::Status::exhausted ? kBudget : kOk;
}

DominationCore connected_core_of(const Graph& g, const RunConfig& cfg, std::string& reject) {
  auto core = find_core(g, cfg.k, cfg.r, parse_core_mode(cfg.core_mode), budget(cfg));
  if (auto* rej = std::get_if<Reject>(&core)) {
    reject = rej->reason;
    return {};
  }
  auto connected = connected_core(g, std::get<DominationCore>(core));
  if (auto* rej = std::get_if<Reject>(&connected)) {
    reject = rej->reason;
    return {};
  }
  return std::get<DominationCore>(connected);
}

// --- commands ---------------------------------------------------------------

int cmd_kernelize(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto p = params(cfg);
  auto out = pre_kernel(g, p, parse_core_mode(cfg.core_mode), budget(cfg));
  if (auto* rej = std::get_if<Reject>(&out)) {
    std::cerr << "reject: " << rej->reason << '\n';
    return kRejected;
  }
  const auto& inst = std::get<KernelInstance>(out);
  emit(cfg.out, serialize_kernel(inst));

  std::ostringstream row;
  row << g.order() << ',' << g.num_edges() << ',' << p.k << ',' << p.r << ',' << to_string(p.alpha) << ','
      << to_string(p.t_eff) << ',' << field(inst.provenance, "route") << ',' << inst.z.size() << ','
      << inst.gprime.order() << ',' << inst.gprime.num_edges() << '\n';
  const auto stats = csv_header("kernelize", "n,m,k,r,alpha,t_eff,route,z_size,gprime_order,gprime_edges") + row.str();
  if (cfg.stats.empty())
    std::cerr << stats;
  else
    emit(cfg.stats, stats);
  return kOk;
}

int cmd_solve(const RunConfig& cfg) {
  const std::string problem = cfg.connected ? "cds" : cfg.problem;
  if (problem == "setcover") {
    auto inst = read_setcover_file(cfg.input);
    if (cfg.cap > 0) inst.k = cfg.cap;
    return report_solve(exact_setcover(inst, budget(cfg)));
  }
  if (problem == "kernel") {
    const auto inst = read_kernel_file(cfg.input);
    const int cap = cfg.cap > 0 ? cfg.cap : static_cast<int>(inst.gprime.order());
    if (inst.problem == KernelProblem::acds) return report_solve(exact_acds(inst.gprime, inst.z, inst.r, cap, budget(cfg)));
    return report_solve(exact_ds_targets(inst.gprime, inst.r, inst.z, cap, budget(cfg)));
  }
  const auto g = load_graph(cfg);
  const int cap = cfg.cap > 0 ? cfg.cap : static_cast<int>(g.order());
  if (problem == "cds") return report_solve(exact_cds(g, cfg.r, cap, budget(cfg)));
  return report_solve(exact_ds(g, cfg.r, cap, budget(cfg)));
}

int cmd_lift(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto inst = read_kernel_file(cfg.kernel);
  const auto d = parse_ids(cfg.solution);
  try {
    const auto image = inst.problem == KernelProblem::acds ? lift(g, inst, d) : lift_ds(g, inst, d);
    emit(cfg.out, join(image) + '\n');
  } catch (const ContractError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto inst = read_kernel_file(cfg.kernel);
  bool failed = false, open = false;
  auto line = [&](const std::string& check, const std::string& verdict, const std::string& detail = {}) {
    failed = failed || verdict == "fail";
    open = open || verdict == "undetermined";
    std::cout << check << ' ' << verdict << (detail.empty() ? "" : " " + detail) << '\n';
  };

  const auto witness = inst.witness();
  if (!witness.certifies(inst.gprime, g)) {
    line("map", "fail", "gprime does not embed into the input graph");
    return kVerifyFailed;
  }
  line("map", "pass");
  const VertexSet z_host = witness.to_host(inst.z);
  const std::string route = field(inst.provenance, "route");

  if (route == "exact-shortcut") {
    line("core", "skipped", "shortcut instance");
  } else {
    try {
      const bool ok = core_verify(g, z_host, inst.k, inst.r, budget(cfg));
      line("core", ok ? "pass" : "fail");
    } catch (const BudgetError&) {
      line("core", "undetermined", "budget");
    }
  }

  if (inst.problem == KernelProblem::acds && route == "closure") {
    const auto t = parse_rational(field(inst.params, "t_eff"));
    const auto rep = verify_closure(g, z_host, inst.r, t, inst.gprime, witness);
    line("closure", rep.ok() ? "pass" : "fail", rep.failures.empty() ? "" : rep.failures.front());
  } else {
    line("closure", "skipped");
  }

  const int k = inst.k;
  if (inst.problem == KernelProblem::ads) {
    const auto kern = exact_ds_targets(inst.gprime, inst.r, inst.z, k, budget(cfg));
    const auto orig = exact_ds(g, inst.r, k, budget(cfg));
    if (kern.status == SolveResult::Status::exhausted || orig.status == SolveResult::Status::exhausted)
      line("optimum", "undetermined", "budget");
    else
      line("optimum", capped_value(kern, k) == capped_value(orig, k) ? "pass" : "fail");
    if (!cfg.solution.empty()) {
      try {
        lift_ds(g, inst, parse_ids(cfg.solution));
        line("lift", "pass");
      } catch (const ContractError& e) {
        line("lift", "fail", e.what());
      }
    }
  } else {
    std::optional<VertexSet> d;
    if (!cfg.solution.empty()) {
      d = parse_ids(cfg.solution);
    } else {
      const auto opt = exact_acds(inst.gprime, inst.z, inst.r, k, budget(cfg));
      if (opt.found()) d = *opt.solution;
      if (opt.status == SolveResult::Status::exhausted) line("ratio", "undetermined", "budget");
    }
    if (d) {
      const auto p = KernelParams::make(k, inst.r, parse_rational(field(inst.params, "alpha")));
      const auto cert = ratio_check(g, inst, *d, p, budget(cfg));
      if (!cert.ratio_ok)
        line("ratio", "undetermined", "budget");
      else
        line("ratio", *cert.ratio_ok ? "pass" : "fail",
             "lifted=" + std::to_string(cert.lifted_value) + " kernel=" + std::to_string(cert.kernel_value));
      if (cert.opt_bound_ok) line("opt-bound", *cert.opt_bound_ok ? "pass" : "fail");
      if (!cfg.solution.empty()) line("solution", cert.solution_valid ? "pass" : "fail");
    } else if (!open) {
      line("ratio", "skipped", "no kernel solution of size <= k");
    }
  }
  return failed ? kVerifyFailed : open ? kBudget : kOk;
}

int cmd_gen(const RunConfig& cfg) {
  if (cfg.out.empty() || cfg.out == "-") throw DomainError("gen needs --out <prefix>");
  const auto inst = read_setcover_file(cfg.input);
  const auto h = generate(inst, cfg.r);
  emit(cfg.out + ".graph", serialize_graph(h.g));
  emit(cfg.out + ".pre.graph", serialize_graph(h.pre_graph));
  emit(cfg.out + ".roles", serialize_roles(h));
  std::ostringstream meta;
  meta << "r " << h.r << "\nk_in " << inst.k << "\nk_out " << h.k_out << "\noffset " << h.offset << '\n';
  emit(cfg.out + ".meta", meta.str());
  std::cout << "n " << h.g.order() << "\nk_out " << h.k_out << '\n';
  return kOk;
}

int cmd_core(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  auto out = find_core(g, cfg.k, cfg.r, parse_core_mode(cfg.core_mode), budget(cfg));
  if (auto* rej = std::get_if<Reject>(&out)) {
    std::cerr << "reject: " << rej->reason << '\n';
    return kRejected;
  }
  const auto& core = std::get<DominationCore>(out);
  std::cout << "Z " << join(core.z) << "\ncertification " << to_string(core.certified) << '\n';
  return kOk;
}

int cmd_profile_stats(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  VertexSet x;
  if (!cfg.x.empty()) {
    x = parse_ids(cfg.x);
  } else {
    std::string reject;
    x = connected_core_of(g, cfg, reject).z;
    if (!reject.empty()) {
      std::cerr << "reject: " << reject << '\n';
      return kRejected;
    }
  }
  for (Vertex v : x)
    if (!g.valid(v)) throw DomainError("vertex " + std::to_string(v) + " outside the graph");
  const auto pc = classify(g, x, cfg.r);
  std::string text = csv_header("profile-stats", "class,size,finite_entries");
  for (std::size_t c = 0; c < pc.num_classes(); ++c)
    text += std::to_string(c) + ',' + std::to_string(pc.members[c].size()) + ',' +
            std::to_string(pc.profiles[c].entries.size()) + '\n';
  emit(cfg.out, text);
  return kOk;
}

int cmd_wcol_report(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const int smax = cfg.s > 0 ? cfg.s : 2 * cfg.r;
  const std::vector<std::pair<std::string, OrderStrategy>> strategies{
      {"min-degree", MinDegree{}}, {"bfs", BfsOrder{}}, {"random", RandomOrder{cfg.seed}}};
  std::string text = csv_header("wcol-report", "strategy,s,max_size,mean_size");
  for (const auto& [name, strategy] : strategies) {
    const auto og = heuristic_order(g, strategy);
    for (int s = 1; s <= smax; ++s) {
      const auto& rep = og.wreach(s);
      std::ostringstream row;
      row << name << ',' << s << ',' << rep.max_size << ',' << rep.mean_size << '\n';
      text += row.str();
    }
  }
  emit(cfg.out, text);
  return kOk;
}

int cmd_closure_stats(const RunConfig& cfg) {
  const auto g = load_graph(cfg);
  const auto p = params(cfg);
  std::string reject;
  const auto core = connected_core_of(g, cfg, reject);
  if (!reject.empty()) {
    std::cerr << "reject: " << reject << '\n';
    return kRejected;
  }
  const auto res = build_closure(g, core.z, cfg.r, p.t_eff);
  const auto& st = res.stats;
  std::string text = csv_header("closure-stats", "x_size,classes,enumerated,kept,gprime_order,gprime_edges");
  text += std::to_string(st.x_size) + ',' + std::to_string(st.classes) + ',' + std::to_string(st.enumerated) + ',' +
          std::to_string(st.kept) + ',' + std::to_string(st.gprime_order) + ',' + std::to_string(st.gprime_edges) + '\n';
  emit(cfg.out, text);
  return kOk;
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::string list = text;
  std::replace(list.begin(), list.end(), ',', ' ');
  std::istringstream in(list);
  std::string tok;
  while (in >> tok) {
    const auto x = tok.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument(tok);
      out.emplace_back(std::stoi(tok.substr(0, x)), std::stoi(tok.substr(x + 1)));
    } catch (const std::exception&) {
      throw ParseError(1, "size must look like <universe>x<sets>, got '" + tok + "'");
    }
  }
  return out;
}

int cmd_sweep(const RunConfig& cfg) {
  const auto batch = family_sweep(parse_sizes(cfg.sizes), cfg.r, cfg.seed);
  const auto mode = parse_core_mode(cfg.core_mode);
  const auto alpha = parse_rational(cfg.alpha);
  std::vector<std::string> rows(batch.size());

  // each worker takes the next unclaimed instance; rows keep batch order
  std::size_t next = 0;
  std::mutex lock;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::scoped_lock guard(lock);
        if (next == batch.size()) return;
        i = next++;
      }
      const auto& h = batch[i];
      std::string outcome = "kernel", order = "";
      try {
        auto out = pre_kernel(h.g, KernelParams::make(h.k_out, h.r, alpha), mode, budget(cfg));
        if (std::holds_alternative<Reject>(out))
          outcome = "reject";
        else
          order = std::to_string(std::get<KernelInstance>(out).gprime.order());
      } catch (const BudgetError&) {
        outcome = "budget";
      }
      std::ostringstream row;
      row << i << ',' << h.source.universe_size << ',' << h.source.sets.size() << ',' << h.source.k << ','
          << h.k_out << ',' << h.g.order() << ',' << h.g.num_edges() << ',' << outcome << ',' << order << '\n';
      rows[i] = row.str();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < std::max(1u, cfg.jobs); ++j) pool.emplace_back(worker);
  }

  std::string text = csv_header("sweep", "index,universe,sets,k_in,k_out,n,m,outcome,gprime_order");
  for (const auto& row : rows) text += row;
  emit(cfg.out, text);
  return kOk;
}

// --- option wiring ------------------------------------------------------------

void graph_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input,-i", cfg.input, "graph file")->required();
  sub->add_option("--format", cfg.format, "input graph format")->check(CLI::IsMember({"edgelist", "dimacs"}));
}

void search_opts(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--budget-nodes", cfg.budget_nodes, "node limit for exact searches")
      ->envname("LKCDS_BUDGET_NODES")
      ->check(CLI::PositiveNumber);
  sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "random seed");
}

void kernel_opts(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--k", cfg.k, "solution size parameter")->check(CLI::PositiveNumber);
  sub->add_option("--r", cfg.r, "domination radius")->check(CLI::PositiveNumber);
  sub->add_option("--alpha", cfg.alpha, "approximation factor, e.g. 7 or 13/2");
  sub->add_option("--epsilon", cfg.epsilon, "recorded only");
  sub->add_option("--core-mode,--mode", cfg.core_mode, "core finder")
      ->check(CLI::IsMember({"exact", "heuristic", "trivial"}));
}

}  // namespace

void register_commands(CLI::App& app, RunConfig& cfg, std::function<int()>& run) {
  cfg.budget_nodes = kDefaultBudget;
  auto bind = [&](CLI::App* sub, int (*fn)(const RunConfig&)) {
    sub->callback([&run, &cfg, fn] { run = [&cfg, fn] { return fn(cfg); }; });
  };

  auto* kernelize = app.add_subcommand("kernelize", "reduce a graph to an annotated kernel instance");
  graph_input(kernelize, cfg);
  kernel_opts(kernelize, cfg);
  search_opts(kernelize, cfg);
  kernelize->add_option("--out,-o", cfg.out, "instance file (default stdout)");
  kernelize->add_option("--stats", cfg.stats, "stats CSV file (default stderr)");
  bind(kernelize, cmd_kernelize);

  auto* solve = app.add_subcommand("solve", "exact reference solvers");
  solve->add_option("--input,-i", cfg.input, "graph, set cover or kernel file")->required();
  solve->add_option("--format", cfg.format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  solve->add_option("--problem", cfg.problem)->check(CLI::IsMember({"ds", "cds", "setcover", "kernel"}));
  solve->add_flag("--connected", cfg.connected, "same as --problem cds");
  solve->add_option("--r", cfg.r)->check(CLI::PositiveNumber);
  solve->add_option("--cap", cfg.cap, "largest solution size searched (default: everything)")->check(CLI::PositiveNumber);
  search_opts(solve, cfg);
  bind(solve, cmd_solve);

  auto* lift_cmd = app.add_subcommand("lift", "map a kernel solution back to the input graph");
  graph_input(lift_cmd, cfg);
  lift_cmd->add_option("--kernel", cfg.kernel, "instance file")->required();
  lift_cmd->add_option("--solution", cfg.solution, "kernel ids, comma separated or @file")->required();
  lift_cmd->add_option("--out,-o", cfg.out);
  bind(lift_cmd, cmd_lift);

  auto* verify = app.add_subcommand("verify", "check a kernel instance against its input graph");
  graph_input(verify, cfg);
  verify->add_option("--kernel", cfg.kernel, "instance file")->required();
  verify->add_option("--solution", cfg.solution, "kernel solution to certify (default: kernel optimum)");
  search_opts(verify, cfg);
  bind(verify, cmd_verify);

  auto* gen = app.add_subcommand("gen", "subdivided domination instance from set cover");
  gen->add_option("--input,-i", cfg.input, "set cover file")->required();
  gen->add_option("--r", cfg.r)->check(CLI::PositiveNumber);
  gen->add_option("--out,-o", cfg.out, "output prefix")->required();
  bind(gen, cmd_gen);

  auto* core = app.add_subcommand("core", "domination core");
  graph_input(core, cfg);
  kernel_opts(core, cfg);
  search_opts(core, cfg);
  bind(core, cmd_core);

  auto* profiles = app.add_subcommand("profile-stats", "projection classes around a vertex set");
  graph_input(profiles, cfg);
  kernel_opts(profiles, cfg);
  search_opts(profiles, cfg);
  profiles->add_option("--x", cfg.x, "core vertices (default: connected core)");
  profiles->add_option("--out,-o", cfg.out);
  bind(profiles, cmd_profile_stats);

  auto* wcol = app.add_subcommand("wcol-report", "weak reachability under heuristic orders");
  graph_input(wcol, cfg);
  wcol->add_option("--r", cfg.r)->check(CLI::PositiveNumber);
  wcol->add_option("--s", cfg.s, "largest radius (default 2r)")->check(CLI::PositiveNumber);
  wcol->add_option("--seed", cfg.seed);
  wcol->add_option("--out,-o", cfg.out);
  bind(wcol, cmd_wcol_report);

  auto* closure = app.add_subcommand("closure-stats", "closure sizes around the connected core");
  graph_input(closure, cfg);
  kernel_opts(closure, cfg);
  search_opts(closure, cfg);
  closure->add_option("--out,-o", cfg.out);
  bind(closure, cmd_closure_stats);

  auto* sweep = app.add_subcommand("sweep", "kernelize random set cover reductions");
  sweep->add_option("--sizes", cfg.sizes, "universe x sets, e.g. 4x4,6x6");
  kernel_opts(sweep, cfg);
  search_opts(sweep, cfg);
  sweep->add_option("--out,-o", cfg.out);
  bind(sweep, cmd_sweep);
}

}  // namespace lkcds::cli
