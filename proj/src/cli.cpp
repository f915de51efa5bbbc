#include "pathres/cli.hpp"

#include "pathres/config.hpp"
#include "pathres/error.hpp"
#include "pathres/network.hpp"
#include "pathres/paths.hpp"
#include "pathres/report.hpp"
#include "pathres/resilience.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace pathres {

namespace {

struct LoadedNetwork {
  Network net;
  std::string name;
};

LoadedNetwork load_network(const std::string& path, std::ostream& err) {
  const std::string text = read_file(path);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw IoError("'" + path + "' is empty");
  ParseResult parsed = parse_edge_list(text);
  for (const auto& w : parsed.report.warnings)
    err << "warning: " << path << ":" << w.line << ": " << w.message << '\n';
  if (!parsed.report.ok()) {
    for (const auto& e : parsed.report.errors)
      err << "error: " << path << ":" << e.line << ": " << e.message << '\n';
    throw ValidationError("'" + path + "' has " + std::to_string(parsed.report.errors.size()) + " error(s)");
  }
  return {std::move(*parsed.network), std::filesystem::path(path).stem().string()};
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0)
    return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::size_t require_kbar(const PathStats& stats) {
  if (stats.k_bar == 0)
    throw ValidationError("network has no paths (kbar = 0)");
  return stats.k_bar;
}

struct Options {
  std::string edges;
  // paths
  std::optional<std::size_t> max_k;
  bool by_start = false;
  // mu / sweep
  std::optional<std::string> gamma;
  std::optional<std::string> theta;
  double xi = 0.0;
  double delta = 0.0;
  std::optional<std::string> strategy;
  std::optional<std::string> config;
  std::optional<std::string> xi_grid;
  std::optional<std::string> delta_grid;
  std::string out_csv;
  std::optional<std::string> out_json;
  std::optional<std::string> out_svg;
  bool per_k = false;
  unsigned threads = 0;
  // extract
  std::string nodes;
  std::string out_edges;
};

int cmd_info(const Options& o, std::ostream& out, std::ostream& err) {
  const auto loaded = load_network(o.edges, err);
  const PathStats stats = path_stats(loaded.net, resolve_threads(o.threads));
  out << info_line(loaded.net, stats) << '\n';
  return kExitOk;
}

int cmd_paths(const Options& o, std::ostream& out, std::ostream& err) {
  const auto loaded = load_network(o.edges, err);
  const Network& net = loaded.net;
  PathStats stats;
  if (o.max_k) {
    std::vector<std::vector<std::uint64_t>> by_start(net.node_count());
    stats = enumerate_paths(net, o.max_k, [&](const PathView& p) {
      auto& row = by_start[p.nodes.front()];
      if (row.size() < p.length())
        row.resize(p.length(), 0);
      ++row[p.length() - 1];
      return Visit::proceed;
    });
    for (auto& row : by_start)
      row.resize(stats.k_bar, 0);
    stats.counts_by_start = std::move(by_start);
  } else {
    stats = path_stats(net, resolve_threads(o.threads));
  }

  out << "kbar=" << stats.k_bar;
  if (stats.capped)
    out << " (capped at max-k " << *o.max_k << "; longer paths exist)";
  out << '\n';
  out << "k,count\n";
  for (std::size_t k = 1; k <= stats.counts_by_length.size(); ++k)
    out << k << ',' << stats.counts_by_length[k - 1] << '\n';
  if (o.by_start) {
    out << "start";
    for (std::size_t k = 1; k <= stats.k_bar; ++k)
      out << ",k" << k;
    out << '\n';
    for (NodeId i = 0; i < net.node_count(); ++i) {
      out << net.label(i);
      for (std::size_t k = 0; k < stats.k_bar; ++k)
        out << ',' << stats.counts_by_start[i][k];
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_mu(const Options& o, std::ostream& out, std::ostream& err) {
  const PcStrategy strategy = require_strategy(o.strategy.value_or("pre-traversal"));
  const Shock shock{o.xi, o.delta};
  validate(shock);
  const auto loaded = load_network(o.edges, err);
  const unsigned threads = resolve_threads(o.threads);
  const std::size_t k_bar = require_kbar(path_stats(loaded.net, threads));
  const PcVector gamma = resolve_gamma(*o.gamma, k_bar);
  const ThetaVector theta = resolve_theta(*o.theta, k_bar);
  const PcCensus census = pc_census(loaded.net, gamma, shock, strategy, threads);
  out << format_mu(mu(census, theta)) << '\n';
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  if (o.config)
    cfg = load_config_file(*o.config, cfg);
  if (o.gamma)
    cfg.gamma = *o.gamma;
  if (o.theta)
    cfg.theta = *o.theta;
  if (o.xi_grid)
    cfg.xi_grid = parse_grid(*o.xi_grid);
  if (o.delta_grid)
    cfg.delta_grid = parse_grid(*o.delta_grid);
  if (o.strategy)
    cfg.strategy = require_strategy(*o.strategy);
  if (o.per_k)
    cfg.emit_per_k = true;

  const auto loaded = load_network(o.edges, err);
  const unsigned threads = resolve_threads(o.threads);
  const std::size_t k_bar = require_kbar(path_stats(loaded.net, threads));
  const PcVector gamma = resolve_gamma(cfg.gamma, k_bar);
  const ThetaVector theta = resolve_theta(cfg.theta, k_bar);

  const Surface surface =
      sweep(loaded.net, gamma, theta, cfg.xi_grid, cfg.delta_grid, cfg.strategy, {threads, loaded.name});

  write_file(o.out_csv, surface_csv(surface));
  if (o.out_json)
    write_file(*o.out_json, surface_to_json(surface, cfg.emit_per_k).dump(2) + "\n");
  if (o.out_svg)
    write_file(*o.out_svg, surface_svg(surface));

  out << "kbar=" << k_bar << " cells=" << surface.mu.size() << " -> " << o.out_csv << '\n';
  const auto critical = critical_xi(surface);
  for (std::size_t d = 0; d < surface.rows(); ++d) {
    out << "delta=" << format_real(surface.delta_grid[d]) << " critical_xi=";
    if (critical[d])
      out << format_real(*critical[d]);
    else
      out << "none";
    out << '\n';
  }
  return kExitOk;
}

int cmd_extract(const Options& o, std::ostream& out, std::ostream& err) {
  const auto loaded = load_network(o.edges, err);
  const auto keep = parse_node_set(read_file(o.nodes));
  const SubnetworkResult sub = subnetwork(loaded.net, keep);
  for (const auto& label : sub.unknown_labels)
    err << "warning: unknown node '" << label << "'\n";
  write_file(o.out_edges, to_edge_list(sub.network));
  out << "nodes=" << sub.network.node_count() << " arcs=" << sub.network.arc_count() << " -> " << o.out_edges
      << '\n';
  return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path-based shock-propagation resilience of weighted directed networks", "pathres"};
  app.require_subcommand(1);
  Options o;

  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Enumeration worker threads (0 = hardware concurrency)");
  };

  auto* info = app.add_subcommand("info", "Print node, arc and path counts");
  info->add_option("edges", o.edges, "Edge-list file")->required();
  add_threads(info);

  auto* paths = app.add_subcommand("paths", "Print the simple-path census");
  paths->add_option("edges", o.edges, "Edge-list file")->required();
  paths->add_option("--max-k", o.max_k, "Longest path length to enumerate")->check(CLI::PositiveNumber);
  paths->add_flag("--by-start", o.by_start, "Also print counts per start node");
  add_threads(paths);

  auto* mu_cmd = app.add_subcommand("mu", "Resilience measure for one (xi, delta)");
  mu_cmd->add_option("edges", o.edges, "Edge-list file")->required();
  mu_cmd->add_option("--gamma", o.gamma, "gamma1|gamma2|gamma3 or explicit list")->required();
  mu_cmd->add_option("--theta", o.theta, "theta1|theta2|theta3 or explicit list")->required();
  mu_cmd->add_option("--xi", o.xi, "Shock size")->required();
  mu_cmd->add_option("--delta", o.delta, "Discount factor")->required();
  mu_cmd->add_option("--strategy", o.strategy, "pre-traversal|post-arrival|literal");
  add_threads(mu_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Resilience surface over the (xi, delta) grid");
  sweep_cmd->add_option("edges", o.edges, "Edge-list file")->required();
  sweep_cmd->add_option("--config", o.config, "JSON config file");
  sweep_cmd->add_option("--gamma", o.gamma, "gamma1|gamma2|gamma3 or explicit list");
  sweep_cmd->add_option("--theta", o.theta, "theta1|theta2|theta3 or explicit list");
  sweep_cmd->add_option("--xi-grid", o.xi_grid, "List or start:stop:step");
  sweep_cmd->add_option("--delta-grid", o.delta_grid, "List or start:stop:step");
  sweep_cmd->add_option("--strategy", o.strategy, "pre-traversal|post-arrival|literal");
  sweep_cmd->add_option("-o,--output", o.out_csv, "Surface CSV")->required();
  sweep_cmd->add_option("--json", o.out_json, "Surface JSON with metadata");
  sweep_cmd->add_option("--svg", o.out_svg, "Surface heatmap");
  sweep_cmd->add_flag("--per-k", o.per_k, "Include per-length PC counts in the JSON");
  add_threads(sweep_cmd);

  auto* extract = app.add_subcommand("extract", "Write the node-induced subnetwork");
  extract->add_option("edges", o.edges, "Edge-list file")->required();
  extract->add_option("--nodes", o.nodes, "Node-set file")->required();
  extract->add_option("-o,--output", o.out_edges, "Output edge list")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (info->parsed())
      return cmd_info(o, out, err);
    if (paths->parsed())
      return cmd_paths(o, out, err);
    if (mu_cmd->parsed())
      return cmd_mu(o, out, err);
    if (sweep_cmd->parsed())
      return cmd_sweep(o, out, err);
    if (extract->parsed())
      return cmd_extract(o, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

} // namespace pathres
