#include "pathres/network.hpp"

#include "pathres/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace pathres {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

// Comma-separated when the line holds a comma, whitespace-separated otherwise.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  if (line.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (true) {
      const auto next = line.find(',', pos);
      fields.push_back(trim(line.substr(pos, next == std::string_view::npos ? next : next - pos)));
      if (next == std::string_view::npos)
        break;
      pos = next + 1;
    }
    return fields;
  }
  constexpr std::string_view ws = " \t\r\f\v";
  std::size_t pos = line.find_first_not_of(ws);
  while (pos != std::string_view::npos) {
    const auto end = line.find_first_of(ws, pos);
    fields.push_back(line.substr(pos, end == std::string_view::npos ? end : end - pos));
    pos = line.find_first_not_of(ws, end);
  }
  return fields;
}

std::optional<double> parse_real(std::string_view s) {
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last || !std::isfinite(value))
    return std::nullopt;
  return value;
}

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

constexpr std::string_view kNodesDirective = "nodes:";

} // namespace

Network::Network(std::vector<std::string> labels, std::vector<Arc> arcs)
    : labels_(std::move(labels)), arcs_(std::move(arcs)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<NodeId>(i)).second)
      throw ValidationError("duplicate node label '" + labels_[i] + "'");
  }

  const std::size_t n = labels_.size();
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Arc& a : arcs_) {
    if (a.source >= n || a.target >= n)
      throw ValidationError("arc endpoint out of range");
    if (a.source == a.target)
      throw ValidationError("self-loop on '" + labels_[a.source] + "'");
    if (!std::isfinite(a.weight) || !(a.weight > 0.0))
      throw ValidationError("non-positive weight on arc " + labels_[a.source] + "->" + labels_[a.target]);
    if (!seen.emplace(a.source, a.target).second)
      throw ValidationError("duplicate arc " + labels_[a.source] + "->" + labels_[a.target]);
  }

  // CSR out-adjacency, stable with respect to construction order.
  offsets_.assign(n + 1, 0);
  for (const Arc& a : arcs_)
    ++offsets_[a.source + 1];
  for (std::size_t i = 0; i < n; ++i)
    offsets_[i + 1] += offsets_[i];
  out_.resize(arcs_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Arc& a : arcs_)
    out_[cursor[a.source]++] = OutArc{a.target, a.weight};
}

std::optional<NodeId> Network::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ParseResult parse_edge_list(std::string_view text) {
  ParseResult result;
  ValidationReport& report = result.report;

  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Arc> arcs;
  std::set<std::pair<NodeId, NodeId>> seen;
  std::size_t records = 0;
  bool first_data_line = true;

  auto intern = [&](std::string_view label) {
    const auto [it, inserted] = index.emplace(std::string(label), static_cast<NodeId>(labels.size()));
    if (inserted)
      labels.emplace_back(label);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty())
      continue;
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      if (first_data_line && body.starts_with(kNodesDirective)) {
        for (auto label : split_fields(body.substr(kNodesDirective.size())))
          if (!label.empty())
            intern(label);
      }
      continue;
    }

    const auto fields = split_fields(line);
    if (fields.size() < 3) {
      report.errors.push_back({line_no, "expected 3 fields (source, target, weight), found " +
                                            std::to_string(fields.size())});
      first_data_line = false;
      continue;
    }
    const auto weight = parse_real(fields[2]);
    if (first_data_line) {
      first_data_line = false;
      if (!weight)
        continue; // header
    }
    if (fields.size() > 3)
      report.warnings.push_back({line_no, "extra fields ignored"});
    if (fields[0].empty() || fields[1].empty()) {
      report.errors.push_back({line_no, "empty node label"});
      continue;
    }
    ++records;
    if (!weight) {
      report.errors.push_back({line_no, "non-numeric weight '" + std::string(fields[2]) + "'"});
      continue;
    }
    if (!(*weight > 0.0)) {
      report.errors.push_back({line_no, "non-positive weight " + std::string(fields[2])});
      continue;
    }
    const NodeId u = intern(fields[0]);
    const NodeId v = intern(fields[1]);
    if (u == v) {
      report.warnings.push_back({line_no, "self-loop on '" + labels[u] + "' dropped"});
      continue;
    }
    if (!seen.emplace(u, v).second) {
      report.errors.push_back({line_no, "duplicate arc " + labels[u] + "->" + labels[v]});
      continue;
    }
    arcs.push_back(Arc{u, v, *weight});
  }

  if (records == 0 && report.errors.empty())
    report.errors.push_back({line_no, "no arcs"});

  report.node_count = labels.size();
  report.arc_count = arcs.size();
  if (report.ok())
    result.network.emplace(std::move(labels), std::move(arcs));
  return result;
}

ParseResult read_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw IoError("error reading '" + path + "'");
  return parse_edge_list(buf.str());
}

std::string to_edge_list(const Network& net) {
  std::string out = "# nodes:";
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    out += i == 0 ? " " : ",";
    out += net.labels()[i];
  }
  out += '\n';
  for (const Arc& a : net.arcs()) {
    out += net.label(a.source);
    out += ',';
    out += net.label(a.target);
    out += ',';
    out += format_real(a.weight);
    out += '\n';
  }
  return out;
}

std::vector<std::string> parse_node_set(std::string_view text) {
  std::vector<std::string> labels;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    const auto line = trim(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (!line.empty() && line.front() != '#')
      labels.emplace_back(line);
  }
  return labels;
}

SubnetworkResult subnetwork(const Network& net, std::span<const std::string> keep) {
  if (keep.empty())
    throw ValidationError("empty node set");

  SubnetworkResult result;
  std::vector<bool> kept(net.node_count(), false);
  std::unordered_set<std::string> reported;
  for (const auto& label : keep) {
    if (const auto id = net.find(label))
      kept[*id] = true;
    else if (reported.insert(label).second)
      result.unknown_labels.push_back(label);
  }

  std::vector<NodeId> remap(net.node_count(), 0);
  std::vector<std::string> labels;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (kept[i]) {
      remap[i] = static_cast<NodeId>(labels.size());
      labels.push_back(net.label(i));
    }
  }
  std::vector<Arc> arcs;
  for (const Arc& a : net.arcs())
    if (kept[a.source] && kept[a.target])
      arcs.push_back(Arc{remap[a.source], remap[a.target], a.weight});
  if (arcs.empty())
    throw ValidationError("empty subnetwork");

  result.network = Network(std::move(labels), std::move(arcs));
  return result;
}

} // namespace pathres
