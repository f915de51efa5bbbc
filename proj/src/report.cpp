#include "pathres/report.hpp"

#include "pathres/config.hpp"
#include "pathres/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pathres {

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out += c;
    }
  }
  return out;
}

std::string ramp(double mu) {
  // #d9d9d9 -> #b2182b
  const double t = std::clamp(mu, 0.0, 1.0);
  const auto mix = [t](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * t)); };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", mix(0xd9, 0xb2), mix(0xd9, 0x18), mix(0xd9, 0x2b));
  return buf;
}

std::string join_reals(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ',';
    out += format_real(v[i]);
  }
  return out;
}

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key))
    throw ValidationError(std::string("surface JSON lacks '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("surface JSON field '") + key + "': " + e.what());
  }
}

} // namespace

std::string format_mu(double mu) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", mu);
  return buf;
}

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string surface_csv(const Surface& s) {
  std::string out = "delta,xi,mu\n";
  for (std::size_t d = 0; d < s.rows(); ++d) {
    for (std::size_t x = 0; x < s.cols(); ++x) {
      out += format_real(s.delta_grid[d]);
      out += ',';
      out += format_real(s.xi_grid[x]);
      out += ',';
      out += format_mu(s.at(d, x));
      out += '\n';
    }
  }
  return out;
}

nlohmann::json surface_to_json(const Surface& s, bool per_k) {
  using nlohmann::json;
  json j;
  j["network"] = s.metadata.network;
  j["kbar"] = s.metadata.k_bar;
  j["strategy"] = std::string(to_string(s.metadata.strategy));
  j["gamma"] = s.metadata.gamma.values();
  j["theta"] = s.metadata.theta.values();
  json exact = json::array();
  for (const Ratio& r : s.metadata.theta.exact())
    exact.push_back(r.str());
  j["theta_exact"] = exact;
  j["delta_grid"] = s.delta_grid;
  j["xi_grid"] = s.xi_grid;
  j["totals"] = s.totals;
  json rows = json::array();
  for (std::size_t d = 0; d < s.rows(); ++d) {
    json row = json::array();
    for (std::size_t x = 0; x < s.cols(); ++x)
      row.push_back(s.at(d, x));
    rows.push_back(row);
  }
  j["mu"] = rows;
  if (per_k) {
    json counts = json::array();
    for (std::size_t d = 0; d < s.rows(); ++d) {
      json row = json::array();
      for (std::size_t x = 0; x < s.cols(); ++x)
        row.push_back(s.pc_counts[s.cell(d, x)]);
      counts.push_back(row);
    }
    j["pc_counts"] = counts;
  }
  return j;
}

Surface surface_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw ValidationError("surface JSON must be an object");
  Surface s;
  s.metadata.network = field<std::string>(j, "network");
  s.metadata.k_bar = field<std::size_t>(j, "kbar");
  s.metadata.strategy = require_strategy(field<std::string>(j, "strategy"));
  s.metadata.gamma = PcVector(field<std::vector<double>>(j, "gamma"));
  std::vector<Ratio> theta;
  for (const auto& text : field<std::vector<std::string>>(j, "theta_exact")) {
    const auto r = parse_ratio(text);
    if (!r)
      throw ValidationError("surface JSON has an invalid theta '" + text + "'");
    theta.push_back(*r);
  }
  s.metadata.theta = ThetaVector(std::move(theta));
  s.delta_grid = field<std::vector<double>>(j, "delta_grid");
  s.xi_grid = field<std::vector<double>>(j, "xi_grid");
  s.totals = field<std::vector<std::uint64_t>>(j, "totals");

  const auto rows = field<std::vector<std::vector<double>>>(j, "mu");
  if (rows.size() != s.rows())
    throw ValidationError("surface JSON mu has the wrong number of rows");
  for (const auto& row : rows) {
    if (row.size() != s.cols())
      throw ValidationError("surface JSON mu has the wrong number of columns");
    s.mu.insert(s.mu.end(), row.begin(), row.end());
  }
  if (j.contains("pc_counts")) {
    const auto counts = field<std::vector<std::vector<std::vector<std::uint64_t>>>>(j, "pc_counts");
    if (counts.size() != s.rows())
      throw ValidationError("surface JSON pc_counts has the wrong number of rows");
    for (const auto& row : counts) {
      if (row.size() != s.cols())
        throw ValidationError("surface JSON pc_counts has the wrong number of columns");
      s.pc_counts.insert(s.pc_counts.end(), row.begin(), row.end());
    }
  }
  return s;
}

std::string surface_svg(const Surface& s) {
  constexpr double width = 640, height = 520;
  constexpr double left = 70, right = 110, top = 50, bottom = 60;
  constexpr double plot_w = width - left - right;
  constexpr double plot_h = height - top - bottom;
  const double cell_w = plot_w / static_cast<double>(s.rows());
  const double cell_h = plot_h / static_cast<double>(s.cols());

  std::ostringstream o;
  o << R"(<svg xmlns="http://www.w3.org/2000/svg" width="640" height="520" viewBox="0 0 640 520" )"
    << R"(font-family="sans-serif" font-size="11">)" << '\n';
  o << R"(<rect x="0" y="0" width="640" height="520" fill="#ffffff"/>)" << '\n';

  std::string title = "mu surface";
  if (!s.metadata.network.empty())
    title += ": " + s.metadata.network;
  o << R"(<text x="320" y="20" text-anchor="middle" font-size="14">)" << xml_escape(title) << "</text>\n";
  o << R"(<text x="320" y="36" text-anchor="middle">)"
    << xml_escape("gamma=(" + join_reals(s.metadata.gamma.values()) + ") strategy=" +
                  std::string(to_string(s.metadata.strategy)))
    << "</text>\n";

  for (std::size_t d = 0; d < s.rows(); ++d) {
    for (std::size_t x = 0; x < s.cols(); ++x) {
      const double px = left + static_cast<double>(d) * cell_w;
      const double py = top + plot_h - static_cast<double>(x + 1) * cell_h;
      o << R"(<rect x=")" << fixed2(px) << R"(" y=")" << fixed2(py) << R"(" width=")" << fixed2(cell_w)
        << R"(" height=")" << fixed2(cell_h) << R"(" fill=")" << ramp(s.at(d, x)) << R"("/>)" << '\n';
    }
  }
  o << R"(<rect x=")" << fixed2(left) << R"(" y=")" << fixed2(top) << R"(" width=")" << fixed2(plot_w)
    << R"(" height=")" << fixed2(plot_h) << R"(" fill="none" stroke="#000000"/>)" << '\n';

  for (std::size_t d = 0; d < s.rows(); ++d) {
    const double cx = left + (static_cast<double>(d) + 0.5) * cell_w;
    o << R"(<text x=")" << fixed2(cx) << R"(" y=")" << fixed2(top + plot_h + 16)
      << R"(" text-anchor="middle">)" << format_real(s.delta_grid[d]) << "</text>\n";
  }
  for (std::size_t x = 0; x < s.cols(); ++x) {
    const double cy = top + plot_h - (static_cast<double>(x) + 0.5) * cell_h;
    o << R"(<text x=")" << fixed2(left - 6) << R"(" y=")" << fixed2(cy + 4) << R"(" text-anchor="end">)"
      << format_real(s.xi_grid[x]) << "</text>\n";
  }
  o << R"(<text x=")" << fixed2(left + plot_w / 2) << R"(" y=")" << fixed2(height - 16)
    << R"(" text-anchor="middle" font-size="13">delta</text>)" << '\n';
  o << R"(<text x="20" y=")" << fixed2(top + plot_h / 2) << R"(" text-anchor="middle" font-size="13" )"
    << R"(transform="rotate(-90 20 )" << fixed2(top + plot_h / 2) << R"x()">xi</text>)x" << '\n';

  // Colour bar.
  constexpr int steps = 20;
  const double bar_x = left + plot_w + 30;
  const double bar_h = plot_h / steps;
  for (int i = 0; i < steps; ++i) {
    const double v = (static_cast<double>(i) + 0.5) / steps;
    const double y = top + plot_h - static_cast<double>(i + 1) * bar_h;
    o << R"(<rect x=")" << fixed2(bar_x) << R"(" y=")" << fixed2(y) << R"(" width="20" height=")" << fixed2(bar_h)
      << R"(" fill=")" << ramp(v) << R"("/>)" << '\n';
  }
  o << R"(<text x=")" << fixed2(bar_x + 26) << R"(" y=")" << fixed2(top + plot_h) << R"(">0</text>)" << '\n';
  o << R"(<text x=")" << fixed2(bar_x + 26) << R"(" y=")" << fixed2(top + 10) << R"(">1</text>)" << '\n';
  o << R"(<text x=")" << fixed2(bar_x + 10) << R"(" y=")" << fixed2(top - 6)
    << R"(" text-anchor="middle">mu</text>)" << '\n';
  o << "</svg>\n";
  return o.str();
}

std::string info_line(const Network& net, const PathStats& stats) {
  std::string out = "nodes=" + std::to_string(net.node_count()) + " arcs=" + std::to_string(net.arc_count()) +
                    " kbar=" + std::to_string(stats.k_bar) + "; paths:";
  for (std::size_t k = 1; k <= stats.counts_by_length.size(); ++k)
    out += " k=" + std::to_string(k) + ":" + std::to_string(stats.counts_by_length[k - 1]);
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot write '" + path + "'");
  out << content;
  out.flush();
  if (!out)
    throw IoError("error writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace pathres
