/// @file
/// Deterministic CSV, JSON and SVG renderings of surfaces and path censuses.

#pragma once

#include "pathres/paths.hpp"
#include "pathres/resilience.hpp"

#include <json.hpp>

#include <string>

namespace pathres {

/// 12 significant digits; exact 0 and 1 come out as "0" and "1".
std::string format_mu(double mu);

/// Shortest text that reads back as the same double.
std::string format_real(double v);

/// `delta,xi,mu` header then one row per cell, delta-major.
std::string surface_csv(const Surface& surface);

/// Full metadata with expanded Gamma and Theta. Per-cell PC counts are
/// included when `per_k` is set.
nlohmann::json surface_to_json(const Surface& surface, bool per_k);

/// Inverse of surface_to_json. Throws ValidationError on malformed input.
Surface surface_from_json(const nlohmann::json& j);

/// Heatmap on a fixed 640x520 canvas: delta along the horizontal axis, xi
/// increasing upwards, light grey (mu = 0) to dark red (mu = 1).
std::string surface_svg(const Surface& surface);

/// "nodes=3 arcs=3 kbar=2; paths: k=1:3 k=2:1"
std::string info_line(const Network& net, const PathStats& stats);

/// Writes `content` to `path`, throwing IoError on failure.
void write_file(const std::string& path, const std::string& content);

/// Reads a whole file, throwing IoError on failure.
std::string read_file(const std::string& path);

} // namespace pathres
