#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsq/channels.hpp"
#include "bsq/config.hpp"
#include "bsq/losses.hpp"
#include "bsq/units.hpp"

namespace bsq {

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);

/// 16 lowercase hex digits of fnv1a64(serialize(config)).
std::string config_hash(const RunConfig& config);

/// 12 significant digits; "nan" / "inf" / "-inf" for non-finite values.
std::string csv_number(double value);

/// Scan table. The first line is "# config-hash: <hash>", then the header
///   y,t_seconds,n_hi,n_lo,var_diff,xi,flags
/// (for channel B the y column holds dy), one row per point, '\n' endings.
std::string scan_csv(const std::vector<ScanRow>& rows, const std::string& hash);

/// Human-readable summary followed by a "key = value" block.
std::string derive_report(const LabParameters& params, double y);

/// Minimal standalone SVG: xi against the grid coordinate, one polyline per time.
std::string svg_plot(const std::vector<ScanRow>& rows, const std::string& title, const std::string& x_label);

}  // namespace bsq
