#include "bsq/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "bsq/errors.hpp"

namespace bsq {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const RunConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(serialize(config))));
  return buf;
}

std::string csv_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string scan_csv(const std::vector<ScanRow>& rows, const std::string& hash) {
  std::string out = "# config-hash: " + hash + "\n";
  out += "y,t_seconds,n_hi,n_lo,var_diff,xi,flags\n";
  for (const auto& r : rows) {
    out += csv_number(r.x) + ',' + csv_number(r.t) + ',' + csv_number(r.n_hi) + ',' + csv_number(r.n_lo) + ',' +
           csv_number(r.var_diff) + ',' + csv_number(r.xi) + ',' + r.flags + '\n';
  }
  return out;
}

std::string derive_report(const LabParameters& params, double y) {
  const DerivedScales s = derive(params);
  const LossEstimate loss = estimate_losses(y, params, s);
  const double n_cm3 = lab_units::per_m3_to_per_cm3(s.density);
  const double e0_hz = lab_units::rad_s_to_hz(s.energy_scale);
  const double coupling_hz = lab_units::rad_s_to_hz(s.effective_coupling);

  std::ostringstream out;
  char line[256];
  auto emit = [&](const char* fmt, auto... args) {
    std::snprintf(line, sizeof line, fmt, args...);
    out << line << '\n';
  };
  emit("condensate density      n0 = %.6g cm^-3", n_cm3);
  emit("healing momentum        k0 = %.6g m^-1", s.healing_momentum);
  emit("energy scale       E0/2pi = %.6g Hz", e0_hz);
  emit("effective coupling  W/2pi = %.6g Hz  (W/E0 = %.6g)", coupling_hz, s.effective_coupling / s.energy_scale);
  emit("Beliaev lifetime at y=%g: %.6g s%s", y, loss.beliaev_time,
       loss.valid_regime ? "" : "  (outside |k| >> k0; rough only)");
  emit("rescattering fraction: %.4g (sigma = 8 pi a^2), %.4g (sigma = 4 pi a^2)", loss.rescatter_fraction_8pi,
       loss.rescatter_fraction_4pi);
  out << "  the cross-section convention is ambiguous; both are shown.\n";
  if (loss.rescatter_fraction_8pi > 1.0 || loss.rescatter_fraction_4pi > 1.0) {
    out << "  warning: rescattering fraction exceeds 1; multiple scattering is not negligible.\n";
  }
  for (const auto& w : warnings(params, s)) out << "warning: " << w << '\n';

  out << "\n[derived]\n";
  emit("density_cm3 = %.17g", n_cm3);
  emit("healing_momentum_per_m = %.17g", s.healing_momentum);
  emit("energy_scale_hz = %.17g", e0_hz);
  emit("effective_coupling_hz = %.17g", coupling_hz);
  emit("coupling_over_e0 = %.17g", s.effective_coupling / s.energy_scale);
  emit("y = %.17g", y);
  emit("beliaev_time_s = %.17g", loss.beliaev_time);
  emit("beliaev_valid = %s", loss.valid_regime ? "true" : "false");
  emit("rescatter_fraction_8pi = %.17g", loss.rescatter_fraction_8pi);
  emit("rescatter_fraction_4pi = %.17g", loss.rescatter_fraction_4pi);
  return out.str();
}

std::string svg_plot(const std::vector<ScanRow>& rows, const std::string& title, const std::string& x_label) {
  constexpr double w = 640, h = 420, left = 60, right = 20, top = 36, bottom = 48;
  std::map<double, std::vector<std::pair<double, double>>> series;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& r : rows) {
    if (!std::isfinite(r.xi) || !std::isfinite(r.x)) continue;
    series[r.t].emplace_back(r.x, r.xi);
    x0 = std::min(x0, r.x);
    x1 = std::max(x1, r.x);
    y0 = std::min(y0, r.xi);
    y1 = std::max(y1, r.xi);
  }
  if (series.empty()) throw ValidationError("nothing finite to plot");
  y0 = std::min(y0, 0.0);
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (w - left - right); };
  auto py = [&](double y) { return h - bottom - (y - y0) / (y1 - y0) * (h - top - bottom); };

  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n"
      << "<line x1=\"" << left << "\" y1=\"" << h - bottom << "\" x2=\"" << w - right << "\" y2=\"" << h - bottom
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << h - bottom
      << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << w / 2 << "\" y=\"" << h - 10 << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label
      << "</text>\n"
      << "<text x=\"14\" y=\"" << h / 2 << "\" font-size=\"13\" transform=\"rotate(-90 14 " << h / 2
      << ")\" text-anchor=\"middle\">xi</text>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x0 + (x1 - x0) * k / 4, yv = y0 + (y1 - y0) * k / 4;
    svg << "<text x=\"" << px(xv) << "\" y=\"" << h - bottom + 16 << "\" font-size=\"11\" text-anchor=\"middle\">"
        << csv_number(std::round(xv * 1000) / 1000) << "</text>\n"
        << "<text x=\"" << left - 6 << "\" y=\"" << py(yv) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
        << csv_number(std::round(yv * 1000) / 1000) << "</text>\n";
  }
  std::size_t c = 0;
  for (const auto& [t, pts] : series) {
    const char* color = colors[c % std::size(colors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : pts) svg << px(x) << ',' << py(y) << ' ';
    svg << "\"/>\n"
        << "<text x=\"" << w - right - 4 << "\" y=\"" << top + 14 * (c + 1) << "\" font-size=\"11\" fill=\"" << color
        << "\" text-anchor=\"end\">t = " << csv_number(t) << " s</text>\n";
    ++c;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace bsq
