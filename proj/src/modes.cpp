#include "bsq/modes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bsq/errors.hpp"

namespace bsq {

bool same_label(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= 1e-9 * scale;
}

ModeRegistry::ModeRegistry(std::vector<double> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw RegistryError("mode registry must contain at least one mode");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!std::isfinite(labels_[i])) throw RegistryError("mode label must be finite");
    for (std::size_t j = 0; j < i; ++j) {
      if (same_label(labels_[i], labels_[j])) {
        std::ostringstream msg;
        msg << "duplicate mode label " << labels_[i];
        throw RegistryError(msg.str());
      }
    }
  }
}

std::optional<std::size_t> ModeRegistry::find(double label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (same_label(labels_[i], label)) return i;
  }
  return std::nullopt;
}

std::size_t ModeRegistry::index_of(double label) const {
  if (auto i = find(label)) return *i;
  std::ostringstream msg;
  msg << "mode " << label << " is not registered";
  throw RegistryError(msg.str());
}

std::size_t ModeRegistry::partner(std::size_t index) const {
  check_index(index);
  if (auto j = find(-labels_[index])) return *j;
  std::ostringstream msg;
  msg << "mode " << labels_[index] << " has no registered partner " << -labels_[index];
  throw RegistryError(msg.str());
}

bool ModeRegistry::has_all_partners() const { return missing_partners().empty(); }

std::vector<double> ModeRegistry::missing_partners() const {
  std::vector<double> missing;
  for (double label : labels_) {
    if (!find(-label)) missing.push_back(-label);
  }
  return missing;
}

void ModeRegistry::check_index(std::size_t index) const {
  if (index >= labels_.size()) {
    std::ostringstream msg;
    msg << "mode index " << index << " out of range (registry has " << labels_.size() << " modes)";
    throw RegistryError(msg.str());
  }
}

}  // namespace bsq
