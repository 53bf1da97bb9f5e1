#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bsq {

/// Ordered set of bosonic modes, each labelled by a signed dimensionless
/// momentum (units of k0). Labels compare equal within a relative 1e-9.
class ModeRegistry {
 public:
  ModeRegistry() = default;
  explicit ModeRegistry(std::vector<double> labels);

  std::size_t size() const { return labels_.size(); }
  double label(std::size_t index) const { return labels_.at(index); }
  std::span<const double> labels() const { return labels_; }

  std::optional<std::size_t> find(double label) const;
  /// Throws RegistryError when the label is not registered.
  std::size_t index_of(double label) const;
  /// Index of the mode at -label; throws RegistryError if absent.
  std::size_t partner(std::size_t index) const;
  bool has_all_partners() const;
  /// Absent partner labels, i.e. -label for every label whose partner is missing.
  std::vector<double> missing_partners() const;

  void check_index(std::size_t index) const;

  bool operator==(const ModeRegistry&) const = default;

 private:
  std::vector<double> labels_;
};

bool same_label(double a, double b);

}  // namespace bsq
