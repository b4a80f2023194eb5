#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cocseg {

/// Exact non-negative rational, used for the term-selection fraction and the
/// explanation share threshold so that cutoffs never depend on floating
/// point rounding.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational parse(const std::string& text);  // "1/2", "3", or "0.25"
  std::string str() const;

  /// ceil(count * num / den) for count >= 0.
  std::int64_t ceil_times(std::int64_t count) const;

  double value() const { return static_cast<double>(num) / den; }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Every knob of the text -> context -> lattice -> taxonomy -> segmentation
/// pipeline. Defaults mirror the documented CLI defaults.
struct PipelineConfig {
  int min_pair_freq = 2;
  int window = 5;
  Rational term_fraction{1, 2};
  int k = 4;
  int max_iter = 100;
  Rational min_share{1, 2};
  /// Unset by default: clustering is fully deterministic. When given, the
  /// k-means seeding is randomized with this seed instead.
  std::optional<std::uint32_t> seed;
  std::string input_path;
  std::string out_dir = ".";

  /// InputError when a field is outside its documented range.
  void validate() const;

  /// Flat key=value form; unknown keys are rejected. Lossless round-trip
  /// with save().
  static PipelineConfig load(const std::string& path);
  void save(const std::string& path) const;
  std::string to_key_values() const;
  static PipelineConfig from_key_values(const std::string& text,
                                        const std::string& source_name = "config");
};

}  // namespace cocseg
