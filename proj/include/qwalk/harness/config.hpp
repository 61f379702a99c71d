#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qw {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// key = value lines; "[name]" starts a section whose keys are stored as "name.key".
// '#' and ';' start comments. Later keys override earlier ones.
class ExperimentConfig {
 public:
  ExperimentConfig() = default;
  explicit ExperimentConfig(std::string experiment) : experiment_(std::move(experiment)) {}

  const std::string& experiment() const { return experiment_; }
  void set_experiment(std::string name) { experiment_ = std::move(name); }

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  // "key=value" as given on the command line; wins over file keys.
  void apply_override(const std::string& assignment);
  // Lookup order: command-line override, "<experiment>.key", then top-level "key".
  bool has(const std::string& key) const;

  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  // Comma or whitespace separated; entries may be fractions like 1/64.
  std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;

  // Every key, sorted.
  const std::map<std::string, std::string>& values() const { return values_; }
  // Effective value of every key read so far, defaults included.
  const std::map<std::string, std::string>& resolved() const { return resolved_; }
  // Overrides and keys in this experiment's section that were never read.
  // Top-level file keys are shared defaults and may go unread.
  std::vector<std::string> unused_keys() const;

  // Precondition helpers; throw ConfigError naming the key.
  static void require(bool ok, const std::string& key, const std::string& what);

 private:
  const std::string* find(const std::string& key) const;

  std::string experiment_;
  std::map<std::string, std::string> values_;
  std::set<std::string> overrides_;
  void record(const std::string& key, const std::string& value) const { resolved_[key] = value; }

  mutable std::set<std::string> used_;
  mutable std::map<std::string, std::string> resolved_;
};

ExperimentConfig parse_config(const std::string& text, const std::string& experiment = "");
// Throws ConfigError when the file cannot be read.
ExperimentConfig load_config(const std::string& path, const std::string& experiment = "");

double parse_number(const std::string& s);

}  // namespace qw
