#include "qwalk/harness/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qw {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_plain(const std::string& s) {
  const std::string t = trim(s);
  if (t == "pi") return 3.14159265358979323846;
  double v = 0.0;
  const char* end = t.data() + t.size();
  auto [p, ec] = std::from_chars(t.data(), end, v);
  if (ec != std::errc{} || p != end || t.empty()) throw ConfigError("not a number: '" + t + "'");
  return v;
}

}  // namespace

double parse_number(const std::string& s) {
  const auto slash = s.find('/');
  const double v = slash == std::string::npos ? parse_plain(s) : parse_plain(s.substr(0, slash)) / parse_plain(s.substr(slash + 1));
  if (!std::isfinite(v)) throw ConfigError("not a finite number: '" + trim(s) + "'");
  return v;
}

void ExperimentConfig::apply_override(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("override '" + assignment + "' is not key=value");
  const std::string key = trim(assignment.substr(0, eq));
  if (key.empty()) throw ConfigError("override '" + assignment + "' has an empty key");
  values_[key] = trim(assignment.substr(eq + 1));
  overrides_.insert(key);
}

const std::string* ExperimentConfig::find(const std::string& key) const {
  auto it = values_.end();
  if (overrides_.count(key)) it = values_.find(key);
  if (it == values_.end() && !experiment_.empty()) it = values_.find(experiment_ + "." + key);
  if (it == values_.end()) it = values_.find(key);
  if (it == values_.end()) return nullptr;
  used_.insert(it->first);
  return &it->second;
}

bool ExperimentConfig::has(const std::string& key) const {
  return values_.count(key) > 0 || (!experiment_.empty() && values_.count(experiment_ + "." + key) > 0);
}

namespace {

std::string shortest(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
  const std::string* v = find(key);
  if (!v) {
    record(key, shortest(fallback));
    return fallback;
  }
  try {
    const double d = parse_number(*v);
    record(key, trim(*v));
    return d;
  } catch (const ConfigError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

int ExperimentConfig::get_int(const std::string& key, int fallback) const {
  const double d = get_double(key, fallback);
  if (d != std::floor(d) || std::abs(d) > 2e9) throw ConfigError(key + ": expected an integer");
  return static_cast<int>(d);
}

std::uint64_t ExperimentConfig::get_seed(const std::string& key, std::uint64_t fallback) const {
  const std::string* v = find(key);
  if (!v) {
    record(key, std::to_string(fallback));
    return fallback;
  }
  const std::string t = trim(*v);
  record(key, t);
  std::uint64_t s = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), s);
  if (ec != std::errc{} || p != t.data() + t.size() || t.empty()) throw ConfigError(key + ": expected an unsigned integer");
  return s;
}

bool ExperimentConfig::get_bool(const std::string& key, bool fallback) const {
  const std::string* v = find(key);
  if (!v) {
    record(key, fallback ? "true" : "false");
    return fallback;
  }
  std::string t = trim(*v);
  record(key, t);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ConfigError(key + ": expected a boolean");
}

std::string ExperimentConfig::get_string(const std::string& key, const std::string& fallback) const {
  const std::string* v = find(key);
  const std::string out = v ? trim(*v) : fallback;
  record(key, out);
  return out;
}

std::vector<double> ExperimentConfig::get_list(const std::string& key, const std::vector<double>& fallback) const {
  const std::string* v = find(key);
  if (!v) {
    std::string d;
    for (double x : fallback) d += (d.empty() ? "" : ",") + shortest(x);
    record(key, d);
    return fallback;
  }
  record(key, trim(*v));
  std::string t = *v;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<double> out;
  std::string tok;
  try {
    while (in >> tok) out.push_back(parse_number(tok));
  } catch (const ConfigError& e) {
    throw ConfigError(key + ": " + e.what());
  }
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

std::vector<std::string> ExperimentConfig::unused_keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_) {
    const auto dot = k.find('.');
    const bool mine = overrides_.count(k) || (dot != std::string::npos && k.substr(0, dot) == experiment_);
    if (mine && !used_.count(k)) out.push_back(k);
  }
  return out;
}

void ExperimentConfig::require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw ConfigError(key + ": " + what);
}

ExperimentConfig parse_config(const std::string& text, const std::string& experiment) {
  ExperimentConfig c(experiment);
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    c.set(section.empty() ? key : section + "." + key, trim(line.substr(eq + 1)));
  }
  return c;
}

ExperimentConfig load_config(const std::string& path, const std::string& experiment) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return parse_config(s.str(), experiment);
}

}  // namespace qw
