#include "qwalk/harness/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qw {

void ResultTable::add_row(std::vector<double> r) { rows.push_back(std::move(r)); }

void ResultTable::add_meta(const std::string& key, const std::string& value) { metadata.emplace_back(key, value); }

void ResultTable::add_meta(const std::string& key, double value) { metadata.emplace_back(key, format_double(value)); }

const std::string* ResultTable::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return &v;
  return nullptr;
}

std::size_t ResultTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw std::out_of_range("no column " + name);
}

void ResultTable::validate() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != columns.size())
      throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) + " values for " +
                                  std::to_string(columns.size()) + " columns");
    for (double v : rows[i])
      if (!std::isfinite(v)) throw std::invalid_argument("row " + std::to_string(i) + " holds a non-finite value");
  }
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + s + "' (csv or json)");
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf, p);
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos && (s.empty() || s.front() != '#')) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Splits one logical CSV record starting at `pos`; quoted fields may span lines.
std::vector<std::string> split_record(const std::string& text, std::size_t& pos) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  while (pos < text.size()) {
    const char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          cur += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  fields.push_back(std::move(cur));
  return fields;
}

double read_number(const std::string& s) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) throw std::invalid_argument("bad CSV number '" + s + "'");
  return v;
}

}  // namespace

std::string to_csv(const ResultTable& t) {
  t.validate();
  std::string out;
  for (const auto& [k, v] : t.metadata) out += "# " + quote(k) + "," + quote(v) + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + quote(t.columns[i]);
  out += "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + format_double(r[i]);
    out += "\n";
  }
  return out;
}

ResultTable read_csv(const std::string& text) {
  ResultTable t;
  std::size_t pos = 0;
  while (pos < text.size() && text.compare(pos, 2, "# ") == 0) {
    pos += 2;
    auto f = split_record(text, pos);
    if (f.size() != 2) throw std::invalid_argument("metadata line needs key,value");
    t.metadata.emplace_back(f[0], f[1]);
  }
  if (pos >= text.size()) throw std::invalid_argument("CSV has no header row");
  t.columns = split_record(text, pos);
  if (t.columns.size() == 1 && t.columns[0].empty()) t.columns.clear();
  while (pos < text.size()) {
    auto f = split_record(text, pos);
    std::vector<double> r;
    r.reserve(f.size());
    for (const auto& s : f) r.push_back(read_number(s));
    t.rows.push_back(std::move(r));
  }
  t.validate();
  return t;
}

std::string to_json(const ResultTable& t) {
  t.validate();
  nlohmann::ordered_json j;
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.metadata) j["metadata"][k] = v;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < r.size(); ++i) row[t.columns[i]] = r[i];
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

ResultTable read_json(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  ResultTable t;
  for (const auto& [k, v] : j.at("metadata").items()) t.metadata.emplace_back(k, v.get<std::string>());
  t.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& row : j.at("rows")) {
    std::vector<double> r;
    for (const auto& c : t.columns) r.push_back(row.at(c).get<double>());
    t.rows.push_back(std::move(r));
  }
  t.validate();
  return t;
}

void emit(const ResultTable& t, const std::string& path, Format f) {
  const std::string body = f == Format::csv ? to_csv(t) : to_json(t);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << body;
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace qw
