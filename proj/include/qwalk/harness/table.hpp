#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qw {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  // Insertion ordered: config echo, code version, summary values.
  std::vector<std::pair<std::string, std::string>> metadata;

  void add_row(std::vector<double> r);
  void add_meta(const std::string& key, const std::string& value);
  void add_meta(const std::string& key, double value);
  const std::string* meta(const std::string& key) const;
  std::size_t column(const std::string& name) const;  // throws std::out_of_range
  // Throws std::invalid_argument when rows are ragged or hold non-finite values.
  void validate() const;
};

enum class Format { csv, json };
Format parse_format(const std::string& s);

// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

// Metadata as leading "# key,value" lines, then the header row and data rows.
std::string to_csv(const ResultTable& t);
// {"metadata": {...}, "columns": [...], "rows": [{column: value, ...}, ...]}
std::string to_json(const ResultTable& t);

ResultTable read_csv(const std::string& text);
ResultTable read_json(const std::string& text);

// Writes the serialized table; throws IoError on failure.
void emit(const ResultTable& t, const std::string& path, Format f);

}  // namespace qw
