#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rcc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace toml {

// Minimal TOML subset used by the project's config files: [table] headers,
// bare or quoted keys, string/integer/float/boolean/array values and #
// comments. Nested values are exposed under dotted keys ("sim.kp").
struct Value {
  std::variant<std::string, int64_t, double, bool, std::vector<double>> data;

  bool is_string() const { return std::holds_alternative<std::string>(data); }

  std::string as_string() const;
  int64_t as_int() const;
  double as_double() const;  // accepts integer values too
  bool as_bool() const;
  std::vector<double> as_double_array() const;
};

class Document {
 public:
  bool has(const std::string& key) const { return values_.count(key) > 0; }

  const Value& at(const std::string& key) const;

  std::string get_string(const std::string& key, std::string fallback) const;
  int64_t get_int(const std::string& key, int64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_double_array(const std::string& key,
                                       std::vector<double> fallback) const;

  // All (key, value) pairs directly inside a table, key without the prefix.
  std::vector<std::pair<std::string, Value>> entries(const std::string& table) const;

  void set(std::string key, Value value) { values_[std::move(key)] = std::move(value); }

 private:
  std::map<std::string, Value> values_;
};

Document parse(const std::string& text);
Document parse_file(const std::string& path);

}  // namespace toml
}  // namespace rcc
