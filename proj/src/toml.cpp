#include "rcc/toml.hpp"

#include <cctype>
#include <charconv>

#include "rcc/io.hpp"

namespace rcc::toml {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') line++;
    return c;
  }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) pos++;
  }
  void skip_ws_and_comment() {
    skip_ws();
    if (!eof() && peek() == '#') {
      while (!eof() && peek() != '\n') pos++;
    }
  }
};

bool bare_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string parse_basic_string(Cursor& c) {
  int line = c.line;
  c.take();  // opening quote
  std::string out;
  while (true) {
    if (c.eof()) fail(line, "unterminated string");
    char ch = c.take();
    if (ch == '"') return out;
    if (ch == '\n') fail(line, "newline inside string");
    if (ch == '\\') {
      if (c.eof()) fail(line, "unterminated escape");
      char esc = c.take();
      switch (esc) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        default: fail(line, std::string("unsupported escape \\") + esc);
      }
    } else {
      out += ch;
    }
  }
}

std::string parse_key(Cursor& c) {
  if (!c.eof() && c.peek() == '"') return parse_basic_string(c);
  std::string key;
  while (!c.eof() && bare_key_char(c.peek())) key += c.take();
  if (key.empty()) fail(c.line, "expected a key");
  return key;
}

Value parse_scalar(Cursor& c) {
  int line = c.line;
  c.skip_ws();
  if (c.eof()) fail(line, "expected a value");
  if (c.peek() == '"') return Value{parse_basic_string(c)};

  std::string tok;
  while (!c.eof() && c.peek() != '\n' && c.peek() != '#' && c.peek() != ',' && c.peek() != ']')
    tok += c.take();
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.pop_back();
  if (tok.empty()) fail(line, "expected a value");

  if (tok == "true") return Value{true};
  if (tok == "false") return Value{false};

  std::string digits;
  for (char ch : tok)
    if (ch != '_') digits += ch;
  bool looks_float = digits.find_first_of(".eE") != std::string::npos;
  if (!looks_float) {
    int64_t iv = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), iv);
    if (ec == std::errc() && p == digits.data() + digits.size()) return Value{iv};
  }
  double dv = 0;
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), dv);
  if (ec == std::errc() && p == digits.data() + digits.size()) return Value{dv};
  fail(line, "cannot parse value '" + tok + "'");
}

Value parse_value(Cursor& c) {
  c.skip_ws();
  if (!c.eof() && c.peek() == '[') {
    int line = c.line;
    c.take();
    std::vector<double> arr;
    while (true) {
      c.skip_ws_and_comment();
      if (c.eof()) fail(line, "unterminated array");
      if (c.peek() == '\n') {
        c.take();
        continue;
      }
      if (c.peek() == ']') {
        c.take();
        return Value{arr};
      }
      Value v = parse_scalar(c);
      arr.push_back(v.as_double());
      c.skip_ws_and_comment();
      if (!c.eof() && c.peek() == ',') c.take();
    }
  }
  return parse_scalar(c);
}

}  // namespace

std::string Value::as_string() const {
  if (auto* s = std::get_if<std::string>(&data)) return *s;
  throw ConfigError("expected a string value");
}

int64_t Value::as_int() const {
  if (auto* i = std::get_if<int64_t>(&data)) return *i;
  throw ConfigError("expected an integer value");
}

double Value::as_double() const {
  if (auto* d = std::get_if<double>(&data)) return *d;
  if (auto* i = std::get_if<int64_t>(&data)) return double(*i);
  throw ConfigError("expected a numeric value");
}

bool Value::as_bool() const {
  if (auto* b = std::get_if<bool>(&data)) return *b;
  throw ConfigError("expected a boolean value");
}

std::vector<double> Value::as_double_array() const {
  if (auto* a = std::get_if<std::vector<double>>(&data)) return *a;
  throw ConfigError("expected an array value");
}

const Value& Document::at(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key '" + key + "'");
  return it->second;
}

std::string Document::get_string(const std::string& key, std::string fallback) const {
  return has(key) ? at(key).as_string() : fallback;
}
int64_t Document::get_int(const std::string& key, int64_t fallback) const {
  return has(key) ? at(key).as_int() : fallback;
}
double Document::get_double(const std::string& key, double fallback) const {
  return has(key) ? at(key).as_double() : fallback;
}
bool Document::get_bool(const std::string& key, bool fallback) const {
  return has(key) ? at(key).as_bool() : fallback;
}
std::vector<double> Document::get_double_array(const std::string& key,
                                               std::vector<double> fallback) const {
  return has(key) ? at(key).as_double_array() : fallback;
}

std::vector<std::pair<std::string, Value>> Document::entries(const std::string& table) const {
  std::vector<std::pair<std::string, Value>> out;
  std::string prefix = table + ".";
  for (const auto& [key, value] : values_) {
    if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0) continue;
    std::string rest = key.substr(prefix.size());
    if (rest.find('.') != std::string::npos) continue;  // deeper table
    out.emplace_back(rest, value);
  }
  return out;
}

Document parse(const std::string& text) {
  Document doc;
  Cursor c{text};
  std::string current_table;

  while (!c.eof()) {
    c.skip_ws_and_comment();
    if (c.eof()) break;
    char ch = c.peek();
    if (ch == '\n' || ch == '\r') {
      c.take();
      continue;
    }
    if (ch == '[') {
      int line = c.line;
      c.take();
      std::string name;
      c.skip_ws();
      while (!c.eof() && c.peek() != ']') {
        if (c.peek() == '"') {
          name += parse_basic_string(c);
        } else if (bare_key_char(c.peek()) || c.peek() == '.') {
          name += c.take();
        } else if (c.peek() == ' ' || c.peek() == '\t') {
          c.take();
        } else {
          fail(line, "bad character in table header");
        }
      }
      if (c.eof()) fail(line, "unterminated table header");
      c.take();  // ']'
      if (name.empty()) fail(line, "empty table name");
      current_table = name;
      c.skip_ws_and_comment();
      continue;
    }

    int line = c.line;
    std::string key = parse_key(c);
    c.skip_ws();
    if (c.eof() || c.take() != '=') fail(line, "expected '=' after key '" + key + "'");
    Value v = parse_value(c);
    c.skip_ws_and_comment();
    if (!c.eof() && c.peek() != '\n' && c.peek() != '\r')
      fail(line, "trailing characters after value for key '" + key + "'");
    std::string full = current_table.empty() ? key : current_table + "." + key;
    doc.set(std::move(full), std::move(v));
  }
  return doc;
}

Document parse_file(const std::string& path) {
  try {
    return parse(read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace rcc::toml
