#include "agpir/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace agpir {

std::int64_t ConfigValue::as_int() const {
  if (type_ != Type::integer) throw Error("config: expected an integer value");
  return int_;
}

bool ConfigValue::as_bool() const {
  if (type_ != Type::boolean) throw Error("config: expected a boolean value");
  return bool_;
}

const std::string& ConfigValue::as_string() const {
  if (type_ != Type::string) throw Error("config: expected a string value");
  return str_;
}

const std::vector<ConfigValue>& ConfigValue::as_array() const {
  if (type_ != Type::array) throw Error("config: expected an array value");
  return array_;
}

std::vector<std::int64_t> ConfigValue::as_int_list() const {
  std::vector<std::int64_t> out;
  for (const ConfigValue& v : as_array()) out.push_back(v.as_int());
  return out;
}

bool ConfigValue::has(const std::string& key) const {
  return type_ == Type::table && table_.count(key) != 0;
}

const ConfigValue& ConfigValue::at(const std::string& key) const {
  if (type_ != Type::table) throw Error("config: expected a table value");
  const auto it = table_.find(key);
  if (it == table_.end()) throw Error("config: missing key '" + key + "'");
  return it->second;
}

std::vector<std::string> ConfigValue::keys() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : table_) out.push_back(k);
  return out;
}

ConfigValue ConfigValue::make_int(std::int64_t v) {
  ConfigValue c;
  c.type_ = Type::integer;
  c.int_ = v;
  return c;
}
ConfigValue ConfigValue::make_bool(bool v) {
  ConfigValue c;
  c.type_ = Type::boolean;
  c.bool_ = v;
  return c;
}
ConfigValue ConfigValue::make_string(std::string v) {
  ConfigValue c;
  c.type_ = Type::string;
  c.str_ = std::move(v);
  return c;
}
ConfigValue ConfigValue::make_array(std::vector<ConfigValue> v) {
  ConfigValue c;
  c.type_ = Type::array;
  c.array_ = std::move(v);
  return c;
}
ConfigValue ConfigValue::make_table(std::map<std::string, ConfigValue> v) {
  ConfigValue c;
  c.type_ = Type::table;
  c.table_ = std::move(v);
  return c;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ConfigValue parse_top() {
    std::map<std::string, ConfigValue> table;
    skip_space(true);
    while (!eof()) {
      const std::string key = parse_key();
      skip_space(false);
      expect('=');
      skip_space(false);
      table.insert_or_assign(key, parse_value());
      skip_space(false);
      if (!eof() && peek() != '\n') fail("expected end of line after value");
      skip_space(true);
    }
    return ConfigValue::make_table(std::move(table));
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void fail(const std::string& message) const {
    throw Error("config: line " + std::to_string(line_) + ": " + message);
  }

  void advance() {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  // Comments count as space; newlines only when allowed.
  void skip_space(bool newlines) {
    while (!eof()) {
      const char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '\n' && newlines) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string parse_key() {
    if (eof() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected a key");
    }
    std::string key;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      key.push_back(peek());
      advance();
    }
    return key;
  }

  ConfigValue parse_value() {
    if (eof()) fail("expected a value");
    const char c = peek();
    if (c == '[') return parse_array();
    if (c == '{') return parse_table();
    if (c == '"') return parse_string();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_int();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string word = parse_key();
      if (word == "true") return ConfigValue::make_bool(true);
      if (word == "false") return ConfigValue::make_bool(false);
      fail("unknown literal '" + word + "'");
    }
    fail("unexpected character");
    return {};
  }

  ConfigValue parse_int() {
    std::string digits;
    if (peek() == '-') {
      digits.push_back('-');
      advance();
    }
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    if (digits.empty() || digits == "-") fail("malformed integer");
    return ConfigValue::make_int(std::stoll(digits));
  }

  ConfigValue parse_string() {
    expect('"');
    std::string s;
    while (!eof() && peek() != '"') {
      if (peek() == '\n') fail("unterminated string");
      s.push_back(peek());
      advance();
    }
    expect('"');
    return ConfigValue::make_string(std::move(s));
  }

  ConfigValue parse_array() {
    expect('[');
    std::vector<ConfigValue> items;
    skip_space(true);
    while (!eof() && peek() != ']') {
      items.push_back(parse_value());
      skip_space(true);
      if (!eof() && peek() == ',') {
        advance();
        skip_space(true);
      }
    }
    expect(']');
    return ConfigValue::make_array(std::move(items));
  }

  ConfigValue parse_table() {
    expect('{');
    std::map<std::string, ConfigValue> table;
    skip_space(true);
    while (!eof() && peek() != '}') {
      const std::string key = parse_key();
      skip_space(true);
      expect('=');
      skip_space(true);
      table.insert_or_assign(key, parse_value());
      skip_space(true);
      if (!eof() && peek() == ',') {
        advance();
        skip_space(true);
      }
    }
    expect('}');
    return ConfigValue::make_table(std::move(table));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

std::size_t to_size(std::int64_t v, const std::string& what) {
  if (v < 0) throw Error("config: " + what + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

CurveConfig curve_config_from(const ConfigValue& v) {
  CurveConfig cc;
  cc.genus = static_cast<int>(v.at("g").as_int());
  cc.F = v.at("F").as_int_list();
  cc.H = v.has("H") ? v.at("H").as_int_list() : std::vector<std::int64_t>{};
  if (v.has("label")) cc.label = v.at("label").as_string();
  return cc;
}

}  // namespace

ConfigValue parse_config(const std::string& text) { return Parser(text).parse_top(); }

ConfigValue parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("config: cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

SchemeConfig load_scheme_config(const std::string& path) {
  const ConfigValue top = parse_config_file(path);
  SchemeConfig sc;

  const ConfigValue& fv = top.at("field");
  sc.field.p = static_cast<std::uint32_t>(fv.at("p").as_int());
  sc.field.m = fv.has("m") ? static_cast<std::uint32_t>(fv.at("m").as_int()) : 1;
  if (fv.has("modulus")) {
    for (const std::int64_t c : fv.at("modulus").as_int_list()) {
      sc.field.modulus.push_back(static_cast<std::uint32_t>(c));
    }
  }

  if (top.has("genus0")) sc.genus0 = top.at("genus0").as_bool();
  if (top.has("curve")) sc.curve = curve_config_from(top.at("curve"));
  if (top.has("curves")) {
    for (const ConfigValue& cv : top.at("curves").as_array()) {
      sc.curves.push_back(curve_config_from(cv));
    }
  }
  if (top.has("lsss")) {
    const ConfigValue& lv = top.at("lsss");
    LsssConfig lc;
    lc.kind = lv.at("kind").as_string();
    lc.t = to_size(lv.at("T").as_int(), "lsss.T");
    if (lv.has("N")) lc.n_parties = to_size(lv.at("N").as_int(), "lsss.N");
    sc.lsss = lc;
  }

  if (top.has("X")) sc.X = to_size(top.at("X").as_int(), "X");
  if (top.has("T")) sc.T = to_size(top.at("T").as_int(), "T");
  if (top.has("M")) sc.M = to_size(top.at("M").as_int(), "M");
  if (top.has("L")) sc.L = to_size(top.at("L").as_int(), "L");
  if (top.has("seed")) sc.seed = static_cast<std::uint64_t>(top.at("seed").as_int());
  return sc;
}

Field field_from_config(const FieldSpec& spec) { return Field(spec); }

HyperellipticCurve curve_from_config(const Field& field, const CurveConfig& cc) {
  auto to_poly = [&](const std::vector<std::int64_t>& coefs) {
    std::vector<FieldElem> c;
    for (const std::int64_t v : coefs) {
      if (v < 0 || !field.is_element(static_cast<std::uint64_t>(v))) {
        throw Error("config: coefficient " + std::to_string(v) + " is not a canonical element");
      }
      c.push_back(static_cast<FieldElem>(v));
    }
    return Poly{std::move(c)};
  };
  return HyperellipticCurve(field, cc.genus, to_poly(cc.F), to_poly(cc.H));
}

}  // namespace agpir
