#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "agpir/curve.hpp"
#include "agpir/field.hpp"

namespace agpir {

// Structured-text config: `key = value` lines, values are integers, bools,
// quoted strings, arrays [v, ...] or tables { key = value, ... }. '#' starts
// a comment. Newlines are insignificant inside brackets.
class ConfigValue {
 public:
  enum class Type { integer, boolean, string, array, table };

  Type type() const { return type_; }

  std::int64_t as_int() const;
  bool as_bool() const;
  const std::string& as_string() const;
  const std::vector<ConfigValue>& as_array() const;
  std::vector<std::int64_t> as_int_list() const;

  bool has(const std::string& key) const;
  const ConfigValue& at(const std::string& key) const;  // table access
  std::vector<std::string> keys() const;

  static ConfigValue make_int(std::int64_t v);
  static ConfigValue make_bool(bool v);
  static ConfigValue make_string(std::string v);
  static ConfigValue make_array(std::vector<ConfigValue> v);
  static ConfigValue make_table(std::map<std::string, ConfigValue> v);

 private:
  Type type_ = Type::integer;
  std::int64_t int_ = 0;
  bool bool_ = false;
  std::string str_;
  std::vector<ConfigValue> array_;
  std::map<std::string, ConfigValue> table_;
};

ConfigValue parse_config(const std::string& text);
ConfigValue parse_config_file(const std::string& path);

struct CurveConfig {
  int genus = 1;
  std::vector<std::int64_t> F, H;
  std::string label;
};

struct LsssConfig {
  std::string kind;  // "shamir" or "chen_cramer"
  std::size_t n_parties = 0;  // shamir
  std::size_t t = 0;
};

// Assembled scheme description: a field block, then a curve block or
// `genus0 = true` (or an lsss block for secret-sharing audits), plus the
// scheme parameters.
struct SchemeConfig {
  FieldSpec field;
  bool genus0 = false;
  std::optional<CurveConfig> curve;
  std::vector<CurveConfig> curves;  // rate sweeps accept a curve list
  std::optional<LsssConfig> lsss;
  std::size_t X = 0, T = 0, M = 4;
  std::optional<std::size_t> L;
  std::uint64_t seed = 0;
};

SchemeConfig load_scheme_config(const std::string& path);

Field field_from_config(const FieldSpec& spec);
HyperellipticCurve curve_from_config(const Field& field, const CurveConfig& cc);

}  // namespace agpir
