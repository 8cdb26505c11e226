#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace levyflow {

/// Minimal TOML subset: comments, [table] / [[array-of-tables]] headers,
/// key = value with strings, numbers, booleans, and flat arrays. Enough for
/// config files; not a general TOML implementation.
struct TomlError : std::runtime_error {
  int line;
  TomlError(int ln, const std::string& msg)
      : std::runtime_error("toml: line " + std::to_string(ln) + ": " + msg),
        line(ln) {}
};

struct TomlValue {
  enum class Kind { String, Number, Boolean, Array };
  Kind kind = Kind::String;
  std::string str;                // String
  double num = 0;                 // Number
  std::string raw;                // Number: original spelling
  bool boolean = false;           // Boolean
  std::vector<TomlValue> array;   // Array
};

struct TomlTable {
  std::map<std::string, TomlValue> values;
  int line = 0;  // header line, 0 for the root table

  bool has(const std::string& key) const { return values.count(key) > 0; }
  const TomlValue& at(const std::string& key) const;
};

struct TomlDoc {
  TomlTable root;
  std::map<std::string, TomlTable> tables;
  std::map<std::string, std::vector<TomlTable>> table_arrays;
};

TomlDoc parse_toml(const std::string& text);
TomlDoc parse_toml_file(const std::string& path);

}  // namespace levyflow
