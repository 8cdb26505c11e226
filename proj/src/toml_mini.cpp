#include "levyflow/toml_mini.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace levyflow {

const TomlValue& TomlTable::at(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end())
    throw TomlError(line, "missing required key '" + key + "'");
  return it->second;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  int line;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw TomlError(line, msg);
  }
};

std::string parse_string(Cursor& c) {
  ++c.pos;  // opening quote
  std::string out;
  while (!c.done() && c.peek() != '"') {
    char ch = c.s[c.pos++];
    if (ch == '\\') {
      if (c.done()) c.fail("unterminated escape");
      char esc = c.s[c.pos++];
      switch (esc) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        default: c.fail(std::string("unsupported escape \\") + esc);
      }
    } else {
      out += ch;
    }
  }
  if (c.done()) c.fail("unterminated string");
  ++c.pos;  // closing quote
  return out;
}

TomlValue parse_value(Cursor& c);

TomlValue parse_array(Cursor& c) {
  TomlValue v;
  v.kind = TomlValue::Kind::Array;
  ++c.pos;  // '['
  c.skip_ws();
  if (!c.done() && c.peek() == ']') {
    ++c.pos;
    return v;
  }
  while (true) {
    c.skip_ws();
    v.array.push_back(parse_value(c));
    c.skip_ws();
    if (c.done()) c.fail("unterminated array");
    char ch = c.s[c.pos++];
    if (ch == ']') break;
    if (ch != ',') c.fail("expected ',' or ']' in array");
  }
  return v;
}

TomlValue parse_value(Cursor& c) {
  c.skip_ws();
  if (c.done()) c.fail("expected a value");
  char ch = c.peek();
  if (ch == '"') {
    TomlValue v;
    v.kind = TomlValue::Kind::String;
    v.str = parse_string(c);
    return v;
  }
  if (ch == '[') return parse_array(c);
  std::size_t start = c.pos;
  while (!c.done() && c.peek() != ',' && c.peek() != ']' && c.peek() != '#' &&
         c.peek() != ' ' && c.peek() != '\t')
    ++c.pos;
  std::string token = c.s.substr(start, c.pos - start);
  if (token.empty()) c.fail("expected a value");
  if (token == "true" || token == "false") {
    TomlValue v;
    v.kind = TomlValue::Kind::Boolean;
    v.boolean = token == "true";
    return v;
  }
  TomlValue v;
  v.kind = TomlValue::Kind::Number;
  v.raw = token;
  try {
    std::size_t used = 0;
    v.num = std::stod(token, &used);
    if (used != token.size()) c.fail("malformed number '" + token + "'");
  } catch (const TomlError&) {
    throw;
  } catch (const std::exception&) {
    c.fail("malformed number '" + token + "'");
  }
  return v;
}

std::string parse_key(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (!c.done() &&
         (std::isalnum(static_cast<unsigned char>(c.peek())) ||
          c.peek() == '_' || c.peek() == '-' || c.peek() == '.'))
    ++c.pos;
  if (c.pos == start) c.fail("expected a key");
  return c.s.substr(start, c.pos - start);
}

}  // namespace

TomlDoc parse_toml(const std::string& text) {
  TomlDoc doc;
  TomlTable* current = &doc.root;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    Cursor c{raw, 0, lineno};
    c.skip_ws();
    if (c.done() || c.peek() == '#') continue;
    if (c.peek() == '[') {
      bool is_array = c.pos + 1 < raw.size() && raw[c.pos + 1] == '[';
      c.pos += is_array ? 2 : 1;
      std::string name = parse_key(c);
      c.skip_ws();
      std::string closer = is_array ? "]]" : "]";
      if (raw.compare(c.pos, closer.size(), closer) != 0)
        c.fail("malformed table header");
      c.pos += closer.size();
      c.skip_ws();
      if (!c.done() && c.peek() != '#') c.fail("trailing text after header");
      if (is_array) {
        doc.table_arrays[name].push_back(TomlTable{{}, lineno});
        current = &doc.table_arrays[name].back();
      } else {
        if (doc.tables.count(name)) c.fail("duplicate table '" + name + "'");
        doc.tables[name] = TomlTable{{}, lineno};
        current = &doc.tables[name];
      }
      continue;
    }
    std::string key = parse_key(c);
    c.skip_ws();
    if (c.done() || c.peek() != '=') c.fail("expected '=' after key");
    ++c.pos;
    TomlValue value = parse_value(c);
    c.skip_ws();
    if (!c.done() && c.peek() != '#') c.fail("trailing text after value");
    if (current->values.count(key)) c.fail("duplicate key '" + key + "'");
    current->values[key] = std::move(value);
  }
  return doc;
}

TomlDoc parse_toml_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_toml(buf.str());
}

}  // namespace levyflow
