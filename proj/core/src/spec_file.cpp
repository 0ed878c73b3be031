#include "syzkit/spec_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

struct TomlValue {
  enum class Kind { Int, Str, Array };
  Kind kind = Kind::Int;
  long long i = 0;
  std::string s;
  std::vector<TomlValue> arr;
  int line = 0, col = 0;
};

// Just enough TOML: [tables], key = value, integers, basic strings, nested
// arrays (multi-line allowed), '#' comments.
class TomlParser {
 public:
  TomlParser(const std::string& text, const std::string& origin)
      : text_(text), origin_(origin) {}

  std::map<std::string, std::map<std::string, TomlValue>> parse() {
    std::map<std::string, std::map<std::string, TomlValue>> out;
    std::string table;
    skip_noise();
    while (!eof()) {
      if (peek() == '[') {
        get();
        table = ident();
        skip_ws();
        expect(']');
        end_of_line();
      } else {
        std::string key = ident();
        skip_ws();
        expect('=');
        skip_ws();
        TomlValue v = value();
        end_of_line();
        if (table.empty()) fail("key outside of a table");
        if (out[table].count(key)) fail("duplicate key '" + key + "'");
        out[table][key] = std::move(v);
      }
      skip_noise();
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << origin_ << ":" << line_ << ":" << col_ << ": " << msg;
    throw UsageError(os.str());
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) get();
  }

  // Whitespace, newlines and comments between statements.
  void skip_noise() {
    for (;;) {
      skip_ws();
      if (eof()) return;
      if (peek() == '#') {
        while (!eof() && peek() != '\n') get();
      } else if (peek() == '\n') {
        get();
      } else {
        return;
      }
    }
  }

  // Whitespace and comments inside arrays, where newlines are allowed.
  void skip_inline_noise() { skip_noise(); }

  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  void end_of_line() {
    skip_ws();
    if (!eof() && peek() == '#')
      while (!eof() && peek() != '\n') get();
    if (!eof()) {
      if (peek() != '\n') fail("trailing characters");
      get();
    }
  }

  std::string ident() {
    skip_ws();
    if (eof() || !(std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected identifier");
    std::string s;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      s += get();
    return s;
  }

  TomlValue value() {
    TomlValue v;
    v.line = line_;
    v.col = col_;
    if (eof()) fail("expected value");
    char c = peek();
    if (c == '"') {
      get();
      v.kind = TomlValue::Kind::Str;
      while (!eof() && peek() != '"') {
        if (peek() == '\n') fail("unterminated string");
        v.s += get();
      }
      expect('"');
      return v;
    }
    if (c == '[') {
      get();
      v.kind = TomlValue::Kind::Array;
      skip_inline_noise();
      if (!eof() && peek() == ']') {
        get();
        return v;
      }
      for (;;) {
        skip_inline_noise();
        v.arr.push_back(value());
        skip_inline_noise();
        if (!eof() && peek() == ',') {
          get();
          skip_inline_noise();
          if (!eof() && peek() == ']') {  // trailing comma
            get();
            return v;
          }
          continue;
        }
        expect(']');
        return v;
      }
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      if (c == '-') s += get();
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
      if (s.empty() || s == "-") fail("expected integer");
      if (s.size() > 18) fail("integer literal too long");
      v.kind = TomlValue::Kind::Int;
      v.i = std::stoll(s);
      return v;
    }
    fail("expected integer, string or array");
  }

  const std::string& text_;
  std::string origin_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

struct SpecReader {
  const std::string& origin;
  std::map<std::string, std::map<std::string, TomlValue>> tables;

  [[noreturn]] void fail_at(const TomlValue& v, const std::string& msg) const {
    std::ostringstream os;
    os << origin << ":" << v.line << ":" << v.col << ": " << msg;
    throw UsageError(os.str());
  }

  const TomlValue* find(const std::string& table, const std::string& key) const {
    auto t = tables.find(table);
    if (t == tables.end()) return nullptr;
    auto k = t->second.find(key);
    return k == t->second.end() ? nullptr : &k->second;
  }

  const TomlValue& need(const std::string& table, const std::string& key) const {
    const TomlValue* v = find(table, key);
    if (!v) throw UsageError(origin + ": missing required key [" + table + "] " + key);
    return *v;
  }

  long long integer(const TomlValue& v) const {
    if (v.kind != TomlValue::Kind::Int) fail_at(v, "expected an integer");
    return v.i;
  }

  std::string str(const TomlValue& v) const {
    if (v.kind != TomlValue::Kind::Str) fail_at(v, "expected a string");
    return v.s;
  }

  std::vector<std::string> string_array(const TomlValue& v) const {
    if (v.kind != TomlValue::Kind::Array) fail_at(v, "expected an array");
    std::vector<std::string> out;
    for (const TomlValue& e : v.arr) out.push_back(str(e));
    return out;
  }

  std::vector<long long> int_array(const TomlValue& v) const {
    if (v.kind != TomlValue::Kind::Array) fail_at(v, "expected an array");
    std::vector<long long> out;
    for (const TomlValue& e : v.arr) out.push_back(integer(e));
    return out;
  }
};

std::string stem_of(const std::string& path) {
  size_t slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

ExampleSpec parse_spec_text(const std::string& text, const std::string& name) {
  TomlParser parser(text, name);
  SpecReader r{name, parser.parse()};

  ExampleSpec spec;
  spec.name = name;

  long long p = r.integer(r.need("ring", "p"));
  if (p < 2 || p > 0x7fffffff) throw UsageError(name + ": modulus out of range");
  spec.p = static_cast<uint32_t>(p);
  spec.vars = r.string_array(r.need("ring", "vars"));
  if (const TomlValue* f = r.find("ring", "f")) spec.f_text = r.string_array(*f);

  long long rank = r.integer(r.need("module", "rank"));
  if (rank < 0 || rank > 4096) throw UsageError(name + ": module rank out of range");
  spec.rank = static_cast<int>(rank);
  if (const TomlValue* s = r.find("module", "shifts")) {
    for (long long v : r.int_array(*s)) spec.shifts.push_back(static_cast<int>(v));
    if (static_cast<int>(spec.shifts.size()) != spec.rank)
      r.fail_at(*s, "shifts length must equal rank");
  } else {
    spec.shifts.assign(spec.rank, 0);
  }
  if (const TomlValue* rel = r.find("module", "relations")) {
    if (rel->kind != TomlValue::Kind::Array) r.fail_at(*rel, "expected an array of columns");
    for (const TomlValue& col : rel->arr) {
      std::vector<std::string> entries = r.string_array(col);
      if (static_cast<int>(entries.size()) != spec.rank)
        r.fail_at(col, "relation column length must equal rank");
      spec.relation_columns.push_back(std::move(entries));
    }
  }

  auto opt_int = [&](const char* key, int def, int lo, int hi) {
    const TomlValue* v = r.find("analysis", key);
    if (!v) return def;
    long long x = r.integer(*v);
    if (x < lo || x > hi) r.fail_at(*v, std::string(key) + " out of range");
    return static_cast<int>(x);
  };
  spec.steps = opt_int("steps", 12, 1, 64);
  spec.degree_bound = opt_int("degree_bound", 12, 1, 64);
  spec.period = opt_int("period", 2, 1, 8);
  spec.trials = opt_int("trials", 20, 1, 100000);
  if (const TomlValue* v = r.find("analysis", "seed"))
    spec.seed = static_cast<uint64_t>(r.integer(*v));
  return spec;
}

ExampleSpec parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open spec file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  ExampleSpec spec = parse_spec_text(ss.str(), path);
  spec.name = stem_of(path);
  return spec;
}

ModelObjects build_model(const ExampleSpec& spec) {
  RingPtr q = make_poly_ring(spec.p, spec.vars);
  std::vector<Polynomial> f;
  for (const std::string& s : spec.f_text) {
    try {
      f.push_back(poly_parse(s, *q));
    } catch (const UsageError& e) {
      throw UsageError(spec.name + ": in ring relation '" + s + "': " + e.what());
    }
  }
  CIRing ring = make_ring(q, std::move(f));

  std::vector<std::vector<Polynomial>> columns;
  for (const auto& col : spec.relation_columns) {
    std::vector<Polynomial> ps;
    for (const std::string& s : col) {
      try {
        ps.push_back(poly_parse(s, *q));
      } catch (const UsageError& e) {
        throw UsageError(spec.name + ": in module relation '" + s + "': " + e.what());
      }
    }
    columns.push_back(std::move(ps));
  }
  Presentation module = present(ring, spec.shifts, columns);
  return ModelObjects{std::move(ring), std::move(module)};
}

}  // namespace syz
