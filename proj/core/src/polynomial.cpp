#include "syzkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace syz {

int PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_poly_ring(uint32_t p, std::vector<std::string> vars) {
  if (!is_prime(p)) throw UsageError("coefficient modulus " + std::to_string(p) + " is not prime");
  if (vars.empty() || static_cast<int>(vars.size()) > kMaxVars)
    throw UsageError("variable count must be between 1 and " + std::to_string(kMaxVars));
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty() || !std::isalpha(static_cast<unsigned char>(vars[i][0])))
      throw UsageError("bad variable name '" + vars[i] + "'");
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw UsageError("duplicate variable name '" + vars[i] + "'");
  }
  auto r = std::make_shared<PolyRing>();
  r->p = p;
  r->vars = std::move(vars);
  return r;
}

Polynomial Polynomial::constant(uint32_t c, const PolyRing& ring) {
  c %= ring.p;
  if (c == 0) return Polynomial();
  return Polynomial({Term{Monomial::one(), c}});
}

Polynomial Polynomial::monomial_term(Monomial m, uint32_t c) {
  if (c == 0) return Polynomial();
  return Polynomial({Term{m, c}});
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no lead term");
  return terms_.front();
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().mon.degree(); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mon.degree();
  for (const Term& t : terms_)
    if (t.mon.degree() != d) return false;
  return true;
}

Polynomial poly_normalize(std::vector<Term> terms, const PolyRing& ring) {
  const int nv = ring.nvars();
  std::sort(terms.begin(), terms.end(), [nv](const Term& a, const Term& b) {
    return degrevlex_cmp(a.mon, b.mon, nv) > 0;
  });
  GF k = ring.field();
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coeff = k.add(out.back().coeff, t.coeff % ring.p);
      if (out.back().coeff == 0) out.pop_back();
    } else {
      uint32_t c = t.coeff % ring.p;
      if (c != 0) out.push_back(Term{t.mon, c});
    }
  }
  return Polynomial(std::move(out));
}

// Merge two descending term lists; bc scales b.
static Polynomial merge_scaled(const Polynomial& a, const Polynomial& b, uint32_t bc,
                               const PolyRing& ring) {
  const int nv = ring.nvars();
  GF k = ring.field();
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() || j < tb.size()) {
    int c;
    if (i == ta.size())
      c = -1;
    else if (j == tb.size())
      c = 1;
    else
      c = degrevlex_cmp(ta[i].mon, tb[j].mon, nv);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      uint32_t v = k.mul(tb[j].coeff, bc);
      if (v) out.push_back(Term{tb[j].mon, v});
      ++j;
    } else {
      uint32_t v = k.add(ta[i].coeff, k.mul(tb[j].coeff, bc));
      if (v) out.push_back(Term{ta[i].mon, v});
      ++i;
      ++j;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b, const PolyRing& ring) {
  return merge_scaled(a, b, 1, ring);
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b, const PolyRing& ring) {
  return merge_scaled(a, b, ring.field().neg(1), ring);
}

Polynomial poly_neg(const Polynomial& a, const PolyRing& ring) {
  return poly_scale(a, ring.field().neg(1), ring);
}

Polynomial poly_scale(const Polynomial& a, uint32_t c, const PolyRing& ring) {
  c %= ring.p;
  if (c == 0) return Polynomial();
  GF k = ring.field();
  std::vector<Term> out;
  out.reserve(a.terms().size());
  for (const Term& t : a.terms()) out.push_back(Term{t.mon, k.mul(t.coeff, c)});
  return Polynomial(std::move(out));
}

Polynomial poly_mul_term(const Polynomial& a, const Monomial& m, uint32_t c, const PolyRing& ring) {
  c %= ring.p;
  if (c == 0) return Polynomial();
  GF k = ring.field();
  std::vector<Term> out;
  out.reserve(a.terms().size());
  for (const Term& t : a.terms()) out.push_back(Term{t.mon * m, k.mul(t.coeff, c)});
  return Polynomial(std::move(out));  // multiplying by a fixed monomial preserves the order
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const PolyRing& ring) {
  Polynomial acc;
  for (const Term& t : a.terms()) acc = merge_scaled(acc, poly_mul_term(b, t.mon, 1, ring), t.coeff, ring);
  return acc;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
  const std::string& s;
  const PolyRing& ring;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw UsageError(msg + " at offset " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    if (pos - start > 18) fail("integer literal too long");
    return std::stoll(s.substr(start, pos - start));
  }

  // factor := integer | var ['^' integer]
  void parse_factor(Monomial& mon, uint32_t& coeff) {
    skip_ws();
    if (pos >= s.size()) fail("expected factor");
    GF k = ring.field();
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      long long v = parse_int();
      coeff = k.mul(coeff, k.reduce(v));
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(s[pos]))) fail("expected variable or integer");
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name = s.substr(start, pos - start);
    int v = ring.var_index(name);
    if (v < 0) {
      pos = start;
      fail("unknown variable '" + name + "'");
    }
    long long e = 1;
    if (eat('^')) e = parse_int();
    if (e < 0 || e > 512) fail("exponent out of range");
    mon.set_exponent(v, static_cast<uint16_t>(mon.exponent(v) + e));
  }

  // term := factor ('*' factor)*
  void parse_term(std::vector<Term>& terms, uint32_t sign) {
    Monomial mon;
    uint32_t coeff = sign;
    parse_factor(mon, coeff);
    while (eat('*')) parse_factor(mon, coeff);
    if (coeff != 0) terms.push_back(Term{mon, coeff});
  }

  Polynomial parse() {
    std::vector<Term> terms;
    GF k = ring.field();
    skip_ws();
    uint32_t sign = 1;
    if (eat('-'))
      sign = k.neg(1);
    else
      eat('+');
    parse_term(terms, sign);
    for (;;) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        sign = 1;
      else if (eat('-'))
        sign = k.neg(1);
      else
        fail("expected '+' or '-'");
      parse_term(terms, sign);
    }
    return poly_normalize(std::move(terms), ring);
  }
};

}  // namespace

Polynomial poly_parse(const std::string& text, const PolyRing& ring, size_t* error_pos) {
  // "0" parses through the integer path; fully blank input is rejected.
  Parser p{text, ring};
  try {
    return p.parse();
  } catch (const UsageError&) {
    if (error_pos) *error_pos = p.pos;
    throw;
  }
}

std::string poly_format(const Polynomial& a, const PolyRing& ring) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coeff != 1 || t.mon.is_one()) {
      os << t.coeff;
      wrote = true;
    }
    for (int v = 0; v < ring.nvars(); ++v) {
      if (t.mon.exponent(v) == 0) continue;
      if (wrote) os << "*";
      os << ring.vars[v];
      if (t.mon.exponent(v) > 1) os << "^" << t.mon.exponent(v);
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace syz
