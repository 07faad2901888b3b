#include "quadrics/form_parser.hpp"

#include <cctype>
#include <map>

namespace quadrics {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
      throw ParseError("expected an integer", start);
    long long v = 0;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
      v = v * 10 + (text[pos] - '0');
      if (v > (1ll << 40)) throw ParseError("integer literal too large", start);
      ++pos;
    }
    return neg ? -v : v;
  }
};

struct Term {
  Fel coeff;
  std::vector<std::uint8_t> vars;  // sorted index multiset
  std::size_t start;               // for error reporting
  std::string text;
};

// coeff ::= integer | '[' integer (',' integer)* ']'
Fel parse_coeff(Cursor& c, const Field& field) {
  if (c.peek() == '[') {
    std::size_t start = c.pos;
    c.accept('[');
    std::vector<int> coeffs;
    do {
      long long v = c.integer();
      coeffs.push_back(int(((v % field.p()) + field.p()) % field.p()));
    } while (c.accept(','));
    if (!c.accept(']')) c.fail("expected ']' in coefficient vector");
    if (int(coeffs.size()) > field.m())
      throw ParseError("coefficient vector longer than the extension degree", start);
    return field.from_coeffs(coeffs);
  }
  return field.from_int(c.integer());
}

// factor ::= 'x' index ['^' exponent]
void parse_factor(Cursor& c, int n, std::vector<std::uint8_t>& vars) {
  c.accept('x');  // caller guaranteed
  std::size_t ipos = c.pos;
  if (!std::isdigit((unsigned char)c.peek())) c.fail("expected a variable index after 'x'");
  long long idx = c.integer();
  if (idx < 0 || idx > n)
    throw ParseError("variable index " + std::to_string(idx) + " out of range (n = " +
                         std::to_string(n) + ")",
                     ipos);
  int exp = 1;
  if (c.accept('^')) {
    std::size_t epos = c.pos;
    long long e = c.integer();
    if (e < 1 || e > 64) throw ParseError("exponent out of range", epos);
    exp = int(e);
  }
  for (int i = 0; i < exp; ++i) vars.push_back(std::uint8_t(idx));
}

std::vector<Term> parse_terms(std::string_view text, int n, const Field& field) {
  Cursor c{text};
  std::vector<Term> terms;
  if (c.eof()) c.fail("empty form");
  bool first = true;
  while (!c.eof()) {
    bool negate = false;
    if (c.accept('-'))
      negate = true;
    else if (c.accept('+')) {
      // explicit plus
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    first = false;

    Term t;
    t.start = c.pos;
    char head = c.peek();
    bool have_coeff = false;
    if (head == '[' || std::isdigit((unsigned char)head)) {
      t.coeff = parse_coeff(c, field);
      have_coeff = true;
    } else {
      t.coeff = field.one();
    }
    bool expect_factor = !have_coeff;
    while (true) {
      if (expect_factor || c.peek() == 'x') {
        if (c.peek() != 'x') c.fail("expected a variable");
        parse_factor(c, n, t.vars);
        expect_factor = false;
      }
      if (c.accept('*'))
        expect_factor = true;
      else
        break;
    }
    if (negate) t.coeff = field.neg(t.coeff);
    std::size_t end = std::min(c.pos, text.size());
    t.text = std::string(text.substr(t.start, end - t.start));
    std::sort(t.vars.begin(), t.vars.end());
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

Form parse_form(std::string_view text, int n, const Field& field) {
  auto terms = parse_terms(text, n, field);
  int degree = -1;
  for (const auto& t : terms) {
    if (degree < 0)
      degree = int(t.vars.size());
    else if (int(t.vars.size()) != degree)
      throw ParseError("inhomogeneous form: term '" + t.text + "' has degree " +
                           std::to_string(t.vars.size()) + ", expected " +
                           std::to_string(degree),
                       t.start);
  }
  if (degree < 1)
    throw ParseError("form must have degree >= 1", terms.front().start);

  Form f(field, n, degree);
  std::map<std::vector<std::uint8_t>, Fel> combined;
  for (const auto& t : terms) {
    auto& slot = combined[t.vars];
    slot = field.add(slot, t.coeff);
  }
  for (const auto& [mono, coeff] : combined) f.set_coeff(mono, coeff);
  if (f.is_zero()) throw ParseError("form is identically zero", 0);
  return f;
}

QuadraticForm parse_quadratic(std::string_view text, int n, const Field& field) {
  auto terms = parse_terms(text, n, field);
  for (const auto& t : terms)
    if (t.vars.size() != 2)
      throw ParseError("term '" + t.text + "' has degree " + std::to_string(t.vars.size()) +
                           " in a quadric context (degree 2 required)",
                       t.start);
  QuadraticForm f(field, n);
  for (const auto& t : terms) {
    int i = t.vars[0], j = t.vars[1];
    f.set_coeff(i, j, field.add(f.coeff(i, j), t.coeff));
  }
  if (f.is_zero()) throw ParseError("form is identically zero", 0);
  return f;
}

namespace {

std::string coeff_prefix(const Field& f, Fel c) {
  if (c == 1) return "";
  return f.str(c) + "*";
}

std::string mono_str(std::span<const std::uint8_t> vars) {
  std::string s;
  std::size_t i = 0;
  while (i < vars.size()) {
    std::size_t j = i;
    while (j < vars.size() && vars[j] == vars[i]) ++j;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(vars[i]);
    if (j - i > 1) {
      s += '^';
      s += std::to_string(j - i);
    }
    i = j;
  }
  return s;
}

}  // namespace

std::string print_form(const Form& f) {
  std::string s;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (f.coeffs()[k] == 0) continue;
    if (!s.empty()) s += '+';
    s += coeff_prefix(f.field(), f.coeffs()[k]);
    s += mono_str(f.monomials()[k]);
  }
  return s;
}

std::string print_quadratic(const QuadraticForm& f) {
  std::string s;
  for (int i = 0; i <= f.n(); ++i)
    for (int j = i; j <= f.n(); ++j) {
      Fel c = f.coeff(i, j);
      if (c == 0) continue;
      if (!s.empty()) s += '+';
      s += coeff_prefix(f.field(), c);
      std::uint8_t vars[2] = {std::uint8_t(i), std::uint8_t(j)};
      s += mono_str(vars);
    }
  return s;
}

}  // namespace quadrics
