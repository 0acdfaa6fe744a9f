#include "sympow/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace sympow {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(col),
                     line, col);
  }

  std::uint64_t integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (v > (std::uint64_t(1) << 62)) fail("integer literal too large");
      advance();
    }
    return v;
  }

  std::string identifier() {
    skip_ws();
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected variable name");
    std::string name;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      name += text[pos];
      advance();
    }
    return name;
  }
};

// term := integer ('*' varpow)* | varpow ('*' varpow)*
// varpow := ident ('^' integer)?
void parse_term(Cursor& cur, const RingPtr& ring, Polynomial& out,
                bool negative) {
  std::uint64_t coeff = 1;
  Exponents exps(ring->nvars(), 0);
  bool saw_factor = false;

  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    coeff = cur.integer() % ring->characteristic();
    saw_factor = true;
    if (cur.peek() != '*') {
      // bare integer term
      if (negative) coeff = (ring->characteristic() - coeff % ring->characteristic()) % ring->characteristic();
      out.add_term(exps, coeff);
      return;
    }
    cur.advance();  // consume '*'
  }

  while (true) {
    std::string name = cur.identifier();
    int idx = ring->index_of(name);
    if (idx < 0) cur.fail("undeclared variable '" + name + "'");
    long long k = 1;
    if (cur.peek() == '^') {
      cur.advance();
      k = static_cast<long long>(cur.integer());
      if (k > (1 << 20)) cur.fail("exponent too large");
    }
    exps[static_cast<std::size_t>(idx)] += static_cast<int>(k);
    saw_factor = true;
    if (cur.peek() != '*') break;
    cur.advance();
  }

  if (!saw_factor) cur.fail("expected term");
  if (negative)
    coeff = (ring->characteristic() - coeff) % ring->characteristic();
  out.add_term(exps, coeff);
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  Cursor cur{text};
  Polynomial out(ring);
  if (cur.done()) cur.fail("empty polynomial");

  bool negative = false;
  if (cur.peek() == '-') {
    negative = true;
    cur.advance();
  } else if (cur.peek() == '+') {
    cur.advance();
  }
  parse_term(cur, ring, out, negative);
  while (!cur.done()) {
    char c = cur.peek();
    if (c == '+') {
      negative = false;
    } else if (c == '-') {
      negative = true;
    } else {
      cur.fail("expected '+' or '-'");
    }
    cur.advance();
    parse_term(cur, ring, out, negative);
  }
  return out;
}

std::string monomial_to_string(const RingPtr& ring, const Exponents& u) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!first) os << '*';
    os << ring->variables()[i];
    if (u[i] != 1) os << '^' << u[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  // terms printed in descending grevlex order
  std::vector<const std::pair<const Exponents, std::uint64_t>*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  MonomialOrder ord = MonomialOrder::grevlex();
  std::sort(terms.begin(), terms.end(),
            [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });

  std::ostringstream os;
  bool first = true;
  for (auto* t : terms) {
    if (!first) os << " + ";
    const bool is_const = exp_total_degree(t->first) == 0;
    if (t->second != 1 || is_const) {
      os << t->second;
      if (!is_const) os << '*';
    }
    if (!is_const) os << monomial_to_string(f.ring(), t->first);
    first = false;
  }
  return os.str();
}

}  // namespace sympow
