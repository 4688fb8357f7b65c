#pragma once

// Concrete syntax for finite and tail-marked nested radicals.
//
//   expr    := sum ;
//   sum     := product { "+" product } ;
//   product := power { "*" power } ;
//   power   := atom [ "^" integer ] ;
//   atom    := number | "root" "(" integer "," expr ")" | "(" expr ")" | "..." ;
//   number  := integer [ "/" integer ] ;
//   integer := digit { digit } ;
//
// Whitespace between tokens is ignored; "..." is a single token lexing to
// the tail marker.  The tail may appear at most once, and only inside the
// innermost root.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radix/errors.hpp"
#include "radix/numeric.hpp"
#include "radix/radical.hpp"

namespace radix {

class rad_expr {
 public:
  enum class kind { number, sum, product, power, root, tail };

  static rad_expr number(rational v) {
    rad_expr e(kind::number);
    e.value_ = std::move(v);
    return e;
  }

  // n-ary constructors collapse a single operand to the operand itself, the
  // same shape the parser produces.
  static rad_expr sum(std::vector<rad_expr> terms) {
    if (terms.empty()) throw std::invalid_argument("empty sum");
    if (terms.size() == 1) return std::move(terms.front());
    rad_expr e(kind::sum);
    e.kids_ = std::move(terms);
    return e;
  }

  static rad_expr product(std::vector<rad_expr> factors) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    if (factors.size() == 1) return std::move(factors.front());
    rad_expr e(kind::product);
    e.kids_ = std::move(factors);
    return e;
  }

  static rad_expr power(rad_expr base, std::uint32_t exponent) {
    rad_expr e(kind::power);
    e.exponent_ = exponent;
    e.kids_.push_back(std::move(base));
    return e;
  }

  static rad_expr root(std::uint32_t degree, rad_expr body) {
    if (degree < 2) throw std::invalid_argument("root degree must be >= 2");
    rad_expr e(kind::root);
    e.degree_ = degree;
    e.kids_.push_back(std::move(body));
    return e;
  }

  static rad_expr tail() { return rad_expr(kind::tail); }

  kind which() const { return kind_; }
  const rational& value() const { return value_; }
  std::uint32_t exponent() const { return exponent_; }
  std::uint32_t degree() const { return degree_; }
  const std::vector<rad_expr>& children() const { return kids_; }
  const rad_expr& base() const { return kids_.front(); }
  const rad_expr& body() const { return kids_.front(); }

  friend bool operator==(const rad_expr& a, const rad_expr& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case kind::number:
        return a.value_ == b.value_;
      case kind::power:
        return a.exponent_ == b.exponent_ && a.kids_ == b.kids_;
      case kind::root:
        return a.degree_ == b.degree_ && a.kids_ == b.kids_;
      case kind::tail:
        return true;
      default:
        return a.kids_ == b.kids_;
    }
  }
  friend bool operator!=(const rad_expr& a, const rad_expr& b) {
    return !(a == b);
  }

 private:
  explicit rad_expr(kind k) : kind_(k) {}

  kind kind_;
  rational value_;
  std::uint32_t exponent_ = 0;
  std::uint32_t degree_ = 0;
  std::vector<rad_expr> kids_;
};

namespace detail {

enum class tok {
  integer,
  root_kw,
  lparen,
  rparen,
  comma,
  plus,
  star,
  caret,
  slash,
  ellipsis,
  end
};

inline const char* tok_name(tok t) {
  switch (t) {
    case tok::integer: return "integer";
    case tok::root_kw: return "'root'";
    case tok::lparen: return "'('";
    case tok::rparen: return "')'";
    case tok::comma: return "','";
    case tok::plus: return "'+'";
    case tok::star: return "'*'";
    case tok::caret: return "'^'";
    case tok::slash: return "'/'";
    case tok::ellipsis: return "'...'";
    case tok::end: return "end of input";
  }
  return "?";
}

struct token {
  tok type;
  bigint value;  // integer tokens
  int line;
  int column;
  std::size_t begin;  // byte offsets into the source, for mutation tests
  std::size_t length;
};

inline std::vector<token> lex(std::string_view text) {
  std::vector<token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(1);
      continue;
    }
    token t{tok::end, 0, line, col, i, 1};
    if (c >= '0' && c <= '9') {
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      t.type = tok::integer;
      t.value = bigint(std::string(text.substr(i, j - i)));
      t.length = j - i;
      out.push_back(t);
      bump(j - i);
      continue;
    }
    if (c == '.') {
      if (text.substr(i, 3) != "...")
        throw syntax_error("stray '.' (expected '...')", line, col, "'...'");
      t.type = tok::ellipsis;
      t.length = 3;
      out.push_back(t);
      bump(3);
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      std::size_t j = i;
      while (j < text.size() && ((text[j] >= 'a' && text[j] <= 'z') ||
                                 (text[j] >= 'A' && text[j] <= 'Z')))
        ++j;
      std::string word(text.substr(i, j - i));
      if (word != "root")
        throw syntax_error("unknown word '" + word + "'", line, col, "'root'");
      t.type = tok::root_kw;
      t.length = j - i;
      out.push_back(t);
      bump(j - i);
      continue;
    }
    switch (c) {
      case '(': t.type = tok::lparen; break;
      case ')': t.type = tok::rparen; break;
      case ',': t.type = tok::comma; break;
      case '+': t.type = tok::plus; break;
      case '*': t.type = tok::star; break;
      case '^': t.type = tok::caret; break;
      case '/': t.type = tok::slash; break;
      default:
        throw syntax_error(std::string("unexpected character '") + c + "'",
                           line, col);
    }
    out.push_back(t);
    bump(1);
  }
  out.push_back(token{tok::end, 0, line, col, text.size(), 0});
  return out;
}

class parser {
 public:
  explicit parser(std::vector<token> tokens) : toks_(std::move(tokens)) {}

  rad_expr run() {
    rad_expr e = parse_sum();
    expect(tok::end);
    return e;
  }

 private:
  const token& peek() const { return toks_[pos_]; }
  token take() { return toks_[pos_++]; }
  bool accept(tok t) {
    if (peek().type == t) {
      ++pos_;
      return true;
    }
    return false;
  }
  token expect(tok t) {
    if (peek().type != t) fail(tok_name(t));
    return take();
  }
  [[noreturn]] void fail(const std::string& expected) const {
    const token& t = peek();
    throw syntax_error("expected " + expected + ", found " +
                           std::string(tok_name(t.type)),
                       t.line, t.column, expected);
  }

  std::uint32_t bounded_integer(const char* what) {
    const token& t = peek();
    if (t.type != tok::integer) fail("integer");
    if (t.value < 0 || t.value > 0x7fffffff)
      throw syntax_error(std::string(what) + " out of range", t.line, t.column,
                         "integer");
    ++pos_;
    return t.value.convert_to<std::uint32_t>();
  }

  rad_expr parse_sum() {
    std::vector<rad_expr> terms;
    terms.push_back(parse_product());
    while (accept(tok::plus)) terms.push_back(parse_product());
    return rad_expr::sum(std::move(terms));
  }

  rad_expr parse_product() {
    std::vector<rad_expr> factors;
    factors.push_back(parse_power());
    while (accept(tok::star)) factors.push_back(parse_power());
    return rad_expr::product(std::move(factors));
  }

  rad_expr parse_power() {
    rad_expr base = parse_atom();
    if (accept(tok::caret))
      return rad_expr::power(std::move(base), bounded_integer("exponent"));
    return base;
  }

  rad_expr parse_atom() {
    const token& t = peek();
    switch (t.type) {
      case tok::integer: {
        bigint num = take().value;
        if (accept(tok::slash)) {
          const token& d = peek();
          if (d.type != tok::integer) fail("integer");
          bigint den = take().value;
          if (den == 0)
            throw syntax_error("zero denominator", d.line, d.column);
          return rad_expr::number(rational(num, den));
        }
        return rad_expr::number(rational(num));
      }
      case tok::root_kw: {
        take();
        expect(tok::lparen);
        const token& dt = peek();
        std::uint32_t degree = bounded_integer("root degree");
        if (degree < 2)
          throw syntax_error("root degree must be >= 2", dt.line, dt.column);
        expect(tok::comma);
        rad_expr body = parse_sum();
        expect(tok::rparen);
        return rad_expr::root(degree, std::move(body));
      }
      case tok::lparen: {
        take();
        rad_expr e = parse_sum();
        expect(tok::rparen);
        return e;
      }
      case tok::ellipsis:
        take();
        return rad_expr::tail();
      default:
        fail("integer, 'root', '(' or '...'");
    }
  }

  std::vector<token> toks_;
  std::size_t pos_ = 0;
};

struct tail_info {
  int count = 0;
  bool contains_root = false;
  bool unenclosed_tail = false;
};

inline tail_info validate_tail(const rad_expr& e) {
  tail_info info;
  if (e.which() == rad_expr::kind::tail) {
    info.count = 1;
    info.unenclosed_tail = true;
    return info;
  }
  for (const rad_expr& child : e.children()) {
    tail_info ci = validate_tail(child);
    info.count += ci.count;
    info.contains_root |= ci.contains_root;
    info.unenclosed_tail |= ci.unenclosed_tail;
  }
  if (info.count > 1)
    throw tail_placement_error("'...' appears more than once");
  if (e.which() == rad_expr::kind::root) {
    if (info.unenclosed_tail && info.contains_root)
      throw tail_placement_error(
          "'...' must sit in the innermost root of its chain");
    info.unenclosed_tail = false;
    info.contains_root = true;
  }
  return info;
}

}  // namespace detail

inline rad_expr parse(std::string_view text) {
  detail::parser p(detail::lex(text));
  rad_expr e = p.run();
  detail::tail_info info = detail::validate_tail(e);
  if (info.unenclosed_tail)
    throw tail_placement_error("'...' outside any root");
  return e;
}

// --- Printing ---------------------------------------------------------------

namespace detail {

// Binding strength used for parenthesization: sum < product < power < atom.
inline int binding_level(const rad_expr& e) {
  switch (e.which()) {
    case rad_expr::kind::sum: return 0;
    case rad_expr::kind::product: return 1;
    case rad_expr::kind::power: return 2;
    default: return 3;
  }
}

inline std::string number_text(const rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

inline std::string text_of(const rad_expr& e, int min_level) {
  std::string out;
  if (binding_level(e) < min_level)
    return "(" + text_of(e, 0) + ")";
  switch (e.which()) {
    case rad_expr::kind::number:
      return number_text(e.value());
    case rad_expr::kind::sum: {
      bool first = true;
      for (const rad_expr& t : e.children()) {
        if (!first) out += " + ";
        out += text_of(t, 1);
        first = false;
      }
      return out;
    }
    case rad_expr::kind::product: {
      bool first = true;
      for (const rad_expr& f : e.children()) {
        if (!first) out += " * ";
        out += text_of(f, 2);
        first = false;
      }
      return out;
    }
    case rad_expr::kind::power:
      return text_of(e.base(), 3) + "^" + std::to_string(e.exponent());
    case rad_expr::kind::root:
      return "root(" + std::to_string(e.degree()) + ", " +
             text_of(e.body(), 0) + ")";
    case rad_expr::kind::tail:
      return "...";
  }
  return out;
}

inline std::string latex_of(const rad_expr& e, int min_level) {
  if (binding_level(e) < min_level)
    return "\\left(" + latex_of(e, 0) + "\\right)";
  switch (e.which()) {
    case rad_expr::kind::number: {
      const rational& q = e.value();
      std::string sign = q < 0 ? "-" : "";
      bigint num = numerator(q) < 0 ? bigint(-numerator(q)) : numerator(q);
      if (denominator(q) == 1) return sign + num.str();
      return sign + "\\frac{" + num.str() + "}{" + denominator(q).str() + "}";
    }
    case rad_expr::kind::sum: {
      std::string out;
      bool first = true;
      for (const rad_expr& t : e.children()) {
        if (!first) out += "+";
        out += latex_of(t, 1);
        first = false;
      }
      return out;
    }
    case rad_expr::kind::product: {
      // Juxtapose before radicals and the tail dots, the typeset shape of
      // the nested radicals; separate other factors with \cdot.
      std::string out;
      bool first = true;
      for (const rad_expr& f : e.children()) {
        std::string piece = latex_of(f, 2);
        if (!first && piece.rfind("\\sqrt", 0) != 0 &&
            piece.rfind("\\ldots", 0) != 0)
          out += "\\cdot ";
        out += piece;
        first = false;
      }
      return out;
    }
    case rad_expr::kind::power:
      return latex_of(e.base(), 3) + "^{" + std::to_string(e.exponent()) + "}";
    case rad_expr::kind::root: {
      std::string idx =
          e.degree() == 2 ? "" : "[" + std::to_string(e.degree()) + "]";
      return "\\sqrt" + idx + "{" + latex_of(e.body(), 0) + "}";
    }
    case rad_expr::kind::tail:
      return "\\ldots";
  }
  return {};
}

}  // namespace detail

// Canonical text; parse(print_text(e)) reproduces e structurally.
inline std::string print_text(const rad_expr& e) { return detail::text_of(e, 0); }

inline std::string print_latex(const rad_expr& e) {
  return detail::latex_of(e, 0);
}

// Interval enclosure with the tail (if any) replaced by `tail_value`.
inline interval eval_expr(const rad_expr& e,
                          const std::optional<rational>& tail_value,
                          unsigned precision) {
  switch (e.which()) {
    case rad_expr::kind::number:
      return interval::from_rational(e.value(), precision);
    case rad_expr::kind::sum: {
      interval acc = eval_expr(e.children()[0], tail_value, precision);
      for (std::size_t i = 1; i < e.children().size(); ++i)
        acc = acc + eval_expr(e.children()[i], tail_value, precision);
      return acc;
    }
    case rad_expr::kind::product: {
      interval acc = eval_expr(e.children()[0], tail_value, precision);
      for (std::size_t i = 1; i < e.children().size(); ++i)
        acc = acc * eval_expr(e.children()[i], tail_value, precision);
      return acc;
    }
    case rad_expr::kind::power:
      return eval_expr(e.base(), tail_value, precision).pow(e.exponent());
    case rad_expr::kind::root:
      return nth_root(eval_expr(e.body(), tail_value, precision), e.degree());
    case rad_expr::kind::tail:
      if (!tail_value)
        throw unresolved_tail_error("expression has '...' but no tail value");
      return interval::from_rational(*tail_value, precision);
  }
  throw std::logic_error("unreachable expression kind");
}

// The depth-layer truncation of a radical family as a syntax tree, with the
// tail marker in the innermost root.
template <radical_family Family>
rad_expr to_expression(const Family& fam, std::int64_t depth) {
  if (depth < 1) throw depth_error("expression depth must be >= 1");
  rad_expr inner = rad_expr::tail();
  const unsigned order = root_order(fam);
  for (std::int64_t j = depth - 1; j >= 0; --j) {
    layer_term t = layer_at(fam, j);
    std::vector<rad_expr> factors;
    factors.push_back(rad_expr::number(t.multiplier));
    factors.push_back(std::move(inner));
    std::vector<rad_expr> terms;
    terms.push_back(rad_expr::number(t.constant));
    terms.push_back(rad_expr::product(std::move(factors)));
    inner = rad_expr::root(order, rad_expr::sum(std::move(terms)));
  }
  return inner;
}

}  // namespace radix
