#pragma once

// Expression language for elements of R.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' factor) | factor | ('/' int))*
//   factor := '-'? atom ('^' '-'? int)?
//   atom   := 'a' | 'b' | 's' | 't' | int | '(' expr ')'
//
// Juxtaposition multiplies when the right operand starts with a generator or
// '(' ("st", "2t", "(1-a)(1+a)"). A trailing "/n" divides by the integer n, so
// both "1/2*t" and "(1-a)/2" work. Offsets in errors are 0-based bytes.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dinf/algebra.hpp"
#include "dinf/error.hpp"

namespace dinf {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected)
      : Error(ErrorKind::ParseError, message(position, expected)), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string message(std::size_t position, const std::vector<std::string>& expected) {
    std::string out = "at offset " + std::to_string(position) + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? (i + 1 == expected.size() ? " or " : ", ") : "") + expected[i];
    return out;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

struct Expr {
  enum class Kind { Sum, Product, Neg, Power, Scalar, Generator };

  Kind kind = Kind::Scalar;
  std::vector<Expr> children;  // Sum, Product: operands; Neg, Power: one operand
  std::string numerator;       // Scalar: decimal digits
  std::string denominator;     // Scalar: decimal digits, "1" for integers
  char generator = 0;          // Generator: one of a, b, s, t
  std::int64_t exponent = 0;   // Power
  std::size_t position = 0;

  static Expr scalar(std::string num, std::string den, std::size_t pos) {
    Expr e;
    e.kind = Kind::Scalar;
    e.numerator = std::move(num);
    e.denominator = std::move(den);
    e.position = pos;
    return e;
  }
  static Expr node(Kind kind, std::vector<Expr> children, std::size_t pos) {
    Expr e;
    e.kind = kind;
    e.children = std::move(children);
    e.position = pos;
    return e;
  }
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
    return e;
  }

 private:
  static constexpr std::int64_t kMaxExponent = 1'000'000;

  [[noreturn]] void fail(std::vector<std::string> expected) const { throw ParseError(pos_, std::move(expected)); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  static bool is_generator(char c) { return c == 'a' || c == 'b' || c == 's' || c == 't'; }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail({"integer"});
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr expr() {
    const std::size_t start = (skip_ws(), pos_);
    std::vector<Expr> parts{term()};
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      const std::size_t at = pos_++;
      Expr t = term();
      if (c == '-') t = Expr::node(Expr::Kind::Neg, {std::move(t)}, at);
      parts.push_back(std::move(t));
    }
    if (parts.size() == 1) return std::move(parts.front());
    return Expr::node(Expr::Kind::Sum, std::move(parts), start);
  }

  Expr term() {
    const std::size_t start = (skip_ws(), pos_);
    std::vector<Expr> parts{factor()};
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        parts.push_back(factor());
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = (skip_ws(), pos_);
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = at;
          fail({"nonzero integer"});
        }
        parts.push_back(Expr::scalar("1", std::move(den), at));
      } else if (is_generator(c) || c == '(') {
        parts.push_back(factor());
      } else {
        break;
      }
    }
    if (parts.size() == 1) return std::move(parts.front());
    return Expr::node(Expr::Kind::Product, std::move(parts), start);
  }

  Expr factor() {
    const std::size_t start = (skip_ws(), pos_);
    if (peek() == '-') {
      ++pos_;
      return Expr::node(Expr::Kind::Neg, {factor_body()}, start);
    }
    return factor_body();
  }

  Expr factor_body() {
    const std::size_t start = (skip_ws(), pos_);
    Expr base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t at = (skip_ws(), pos_);
    const std::string d = digits();
    if (d.size() > 7 || std::stoll(d) > kMaxExponent) {
      pos_ = at;
      fail({"exponent of magnitude at most 1000000"});
    }
    Expr p = Expr::node(Expr::Kind::Power, {std::move(base)}, start);
    p.exponent = negative ? -std::stoll(d) : std::stoll(d);
    return p;
  }

  Expr atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (is_generator(c)) {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::Generator;
      e.generator = c;
      e.position = start;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::scalar(digits(), "1", start);
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (peek() != ')') fail({"')'", "'+'", "'-'", "'*'", "'/'"});
      ++pos_;
      return inner;
    }
    fail({"generator a, b, s or t", "integer", "'('", "'-'"});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expression(std::string_view src) { return detail::Parser(src).parse(); }

template <class K, class E = typename K::element_type>
AlgebraElement<E> eval_expression(const Expr& e, const K& k) {
  switch (e.kind) {
    case Expr::Kind::Scalar: {
      const E num = k.from_decimal(e.numerator);
      const E den = k.from_decimal(e.denominator);
      if (den.is_zero())
        raise(ErrorKind::DivisionByZero, "denominator " + e.denominator + " vanishes in " + k.name() +
                                             " (offset " + std::to_string(e.position) + ")");
      return scalar(k, num * den.inv());
    }
    case Expr::Kind::Generator:
      switch (e.generator) {
        case 'a': return gen_a(k);
        case 'b': return gen_b(k);
        case 's': return gen_s(k);
        default: return gen_t(k);
      }
    case Expr::Kind::Neg: return -eval_expression(e.children.front(), k);
    case Expr::Kind::Sum: {
      AlgebraElement<E> acc;
      for (const auto& c : e.children) acc = acc + eval_expression(c, k);
      return acc;
    }
    case Expr::Kind::Product: {
      AlgebraElement<E> acc = one(k);
      for (const auto& c : e.children) acc = acc * eval_expression(c, k);
      return acc;
    }
    case Expr::Kind::Power: {
      AlgebraElement<E> base = eval_expression(e.children.front(), k);
      std::int64_t n = e.exponent;
      if (n < 0) {
        try {
          base = inverse(k, base);
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::NotInvertible && err.kind() != ErrorKind::InverseOutsideR) throw;
          raise(ErrorKind::NonUnitPower, "negative power of a non-unit at offset " + std::to_string(e.position));
        }
        n = -n;
      }
      AlgebraElement<E> acc = one(k);
      while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
      }
      return acc;
    }
  }
  raise(ErrorKind::InternalInconsistency, "unknown expression node");
}

template <class K>
auto parse_element(std::string_view src, const K& k) {
  return eval_expression(parse_expression(src), k);
}

/// Fully parenthesized rendering of the tree.
inline std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Scalar: return e.denominator == "1" ? e.numerator : "(" + e.numerator + "/" + e.denominator + ")";
    case Expr::Kind::Generator: return std::string(1, e.generator);
    case Expr::Kind::Neg: return "(-" + to_string(e.children.front()) + ")";
    case Expr::Kind::Power: return "(" + to_string(e.children.front()) + "^" + std::to_string(e.exponent) + ")";
    case Expr::Kind::Sum:
    case Expr::Kind::Product: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.children.size(); ++i)
        out += (i ? (e.kind == Expr::Kind::Sum ? " + " : " * ") : "") + to_string(e.children[i]);
      return out + ")";
    }
  }
  return {};
}

}  // namespace dinf
