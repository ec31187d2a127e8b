#pragma once

// Concrete syntax for polynomials over the plain alphabet: complex literals,
// generators g1..gk (a, b, c as aliases for g1..g3), ^ with integer exponents
// (negative only in group mode), juxtaposition or * for products, + and -.
// Precedence: ^  >  juxtaposition/*  >  unary -  >  binary +/-.

#include <cctype>
#include <cstdio>
#include <string>
#include <string_view>

#include "fgn/poly.hpp"

namespace fgn {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg)
      : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, Mode mode, int k)
      : text_(text), spec_{mode, k, 0, 0} {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return p;
  }

 private:
  Poly expr() {
    Poly p = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        p = add(p, term());
      } else if (peek() == '-') {
        ++pos_;
        p = sub(p, term());
      } else {
        return p;
      }
    }
  }

  Poly term() {
    skip_ws();
    bool neg = false;
    while (peek() == '-') {
      ++pos_;
      neg = !neg;
      skip_ws();
    }
    Poly p = product();
    return neg ? scale(-1.0, p) : p;
  }

  Poly product() {
    Poly p = power();
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        p = mul(p, power());
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
                 std::isalpha(static_cast<unsigned char>(c))) {
        p = mul(p, power());  // juxtaposition
      } else {
        return p;
      }
    }
  }

  Poly power() {
    Poly base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    std::size_t exp_off = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(pos_, "integer exponent expected after '^'");
    long n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + (peek() - '0');
      if (n > 64) throw ParseError(exp_off, "exponent too large");
      ++pos_;
    }
    return poly_pow(base, neg ? -n : n, exp_off);
  }

  Poly atom() {
    skip_ws();
    std::size_t off = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      skip_ws();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return scalar(number(), off);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (std::isalnum(static_cast<unsigned char>(peek()))) id += text_[pos_++];
      if (id == "i") return scalar(Complex(0.0, 1.0), off);
      int gen = 0;
      if (id == "a" || id == "b" || id == "c") {
        gen = id[0] - 'a' + 1;
      } else if (id.size() > 1 && id[0] == 'g') {
        for (std::size_t t = 1; t < id.size(); ++t) {
          if (!std::isdigit(static_cast<unsigned char>(id[t])))
            throw ParseError(off, "unknown identifier '" + id + "'");
          gen = gen * 10 + (id[t] - '0');
        }
      } else {
        throw ParseError(off, "unknown identifier '" + id + "'");
      }
      if (gen < 1 || gen > spec_.plain)
        throw ParseError(off, "generator g" + std::to_string(gen) +
                                  " outside alphabet of size " +
                                  std::to_string(spec_.plain));
      return scalar_term(spec_, Word::single(spec_.mode, plain_gen(gen)), 1.0);
    }
    throw ParseError(off, pos_ == text_.size() ? "unexpected end of input"
                                               : "unexpected character");
  }

  double number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    // scientific suffix only when a digit actually follows
    if (peek() == 'e' || peek() == 'E') {
      std::size_t mark = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      } else {
        pos_ = mark;
      }
    }
    return std::stod(std::string(text_.substr(start, pos_ - start)));
  }

  Poly scalar(Complex c, std::size_t) {
    Poly p = zero_poly(spec_, 1);
    add_term(p, Word::identity(spec_.mode), c);
    return p;
  }

  Poly poly_pow(const Poly& base, long n, std::size_t off) {
    if (n < 0) {
      if (spec_.mode == Mode::monoid)
        throw ParseError(off, "negative exponent in monoid mode");
      if (base.terms.size() != 1)
        throw ParseError(off, "negative power of a non-monomial");
      const auto& [w, a] = *base.terms.begin();
      Complex c = a(0, 0);
      if (std::abs(c) == 0.0) throw ParseError(off, "negative power of zero");
      Poly inv = scalar_term(spec_, inverse(w), 1.0 / c);
      return poly_pow(inv, -n, off);
    }
    Poly out = identity_poly(spec_, base.level);
    for (long t = 0; t < n; ++t) out = mul(out, base);
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  AlphabetSpec spec_;
  std::size_t pos_ = 0;
};

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace detail

inline Poly parse_poly(std::string_view text, Mode mode, int k) {
  if (k < 1) throw std::invalid_argument("parse_poly: alphabet size must be >= 1");
  return detail::ExprParser(text, mode, k).parse();
}

// Prints so that parse_poly reads back an identical polynomial.
inline std::string format_complex(Complex c) {
  using detail::format_double;
  if (c.imag() == 0.0) return format_double(c.real());
  std::string im = c.imag() == 1.0    ? "i"
                   : c.imag() == -1.0 ? "-i"
                                      : format_double(c.imag()) + "*i";
  if (c.real() == 0.0) return im;
  std::string out = "(" + format_double(c.real());
  if (c.imag() < 0.0) {
    out += " - ";
    out += c.imag() == -1.0 ? "i" : format_double(-c.imag()) + "*i";
  } else {
    out += " + " + (c.imag() == 1.0 ? "i" : format_double(c.imag()) + "*i");
  }
  return out + ")";
}

inline std::string print_poly(const Poly& p) {
  if (p.level != 1)
    throw std::invalid_argument("print_poly: scalar-level polynomials only");
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [w, a] : p.terms) {
    Complex c = a(0, 0);
    bool negated = (c.imag() == 0.0 && c.real() < 0.0) ||
                   (c.real() == 0.0 && c.imag() < 0.0);
    if (negated) c = -c;
    if (out.empty()) {
      if (negated) out += "-";
    } else {
      out += negated ? " - " : " + ";
    }
    if (w.empty())
      out += format_complex(c);
    else if (c == Complex(1.0))
      out += to_string(w);
    else
      out += format_complex(c) + "*" + to_string(w);
  }
  return out;
}

}  // namespace fgn
