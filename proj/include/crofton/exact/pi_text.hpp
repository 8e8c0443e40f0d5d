#pragma once

// Text, LaTeX and JSON encodings of PiNumber.
//
// Canonical text: terms in ascending pi exponent, joined by " + " / " - ".
//   exponent 0           p  |  p/q
//   exponent e > 0       pi^e  |  p*pi^e  |  p/q*pi^e        ("pi" when e = 1)
//   exponent e < 0       p/pi^k  (q = 1)  |  p/q*pi^-k
//   half exponents       pi^(h/2), e.g. 3/2*pi^(-1/2)
// Zero is "0".

#include "crofton/exact/pi_number.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>

namespace crofton {

namespace detail {

inline std::string exponent_text(int twice_exp) {
  if (twice_exp % 2 != 0) return "(" + std::to_string(twice_exp) + "/2)";
  return std::to_string(twice_exp / 2);
}

inline std::string term_text(int e2, const BigRational& magnitude) {
  const mpz_class num = magnitude.numerator();
  const mpz_class den = magnitude.denominator();
  const std::string coeff = den == 1 ? num.get_str() : num.get_str() + "/" + den.get_str();
  if (e2 == 0) return coeff;
  if (e2 > 0) {
    const std::string pi = e2 == 2 ? "pi" : "pi^" + exponent_text(e2);
    return magnitude == BigRational(1) ? pi : coeff + "*" + pi;
  }
  if (den == 1 && e2 % 2 == 0) {
    return num.get_str() + (e2 == -2 ? "/pi" : "/pi^" + exponent_text(-e2));
  }
  return coeff + "*pi^" + exponent_text(e2);
}

}  // namespace detail

inline std::string format_pi(const PiNumber& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e2, c] : a.terms()) {
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += detail::term_text(e2, c.abs());
  }
  return out;
}

class PiParseError : public std::invalid_argument {
 public:
  PiParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position_(pos) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class PiParser {
 public:
  explicit PiParser(std::string_view s) : s_(s) {}

  PiNumber parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    PiNumber result;
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    result += parse_term() * BigRational(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      result += parse_term() * BigRational(op == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw PiParseError(msg, pos_); }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_pi() const { return s_.substr(pos_, 2) == "pi"; }

  mpz_class parse_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  long parse_small_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    const mpz_class v = parse_uint();
    if (!v.fits_slong_p() || v > 100000) fail("exponent out of range");
    return neg ? -v.get_si() : v.get_si();
  }

  /// Returns twice the exponent.
  int parse_exponent() {
    skip_ws();
    if (peek() != '(') return static_cast<int>(2 * parse_small_int());
    ++pos_;
    const long num = parse_small_int();
    skip_ws();
    int twice = static_cast<int>(2 * num);
    if (peek() == '/') {
      ++pos_;
      if (parse_uint() != 2) fail("only halves are allowed as fractional exponents");
      twice = static_cast<int>(num);
    }
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return twice;
  }

  /// "pi" already consumed.
  int parse_pi_power() {
    skip_ws();
    if (peek() != '^') return 2;
    ++pos_;
    return parse_exponent();
  }

  /// A term may carry a trailing integer divisor, as in "pi^2/2".
  PiNumber parse_term() {
    PiNumber t = parse_term_core();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      const mpz_class den = parse_uint();
      if (den == 0) fail("division by zero");
      t /= BigRational(den);
    }
    return t;
  }

  PiNumber parse_term_core() {
    skip_ws();
    if (at_pi()) {
      pos_ += 2;
      return PiNumber::pi_half_pow(parse_pi_power());
    }
    const mpz_class num = parse_uint();
    skip_ws();
    BigRational coeff(num);
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_pi()) {
        pos_ += 2;
        return PiNumber::monomial(coeff, -parse_pi_power());
      }
      const mpz_class den = parse_uint();
      if (den == 0) fail("division by zero");
      coeff = BigRational(num, den);
      skip_ws();
    }
    bool star = false;
    if (peek() == '*') {
      star = true;
      ++pos_;
      skip_ws();
    }
    if (at_pi()) {
      pos_ += 2;
      return PiNumber::monomial(coeff, parse_pi_power());
    }
    if (star) fail("expected 'pi' after '*'");
    return PiNumber(coeff);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PiNumber parse_pi(std::string_view s) { return detail::PiParser(s).parse(); }

inline std::string to_latex(const PiNumber& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e2, c] : a.terms()) {
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    const BigRational m = c.abs();
    const std::string num = m.numerator().get_str();
    const std::string den = m.denominator().get_str();
    std::string pi;
    if (e2 != 0) {
      const int mag = std::abs(e2);
      pi = "\\pi";
      if (mag != 2) pi += "^{" + (mag % 2 == 0 ? std::to_string(mag / 2) : std::to_string(mag) + "/2") + "}";
    }
    if (e2 >= 0) {
      if (den == "1") {
        out << (e2 != 0 && num == "1" ? "" : num) << pi;
      } else {
        out << "\\frac{" << (e2 != 0 && num == "1" ? "" : num) << pi << "}{" << den << "}";
      }
    } else {
      out << "\\frac{" << num << "}{" << (den == "1" ? "" : den + " ") << pi << "}";
    }
  }
  return out.str();
}

inline nlohmann::json to_json(const PiNumber& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e2, c] : a.terms()) {
    terms.push_back({{"pi_exp_times_2", e2},
                     {"num", c.numerator().get_str()},
                     {"den", c.denominator().get_str()}});
  }
  return {{"terms", terms}};
}

inline PiNumber pi_from_json(const nlohmann::json& j) {
  PiNumber r;
  for (const auto& t : j.at("terms")) {
    r += PiNumber::monomial(BigRational(mpz_class(t.at("num").get<std::string>(), 10),
                                        mpz_class(t.at("den").get<std::string>(), 10)),
                            t.at("pi_exp_times_2").get<int>());
  }
  return r;
}

}  // namespace crofton
