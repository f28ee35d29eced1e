#pragma once

// Coefficient fields: the rationals and prime fields F_p. Values are held as
// exact rationals; prime-field values are kept reduced into [0, p).

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "gradid/error.hpp"
#include "gradid/groups.hpp"

namespace gradid {

using Rational = boost::multiprecision::cpp_rational;

class Field {
 public:
  enum class Kind : std::uint8_t { rationals, prime };

  Field() = default;

  static Field rationals() { return Field(); }

  static Field prime(const Integer& p) {
    if (p < 2 || !boost::multiprecision::miller_rabin_test(p, 25)) {
      throw DomainError("field characteristic " + p.str() + " is not prime");
    }
    Field f;
    f.kind_ = Kind::prime;
    f.p_ = p;
    return f;
  }

  /// "Q" or "fp:<p>".
  static Field parse(std::string_view text) {
    if (text == "Q" || text == "q" || text == "rationals") return rationals();
    if (text.substr(0, 3) == "fp:") {
      const auto digits = text.substr(3);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParseError("malformed field characteristic", 3);
      }
      return prime(Integer(std::string(digits)));
    }
    throw ParseError("unknown field '" + std::string(text) + "' (expected Q or fp:<p>)", 0);
  }

  Kind kind() const noexcept { return kind_; }
  const Integer& characteristic() const noexcept { return p_; }

  std::string name() const { return kind_ == Kind::rationals ? std::string("Q") : "fp:" + p_.str(); }

  Rational normalize(const Rational& x) const {
    if (kind_ == Kind::rationals) return x;
    Integer num = boost::multiprecision::numerator(x) % p_;
    Integer den = boost::multiprecision::denominator(x) % p_;
    if (den == 0) throw DomainError("division by a multiple of the characteristic");
    Integer inv = powm(den, p_ - 2, p_);
    Integer r = (num * inv) % p_;
    if (r < 0) r += p_;
    return Rational(r);
  }

  Rational from_integer(const Integer& v) const { return normalize(Rational(v)); }

  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
  Rational neg(const Rational& a) const { return normalize(-a); }

  /// Textual coefficient: an integer, or a fraction over the rationals.
  Rational parse_coefficient(std::string_view text, std::size_t& pos) const {
    const std::size_t start = pos;
    Integer num = detail::parse_integer_literal(text, pos);
    std::size_t look = pos;
    detail::skip_spaces(text, look);
    if (look < text.size() && text[look] == '/') {
      if (kind_ != Kind::rationals) throw ParseError("fractional coefficients require the rationals field", look);
      pos = look + 1;
      Integer den = detail::parse_integer_literal(text, pos);
      if (den == 0) throw ParseError("zero denominator", start);
      return Rational(num, den);
    }
    return from_integer(num);
  }

  std::string format(const Rational& x) const {
    if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
  }

  friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }

  void check_same(const Field& other) const {
    if (!(*this == other)) throw DomainError("coefficient field mismatch: " + name() + " vs " + other.name());
  }

 private:
  Kind kind_ = Kind::rationals;
  Integer p_ = 0;
};

}  // namespace gradid
