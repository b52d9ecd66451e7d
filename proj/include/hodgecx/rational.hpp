#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hodgecx {

// Exact arbitrary-precision rational scalar. cpp_rational keeps the
// representation canonical (reduced, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

inline Rational conjugate(const Rational& x) { return x; }

// cpp_rational insists on positive denominators; normalize the sign here.
inline Rational make_rational(boost::multiprecision::cpp_int num,
                              boost::multiprecision::cpp_int den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline std::string to_string(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += "/" + denominator(x).str();
  }
  return s;
}

inline std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    using Int = boost::multiprecision::cpp_int;
    if (slash == std::string_view::npos) {
      return Rational(Int(std::string(s)));
    }
    Int num(std::string(s.substr(0, slash)));
    Int den(std::string(s.substr(slash + 1)));
    if (den == 0) return std::nullopt;
    return make_rational(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Gaussian rational a + b*i with exact rational components. Used only where a
// conjugation-stable extension of the rationals is needed.
struct GaussRational {
  Rational re{};
  Rational im{};

  GaussRational() = default;
  GaussRational(int v) : re(v) {}
  GaussRational(Rational r) : re(std::move(r)) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GaussRational: division by zero");
    return a * GaussRational(b.re / n, -b.im / n);
  }
  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

inline GaussRational conjugate(const GaussRational& x) { return {x.re, -x.im}; }

inline std::string to_string(const GaussRational& x) {
  if (x.im == 0) return to_string(x.re);
  std::string s;
  if (x.re != 0) {
    s = to_string(x.re);
    if (x.im > 0) s += "+";
  }
  s += to_string(x.im) + "i";
  return s;
}

inline std::optional<GaussRational> parse_gauss_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i') {
    auto r = parse_rational(s);
    if (!r) return std::nullopt;
    return GaussRational(*r);
  }
  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last '+'/'-' that is not leading and not part of "p/q".
  size_t split = std::string_view::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    auto im = parse_rational(body);
    if (!im) return std::nullopt;
    return GaussRational(Rational(0), *im);
  }
  auto re = parse_rational(body.substr(0, split));
  std::string_view im_part = body.substr(split);
  if (im_part.size() > 1 && im_part[0] == '+') im_part = im_part.substr(1);
  auto im = parse_rational(im_part);
  if (!re || !im) return std::nullopt;
  return GaussRational(*re, *im);
}

template <class K>
struct ScalarIO;

template <>
struct ScalarIO<Rational> {
  static std::string write(const Rational& x) { return to_string(x); }
  static std::optional<Rational> read(std::string_view s) { return parse_rational(s); }
  static constexpr const char* name() { return "rational"; }
};

template <>
struct ScalarIO<GaussRational> {
  static std::string write(const GaussRational& x) { return to_string(x); }
  static std::optional<GaussRational> read(std::string_view s) { return parse_gauss_rational(s); }
  static constexpr const char* name() { return "gauss-rational"; }
};

}  // namespace hodgecx
