#pragma once

// Exact scalars: rationals, complex rationals and roots of unity.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "llf/error.hpp"

namespace llf {

using QQ = boost::multiprecision::cpp_rational;
using ZZ = boost::multiprecision::cpp_int;

inline QQ qq(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw InvalidParameter("zero denominator");
  // cpp_rational rejects negative denominators.
  return den < 0 ? QQ(-ZZ(num), -ZZ(den)) : QQ(num, den);
}

inline std::strong_ordering compare(const QQ& a, const QQ& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline bool is_integer(const QQ& x) { return boost::multiprecision::denominator(x) == 1; }

/// True iff x is an integer <= 0 (a pole of Gamma).
inline bool is_nonpositive_integer(const QQ& x) { return is_integer(x) && x <= 0; }

/// True iff x is in {0, -2, -4, ...}.
inline bool is_nonpositive_even(const QQ& x) {
  if (!is_nonpositive_integer(x)) return false;
  return boost::multiprecision::numerator(x) % 2 == 0;
}

/// "p/q", or "p" for integers.
inline std::string to_string(const QQ& x) {
  ZZ num = boost::multiprecision::numerator(x);
  ZZ den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const QQ& x) { return x.convert_to<double>(); }

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
}  // namespace detail

/// Strict inverse of to_string: "[-]digits[/digits]".
inline QQ parse_qq(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw InvalidParameter("malformed rational '" + std::string(text) + "'");
  ZZ n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
  QQ value(n, d);
  return negative ? QQ(-value) : value;
}

/// Exact complex rational re + im*i.
struct CQ {
  QQ re;
  QQ im;

  CQ() = default;
  CQ(QQ real, QQ imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  bool is_real() const { return im == 0; }

  friend CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend CQ operator-(const CQ& a) { return {-a.re, -a.im}; }
  friend CQ operator+(const CQ& a, const QQ& t) { return {a.re + t, a.im}; }
  friend CQ operator-(const CQ& a, const QQ& t) { return {a.re - t, a.im}; }

  friend bool operator==(const CQ&, const CQ&) = default;
  friend std::strong_ordering operator<=>(const CQ& a, const CQ& b) {
    if (auto c = compare(a.re, b.re); c != 0) return c;
    return compare(a.im, b.im);
  }
};

/// Surface form used by the expression grammar: "re", "re+imi" or "re-imi".
inline std::string to_string(const CQ& z) {
  if (z.im == 0) return to_string(z.re);
  QQ mag = z.im < 0 ? QQ(-z.im) : z.im;
  return to_string(z.re) + (z.im < 0 ? "-" : "+") + to_string(mag) + "i";
}

/// exp(2*pi*i*index/order), stored with gcd(index, order) = 1 and 0 <= index < order.
class RootOfUnity {
 public:
  RootOfUnity() = default;

  RootOfUnity(std::int64_t order, std::int64_t index) {
    if (order < 1) throw InvalidParameter("root of unity order must be >= 1");
    index %= order;
    if (index < 0) index += order;
    std::int64_t g = std::gcd(index, order);
    if (index == 0) {
      order_ = 1;
      index_ = 0;
    } else {
      order_ = order / g;
      index_ = index / g;
    }
  }

  std::int64_t order() const { return order_; }
  std::int64_t index() const { return index_; }
  bool is_one() const { return order_ == 1; }

  RootOfUnity inverse() const { return RootOfUnity(order_, order_ - index_); }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    std::int64_t l = std::lcm(a.order_, b.order_);
    return RootOfUnity(l, a.index_ * (l / a.order_) + b.index_ * (l / b.order_));
  }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  std::int64_t order_ = 1;
  std::int64_t index_ = 0;
};

}  // namespace llf
