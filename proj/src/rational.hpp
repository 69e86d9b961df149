#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bihom {

/// Exact rational scalar. boost keeps values canonical: gcd(|num|, den) = 1
/// and den > 0 after every operation. Expression templates are off so the
/// type behaves like a plain value in generic code.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical rendering: integers as "n", everything else as "p/q".
inline std::string scalar_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "p", "p/q", optional leading '-'. No decimals, no whitespace.
inline Rational scalar_parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty scalar");
  auto bad = [&](char c) {
    return !(c == '-' || c == '/' || (c >= '0' && c <= '9'));
  };
  for (char c : s)
    if (bad(c)) throw ParseError("bad scalar '" + s + "'");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("bad scalar '" + s + "'");
  }
}

/// Prime-field scalar with a compile-time modulus. Only used to speed up
/// randomized fuzzing of the checkers; the rest of the library and the whole
/// file format run on Rational.
template <std::uint64_t P>
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long long x) {
    long long m = x % static_cast<long long>(P);
    if (m < 0) m += static_cast<long long>(P);
    v_ = static_cast<std::uint64_t>(m);
  }
  Fp(int x) : Fp(static_cast<long long>(x)) {}

  static constexpr std::uint64_t modulus() { return P; }
  std::uint64_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % P); }
  friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + P - b.v_) % P); }
  friend Fp operator*(Fp a, Fp b) {
    return from_raw(static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.v_) * b.v_) % P));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in Fp");
    // extended Euclid
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(P), nr = static_cast<long long>(v_);
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<long long>(P);
    return from_raw(static_cast<std::uint64_t>(t));
  }

 private:
  static Fp from_raw(std::uint64_t v) { Fp f; f.v_ = v; return f; }
  std::uint64_t v_;
};

template <std::uint64_t P>
inline std::string scalar_to_string(const Fp<P>& f) {
  return std::to_string(f.value());
}

}  // namespace bihom
