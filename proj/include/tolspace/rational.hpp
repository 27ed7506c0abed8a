#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace tolspace {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored reduced with a positive denominator;
/// no floating point appears anywhere in this library.
class Rational {
  public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt numerator, BigInt denominator);

    /// Parses "p", "-p", or "p/q" (q > 0 after normalization). Throws
    /// Error::input on anything else; try_parse returns nullopt instead.
    static Rational parse(std::string_view text);
    static std::optional<Rational> try_parse(std::string_view text);

    /// 2^k for any integer k (negative k gives 1/2^|k|).
    static Rational pow2(int k);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational abs() const;
    /// Largest integer <= this.
    BigInt floor() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws Error::input on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Canonical form: lowest terms, "p/q", denominator 1 printed as "p".
    std::string str() const;

    std::size_t hash() const;

  private:
    void normalize();

    BigInt num_ = 0;
    BigInt den_ = 1;
};

} // namespace tolspace

template <> struct std::hash<tolspace::Rational> {
    std::size_t operator()(const tolspace::Rational& r) const { return r.hash(); }
};
