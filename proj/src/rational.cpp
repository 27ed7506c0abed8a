#include "tolspace/rational.hpp"

#include "tolspace/error.hpp"

#include <boost/functional/hash.hpp>

namespace tolspace {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        throw Error::input("rational denominator must be nonzero");
    }
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
    auto parse_int = [](std::string_view s, BigInt& out) -> bool {
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) return false;
        BigInt v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
            v = v * 10 + (s[i] - '0');
        }
        out = neg ? BigInt(-v) : v;
        return true;
    };

    // trim surrounding whitespace
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    auto slash = text.find('/');
    BigInt num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_int(text, num)) return std::nullopt;
    } else {
        if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    return Rational(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view text) {
    auto r = try_parse(text);
    if (!r) {
        throw Error::input("not a rational: '" + std::string(text) + "'");
    }
    return *r;
}

Rational Rational::pow2(int k) {
    BigInt p = BigInt(1) << static_cast<unsigned>(k < 0 ? -k : k);
    return k >= 0 ? Rational(std::move(p)) : Rational(1, std::move(p));
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.num_ < 0) r.num_ = -r.num_;
    return r;
}

BigInt Rational::floor() const {
    if (den_ == 1) return num_;
    BigInt q = num_ / den_;
    if (num_ < 0) q -= 1; // cpp_int division truncates toward zero
    return q;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw Error::input("rational division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::size_t Rational::hash() const {
    std::size_t seed = 0;
    boost::hash_combine(seed, std::hash<std::string>{}(num_.str()));
    boost::hash_combine(seed, std::hash<std::string>{}(den_.str()));
    return seed;
}

} // namespace tolspace
