#include "ehh/rational.hpp"

#include "ehh/errors.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace ehh {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw ParameterError("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rational reduce(i128 num, i128 den)
{
    if (den == 0)
        throw ParameterError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParameterError("malformed rational '" + std::string(whole) + "'");
    return out;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw ParameterError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, text));
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string Rational::str() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::bounds(std::int64_t lhs, std::int64_t rhs) const
{
    return static_cast<i128>(lhs) * den_ <= static_cast<i128>(num_) * rhs;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    if (l < r)
        return std::strong_ordering::less;
    if (l > r)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational operator*(const Rational& a, const Rational& b)
{
    return reduce(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return reduce(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
        static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return reduce(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
        static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    return reduce(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

} // namespace ehh
