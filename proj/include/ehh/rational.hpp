#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ehh {

/// Exact non-negative-denominator fraction. Every threshold in the library
/// (sparsity coefficients, weight quarters, densities) is compared through
/// this type so that boundary cases behave identically on every platform.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    /// Parses "a/b" or a plain integer "a".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    /// True iff lhs <= this * rhs, i.e. lhs * den <= num * rhs, evaluated in 128-bit.
    bool bounds(std::int64_t lhs, std::int64_t rhs) const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace ehh
