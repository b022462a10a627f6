#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "relrips/errors.hpp"

namespace relrips {

/// Exact non-negative rational, used for quasi-geodesic constants so that
/// all comparisons are integer arithmetic.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den <= 0 || num < 0) throw domain_error("rational must be non-negative with positive denominator");
        std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    bool operator==(const Rational&) const = default;
};

inline bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
}

}  // namespace relrips
