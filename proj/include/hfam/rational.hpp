#pragma once

#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace hfam {

/// Exact fraction over 64-bit integers: always reduced, denominator > 0.
/// Arithmetic goes through 128-bit intermediates and throws
/// std::overflow_error instead of ever losing exactness.
class Rational {
public:
    Rational() = default;

    Rational(long long num, long long den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) {
            num_ = narrow(-static_cast<__int128>(num_));
            den_ = narrow(-static_cast<__int128>(den_));
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Parses "p/q" or a bare integer.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(text));
            return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("invalid rational '" + text + "'");
        }
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<__int128>(a.num_) * b.num_,
                         static_cast<__int128>(a.den_) * b.den_);
    }

private:
    static long long narrow(__int128 v) {
        if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
            throw std::overflow_error("rational arithmetic overflow");
        }
        return static_cast<long long>(v);
    }

    static Rational from_wide(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 a = num < 0 ? -num : num;
        __int128 g = gcd_wide(a, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return Rational(narrow(num), narrow(den));
    }

    static __int128 gcd_wide(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    long long num_ = 0;
    long long den_ = 1;
};

/// base^exp, or nullopt if the result does not fit in 64 bits.
inline std::optional<unsigned long long> checked_pow(unsigned long long base, unsigned exp) noexcept {
    unsigned long long out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(out, base, &out)) return std::nullopt;
    }
    return out;
}

inline std::optional<Rational> checked_pow(const Rational& base, unsigned exp) noexcept {
    try {
        Rational out(1);
        for (unsigned i = 0; i < exp; ++i) out = out * base;
        return out;
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

}  // namespace hfam
