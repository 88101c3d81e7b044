#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace shufflelab {

// Signed 128-bit integer with checked arithmetic. Every operation either
// yields the mathematically exact value or throws std::overflow_error;
// silent wraparound never occurs.
class ExactInt {
public:
    constexpr ExactInt() = default;
    constexpr ExactInt(long long v) : v_(v) {}  // NOLINT: implicit on purpose
    constexpr ExactInt(int v) : v_(v) {}        // NOLINT

    static ExactInt from_string(const std::string& text);

    ExactInt operator+(ExactInt o) const;
    ExactInt operator-(ExactInt o) const;
    ExactInt operator*(ExactInt o) const;
    ExactInt operator-() const;
    ExactInt& operator+=(ExactInt o) { return *this = *this + o; }
    ExactInt& operator-=(ExactInt o) { return *this = *this - o; }
    ExactInt& operator*=(ExactInt o) { return *this = *this * o; }

    // Division that must be exact; throws identity_error on a nonzero
    // remainder (an inexact division here always indicates a bug).
    ExactInt div_exact(ExactInt o) const;

    auto operator<=>(const ExactInt&) const = default;

    bool is_zero() const { return v_ == 0; }
    std::string str() const;
    long long to_int64() const;   // throws std::overflow_error if out of range
    double to_double() const;

private:
    static ExactInt raw(__int128 v) {
        ExactInt r;
        r.v_ = v;
        return r;
    }

    __int128 v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& v);

}  // namespace shufflelab
