#include "shufflelab/exact_int.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "shufflelab/errors.hpp"

namespace shufflelab {

ExactInt ExactInt::operator+(ExactInt o) const {
    __int128 r;
    if (__builtin_add_overflow(v_, o.v_, &r)) throw std::overflow_error("ExactInt addition overflow");
    return raw(r);
}

ExactInt ExactInt::operator-(ExactInt o) const {
    __int128 r;
    if (__builtin_sub_overflow(v_, o.v_, &r)) throw std::overflow_error("ExactInt subtraction overflow");
    return raw(r);
}

ExactInt ExactInt::operator*(ExactInt o) const {
    __int128 r;
    if (__builtin_mul_overflow(v_, o.v_, &r)) throw std::overflow_error("ExactInt multiplication overflow");
    return raw(r);
}

ExactInt ExactInt::operator-() const {
    __int128 r;
    if (__builtin_sub_overflow(static_cast<__int128>(0), v_, &r))
        throw std::overflow_error("ExactInt negation overflow");
    return raw(r);
}

ExactInt ExactInt::div_exact(ExactInt o) const {
    if (o.v_ == 0) throw std::domain_error("ExactInt division by zero");
    if (v_ % o.v_ != 0)
        throw identity_error("ExactInt division " + str() + " / " + o.str() + " is not exact");
    return raw(v_ / o.v_);
}

std::string ExactInt::str() const {
    if (v_ == 0) return "0";
    bool neg = v_ < 0;
    // negate via unsigned to stay defined at the minimum value
    unsigned __int128 u =
        neg ? ~static_cast<unsigned __int128>(v_) + 1 : static_cast<unsigned __int128>(v_);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

ExactInt ExactInt::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("bad integer literal: " + text);
    ExactInt acc = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal: " + text);
        acc = acc * 10 + ExactInt(c - '0');
    }
    return neg ? -acc : acc;
}

long long ExactInt::to_int64() const {
    if (v_ > std::numeric_limits<long long>::max() || v_ < std::numeric_limits<long long>::min())
        throw std::overflow_error("ExactInt does not fit in 64 bits: " + str());
    return static_cast<long long>(v_);
}

double ExactInt::to_double() const { return static_cast<double>(v_); }

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.str(); }

}  // namespace shufflelab
