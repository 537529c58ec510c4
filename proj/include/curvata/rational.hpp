#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace curvata {

// Exact rational with int64 components, always stored in lowest terms with a
// positive denominator. All length and curvature arithmetic in the library
// goes through this type; there is no floating point anywhere.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("division by zero rational");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return num_ * o.den_ < o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // Smallest integer >= *this.
    std::int64_t ceil() const {
        if (num_ >= 0) return (num_ + den_ - 1) / den_;
        return -((-num_) / den_);
    }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "p/q" or a bare integer "p".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(std::stoll(s));
            std::int64_t p = std::stoll(s.substr(0, slash));
            std::int64_t q = std::stoll(s.substr(slash + 1));
            return Rational(p, q);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed rational: " + s);
        }
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace curvata
