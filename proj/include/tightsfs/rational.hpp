#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "tightsfs/errors.hpp"

namespace tightsfs {

using i64 = std::int64_t;

// Overflow-checked integer helpers; all throw errc::overflow.
i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 checked_neg(i64 a);
i64 gcd(i64 a, i64 b);
i64 floor_div(i64 a, i64 b);

class Rational {
public:
    Rational() = default;
    Rational(i64 n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(i64 n, i64 d);

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    i64 floor() const { return floor_div(num_, den_); }
    Rational reciprocal() const;
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;
    static Rational parse(const std::string& text);

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Slope y/x of a primitive vector (x, y). Canonical: x >= 0, and
// infinity is stored as (x, y) = (0, 1).
class Slope {
public:
    Slope() : y_(0), x_(1) {}
    Slope(i64 y, i64 x);
    explicit Slope(const Rational& r) : Slope(r.num(), r.den()) {}
    static Slope infinity() { return Slope(1, 0); }
    static Slope from_vector(i64 x, i64 y) { return Slope(y, x); }

    i64 y() const { return y_; }
    i64 x() const { return x_; }
    bool is_infinite() const { return x_ == 0; }
    Rational value() const;

    friend bool operator==(const Slope&, const Slope&) = default;

    std::string str() const;
    static Slope parse(const std::string& text);

private:
    i64 y_, x_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// 2x2 integer matrix (a b; c d) with |ad - bc| = 1, acting on column vectors.
struct UnimodularMap {
    i64 a = 1, b = 0, c = 0, d = 1;

    UnimodularMap() = default;
    UnimodularMap(i64 a_, i64 b_, i64 c_, i64 d_);

    i64 det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }
    UnimodularMap inverse() const;
    friend UnimodularMap operator*(const UnimodularMap& l, const UnimodularMap& r);
    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

Slope act(const UnimodularMap& m, const Slope& s);
bool farey_neighbors(const Slope& s, const Slope& t);

// A map sending the primitive vector (x, y) to (1, 0).
UnimodularMap to_horizontal(i64 x, i64 y);

}  // namespace tightsfs
