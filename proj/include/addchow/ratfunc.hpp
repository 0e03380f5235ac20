#pragma once

#include <string>

#include "addchow/poly.hpp"

namespace addchow {

// Rational function over Q in canonical form: numerator and denominator coprime,
// denominator grlex-monic, zero represented as 0/1. Equality is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(long c) : num_(c), den_(Rat(1)) {}
    explicit RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}
    RatFunc(Poly num, Poly den);
    static RatFunc var(const std::string& name) { return RatFunc(Poly::var(name)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(Rat(1)) && den_ == Poly(Rat(1)); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;
    bool depends_on(const std::string& name) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc inverse() const;

    RatFunc derivative(const std::string& name) const;
    // substitute a rational function for one variable
    RatFunc substitute(const std::string& name, const RatFunc& value) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    static int compare(const RatFunc& a, const RatFunc& b);
    bool operator<(const RatFunc& o) const { return compare(*this, o) < 0; }

    std::string str() const;

private:
    Poly num_, den_;

    void normalize();
};

} // namespace addchow
