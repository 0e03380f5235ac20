#pragma once

#include <optional>
#include <string>

#include "addchow/ratfunc.hpp"

namespace addchow {

// A point of P^1 over the rational-function field: either a finite RatFunc or infinity.
class ProjValue {
public:
    ProjValue() = default;  // 0
    ProjValue(const RatFunc& v) : v_(v) {}
    ProjValue(long c) : v_(RatFunc(c)) {}
    static ProjValue infinity();
    // p/q with (p, q) != (0, 0); q = 0 gives infinity
    static ProjValue ratio(const RatFunc& p, const RatFunc& q);

    bool is_infinite() const { return inf_; }
    const RatFunc& value() const;
    bool is_zero() const { return !inf_ && v_.is_zero(); }
    bool is_one() const { return !inf_ && v_.is_one(); }

    ProjValue reciprocal() const;  // 1/v; 0 <-> infinity

    bool operator==(const ProjValue& o) const;
    static int compare(const ProjValue& a, const ProjValue& b);
    bool operator<(const ProjValue& o) const { return compare(*this, o) < 0; }

    std::string str() const;

private:
    bool inf_ = false;
    RatFunc v_;
};

// Fractional-linear map s -> (a s + b) / (c s + d) with RatFunc entries, normalized by
// the first nonzero entry so projectively-equal maps compare equal. Non-degenerate maps
// have a*d - b*c != 0; the constant map (a = c = 0, d != 0) is also admitted and flagged.
class Mobius {
public:
    Mobius(RatFunc a, RatFunc b, RatFunc c, RatFunc d);
    static Mobius identity();
    static Mobius constant(const RatFunc& value);
    // interpret f as a map of its `param` variable; fails if not degree <= 1 in param
    static Mobius from_ratfunc(const RatFunc& f, const std::string& param);

    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    const RatFunc& c() const { return c_; }
    const RatFunc& d() const { return d_; }

    bool is_constant() const;
    RatFunc det() const { return a_ * d_ - b_ * c_; }

    ProjValue eval(const ProjValue& s) const;
    // the s with eval(s) == target; nullopt for constant maps missing the target,
    // ImproperIntersection for constant maps hitting it
    std::optional<ProjValue> solve(const ProjValue& target) const;

    // f as a rational function of the named parameter (finite part); requires non-constant
    RatFunc as_ratfunc(const std::string& param) const;

    bool operator==(const Mobius& o) const;
    static int compare(const Mobius& a, const Mobius& b);
    bool operator<(const Mobius& o) const { return compare(*this, o) < 0; }

    std::string str(const std::string& param) const;

private:
    RatFunc a_, b_, c_, d_;

    void normalize();
};

} // namespace addchow
