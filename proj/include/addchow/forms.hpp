#pragma once

#include <map>
#include <string>
#include <vector>

#include "addchow/cycles.hpp"
#include "addchow/ratfunc.hpp"

namespace addchow {

// Element of Omega^n over the rational function field: RatFunc coefficients on
// strictly increasing wedge-tuples of variable differentials.
class DiffForm {
public:
    explicit DiffForm(int degree = 0);
    static DiffForm scalar(const RatFunc& f);
    static DiffForm monomial(const RatFunc& f, std::vector<std::string> idx);
    static DiffForm d(const RatFunc& f);     // total differential, degree 1
    static DiffForm dlog(const RatFunc& f);  // df / f; f must be nonzero

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<std::string>, RatFunc>& terms() const { return terms_; }

    DiffForm operator-() const;
    friend DiffForm operator+(const DiffForm& a, const DiffForm& b);
    friend DiffForm operator-(const DiffForm& a, const DiffForm& b);
    DiffForm scaled(const RatFunc& f) const;
    DiffForm scaled(const Int& c) const;

    friend DiffForm wedge(const DiffForm& a, const DiffForm& b);
    friend DiffForm exterior_d(const DiffForm& w);

    // equal degree and identical terms; zero forms of any degree compare equal
    bool operator==(const DiffForm& o) const;

    std::string str() const;

private:
    int degree_;
    std::map<std::vector<std::string>, RatFunc> terms_;

    void insert(std::vector<std::string> idx, RatFunc coeff);
};

// (x; t1, ..., tn) -> (1/x) dlog t1 ^ ... ^ dlog tn, extended linearly;
// defined on single-affine point cycles
DiffForm reg(const FormalCycle& z);

struct RegDeltaReport {
    bool ok = false;
    int sign = 0;    // reg(delta z) == sign * (n+1) * d(reg z); 0 when both sides vanish
    int factor = 0;  // n + 1
};
RegDeltaReport reg_delta_factor_check(const FormalCycle& z);

// Form syntax: sums of wedge chains, e.g. "(1/u) * dlog(v) ^ dlog(u*w) + d(u) ^ d(v)".
// '*' and '^' both denote the exterior product; scalar factors are parenthesized
// expressions, identifiers, or numbers; d(...) and dlog(...) are the degree-1 atoms.
DiffForm parse_form(const std::string& text);

} // namespace addchow
