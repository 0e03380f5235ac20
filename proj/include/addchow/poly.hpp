#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "addchow/error.hpp"

namespace addchow {

using Int = mpz_class;
using Rat = mpq_class;

// graded-lex descending order on exponent vectors of equal length
struct GrlexDesc {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Multivariate polynomial over Q with a canonical form: variable names sorted,
// variables with zero exponent everywhere dropped, terms ordered grlex-descending,
// zero coefficients pruned.
class Poly {
public:
    using TermMap = std::map<std::vector<int>, Rat, GrlexDesc>;

    Poly() = default;                       // zero
    explicit Poly(const Rat& c);
    explicit Poly(long c);
    static Poly var(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;             // requires is_constant()
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    int total_degree() const;               // -1 for the zero polynomial
    int degree_in(const std::string& name) const;
    Rat leading_coeff() const;              // grlex leading term; 0 for zero poly

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c);
    Poly pow(int k) const;

    Poly derivative(const std::string& name) const;
    Rat eval(const std::map<std::string, Rat>& point) const;

    // exact division; nullopt when b does not divide a
    static std::optional<Poly> try_divide(const Poly& a, const Poly& b);
    // gcd normalized to grlex-monic; gcd(0,0) = 0
    static Poly gcd(const Poly& a, const Poly& b);

    bool operator==(const Poly& o) const;
    // total order: variable lists, then terms (for use as map key)
    static int compare(const Poly& a, const Poly& b);
    bool operator<(const Poly& o) const { return compare(*this, o) < 0; }

    std::string str() const;

private:
    std::vector<std::string> vars_;         // strictly increasing
    TermMap terms_;

    void normalize();
    // reindex exponents onto a superset variable list (must contain vars_)
    Poly on_vars(const std::vector<std::string>& allvars) const;
    static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b);
    friend class PolyUni;
};

} // namespace addchow
