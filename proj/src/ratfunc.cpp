#include "addchow/ratfunc.hpp"

#include <algorithm>

namespace addchow {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant() || g.constant_value() != 1) {
        num_ = *Poly::try_divide(num_, g);
        den_ = *Poly::try_divide(den_, g);
    }
    Rat lc = den_.leading_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw DomainError("rational function is not constant: " + str());
    return num_.constant_value() / den_.constant_value();
}

bool RatFunc::depends_on(const std::string& name) const {
    auto in = [&](const Poly& p) {
        const auto& vs = p.vars();
        return std::find(vs.begin(), vs.end(), name) != vs.end();
    };
    return in(num_) || in(den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative(const std::string& name) const {
    return RatFunc(num_.derivative(name) * den_ - num_ * den_.derivative(name),
                   den_ * den_);
}

namespace {

RatFunc subst_poly(const Poly& p, const std::string& name, const RatFunc& value) {
    RatFunc acc;
    const auto& vars = p.vars();
    for (const auto& [e, c] : p.terms()) {
        RatFunc t{c};
        for (size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            if (vars[i] == name) {
                for (int k = 0; k < e[i]; ++k) t *= value;
            } else {
                t *= RatFunc(Poly::var(vars[i]).pow(e[i]));
            }
        }
        acc += t;
    }
    return acc;
}

} // namespace

RatFunc RatFunc::substitute(const std::string& name, const RatFunc& value) const {
    if (!depends_on(name)) return *this;
    RatFunc d = subst_poly(den_, name, value);
    if (d.is_zero()) throw DomainError("substitution makes denominator vanish");
    return subst_poly(num_, name, value) / d;
}

int RatFunc::compare(const RatFunc& a, const RatFunc& b) {
    int c = Poly::compare(a.num_, b.num_);
    if (c != 0) return c;
    return Poly::compare(a.den_, b.den_);
}

std::string RatFunc::str() const {
    if (den_ == Poly(Rat(1))) return num_.str();
    auto wrap = [](const Poly& p) {
        std::string s = p.str();
        bool atom = p.terms().size() <= 1 && s.find('*') == std::string::npos &&
                    s.find('-') == std::string::npos;
        return atom ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace addchow
