#include "addchow/projective.hpp"

#include <sstream>

namespace addchow {

ProjValue ProjValue::infinity() {
    ProjValue p;
    p.inf_ = true;
    return p;
}

ProjValue ProjValue::ratio(const RatFunc& p, const RatFunc& q) {
    if (q.is_zero()) {
        if (p.is_zero()) throw DomainError("projective ratio 0/0");
        return infinity();
    }
    return ProjValue(p / q);
}

const RatFunc& ProjValue::value() const {
    if (inf_) throw DomainError("value() of the infinite point");
    return v_;
}

ProjValue ProjValue::reciprocal() const {
    if (inf_) return ProjValue(RatFunc(0));
    if (v_.is_zero()) return infinity();
    return ProjValue(v_.inverse());
}

bool ProjValue::operator==(const ProjValue& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || v_ == o.v_;
}

int ProjValue::compare(const ProjValue& a, const ProjValue& b) {
    if (a.inf_ != b.inf_) return a.inf_ ? 1 : -1;
    if (a.inf_) return 0;
    return RatFunc::compare(a.v_, b.v_);
}

std::string ProjValue::str() const { return inf_ ? "inf" : v_.str(); }

Mobius::Mobius(RatFunc a, RatFunc b, RatFunc c, RatFunc d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    bool constant_form = a_.is_zero() && c_.is_zero() && !d_.is_zero();
    if (!constant_form && det().is_zero())
        throw DomainError("degenerate fractional-linear map");
    normalize();
}

void Mobius::normalize() {
    for (const RatFunc* e : {&a_, &b_, &c_, &d_}) {
        if (!e->is_zero()) {
            RatFunc s = e->inverse();
            a_ *= s;
            b_ *= s;
            c_ *= s;
            d_ *= s;
            return;
        }
    }
}

Mobius Mobius::identity() { return Mobius(RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)); }

Mobius Mobius::constant(const RatFunc& value) {
    return Mobius(RatFunc(0), value, RatFunc(0), RatFunc(1));
}

Mobius Mobius::from_ratfunc(const RatFunc& f, const std::string& param) {
    auto linear = [&](const Poly& p) -> std::pair<RatFunc, RatFunc> {
        if (p.degree_in(param) > 1)
            throw DomainError("coordinate is not fractional-linear in " + param);
        Poly lead = p.derivative(param);           // degree <= 1, so this is the s-coefficient
        Poly cnst = p - lead * Poly::var(param);
        return {RatFunc(lead), RatFunc(cnst)};
    };
    auto [a, b] = linear(f.num());
    auto [c, d] = linear(f.den());
    return Mobius(a, b, c, d);
}

bool Mobius::is_constant() const { return a_.is_zero() && c_.is_zero(); }

ProjValue Mobius::eval(const ProjValue& s) const {
    if (is_constant()) return ProjValue(b_ / d_);
    if (s.is_infinite()) return ProjValue::ratio(a_, c_);
    const RatFunc& v = s.value();
    return ProjValue::ratio(a_ * v + b_, c_ * v + d_);
}

std::optional<ProjValue> Mobius::solve(const ProjValue& target) const {
    if (is_constant()) {
        if (eval(ProjValue(RatFunc(0))) == target)
            throw ImproperIntersection("constant coordinate lies on the face " + target.str());
        return std::nullopt;
    }
    // apply the inverse matrix (d, -b; -c, a)
    if (target.is_infinite()) return ProjValue::ratio(d_, -c_);
    const RatFunc& v = target.value();
    return ProjValue::ratio(d_ * v - b_, -c_ * v + a_);
}

RatFunc Mobius::as_ratfunc(const std::string& param) const {
    if (is_constant()) return b_ / d_;
    RatFunc s = RatFunc::var(param);
    RatFunc den = c_ * s + d_;
    if (den.is_zero()) throw DomainError("map is identically infinite");
    return (a_ * s + b_) / den;
}

bool Mobius::operator==(const Mobius& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

int Mobius::compare(const Mobius& x, const Mobius& y) {
    for (auto [p, q] : {std::pair{&x.a_, &y.a_}, {&x.b_, &y.b_}, {&x.c_, &y.c_}, {&x.d_, &y.d_}}) {
        int c = RatFunc::compare(*p, *q);
        if (c != 0) return c;
    }
    return 0;
}

std::string Mobius::str(const std::string& param) const {
    std::ostringstream os;
    auto term = [&](const RatFunc& coef, bool with_s) -> std::string {
        if (coef.is_zero()) return "";
        std::string cs = coef.str();
        if (!with_s) return cs;
        if (cs == "1") return param;
        bool atom = cs.find_first_of("+-/ ") == std::string::npos;
        return (atom ? cs : "(" + cs + ")") + "*" + param;
    };
    auto side = [&](const RatFunc& lin, const RatFunc& cst) -> std::string {
        std::string l = term(lin, true), c = term(cst, false);
        if (l.empty() && c.empty()) return "0";
        if (l.empty()) return c;
        if (c.empty()) return l;
        return l + " + " + c;
    };
    os << "(" << side(a_, b_) << ")/(" << side(c_, d_) << ")";
    return os.str();
}

} // namespace addchow
