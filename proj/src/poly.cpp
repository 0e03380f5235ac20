#include "addchow/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace addchow {

bool GrlexDesc::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long ta = 0, tb = 0;
    for (int e : a) ta += e;
    for (int e : b) tb += e;
    if (ta != tb) return ta > tb;
    return a > b;
}

Poly::Poly(const Rat& c) {
    if (c != 0) terms_[{}] = c;
}

Poly::Poly(long c) : Poly(Rat(c)) {}

Poly Poly::var(const std::string& name) {
    if (name.empty()) throw DomainError("variable name must be nonempty");
    Poly p;
    p.vars_ = {name};
    p.terms_[{1}] = 1;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Poly::constant_value() const {
    if (!is_constant()) throw DomainError("polynomial is not constant: " + str());
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    long t = 0;  // grlex-descending order: leading term has maximal total degree
    for (int e : terms_.begin()->first) t += e;
    return static_cast<int>(t);
}

int Poly::degree_in(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

Rat Poly::leading_coeff() const {
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

void Poly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
    if (vars_.empty()) return;
    std::vector<char> used(vars_.size(), 0);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = 1;
    if (std::all_of(used.begin(), used.end(), [](char u) { return u != 0; })) return;
    std::vector<std::string> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne;
        for (size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt[ne] = c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

Poly Poly::on_vars(const std::vector<std::string>& allvars) const {
    Poly r;
    r.vars_ = allvars;
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(allvars.begin(), allvars.end(), vars_[i]);
        assert(it != allvars.end());
        pos[i] = static_cast<size_t>(it - allvars.begin());
    }
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(allvars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_[ne] = c;
    }
    return r;
}

std::vector<std::string> Poly::merge_vars(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
    std::vector<std::string> m;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return m;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    auto vs = merge_vars(vars_, o.vars_);
    Poly a = on_vars(vs), b = o.on_vars(vs);
    for (const auto& [e, c] : b.terms_) a.terms_[e] += c;
    a.normalize();
    return *this = std::move(a);
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    auto vs = Poly::merge_vars(a.vars_, b.vars_);
    Poly x = a.on_vars(vs), y = b.on_vars(vs), r;
    r.vars_ = vs;
    for (const auto& [ea, ca] : x.terms_)
        for (const auto& [eb, cb] : y.terms_) {
            std::vector<int> e(vs.size());
            for (size_t i = 0; i < vs.size(); ++i) e[i] = ea[i] + eb[i];
            r.terms_[e] += ca * cb;
        }
    r.normalize();
    return r;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) return *this = Poly();
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw DomainError("negative polynomial power");
    Poly r{Rat(1)};
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

Poly Poly::derivative(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return Poly();
    size_t idx = static_cast<size_t>(it - vars_.begin());
    Poly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        std::vector<int> ne = e;
        ne[idx] -= 1;
        r.terms_[ne] += c * e[idx];
    }
    r.normalize();
    return r;
}

Rat Poly::eval(const std::map<std::string, Rat>& point) const {
    Rat s(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end()) throw DomainError("eval: no value for " + vars_[i]);
            for (int k = 0; k < e[i]; ++k) t *= it->second;
        }
        s += t;
    }
    return s;
}

std::optional<Poly> Poly::try_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    auto vs = merge_vars(a.vars_, b.vars_);
    Poly r = a.on_vars(vs), d = b.on_vars(vs), q;
    q.vars_ = vs;
    const auto& [eb, cb] = *d.terms_.begin();
    while (!r.terms_.empty()) {
        const auto& [er, cr] = *r.terms_.begin();
        std::vector<int> e(vs.size());
        for (size_t i = 0; i < vs.size(); ++i) {
            e[i] = er[i] - eb[i];
            if (e[i] < 0) return std::nullopt;
        }
        Rat c = cr / cb;
        Poly t;
        t.vars_ = vs;
        t.terms_[e] = c;
        q.terms_[e] = c;
        r -= t * d;
        r = r.on_vars(vs);
    }
    q.normalize();
    return q;
}

namespace {

Poly exact_div(const Poly& a, const Poly& b) {
    auto q = Poly::try_divide(a, b);
    assert(q.has_value());
    return *q;
}

Poly make_monic(Poly p) {
    Rat lc = p.leading_coeff();
    if (lc == 0 || lc == 1) return p;
    p *= Rat(1) / lc;
    return p;
}

// view of a polynomial as univariate in one variable with Poly coefficients
struct UniPoly {
    std::vector<Poly> c;  // c[k] = coefficient of x^k; trimmed

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const Poly& lc() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

UniPoly split_in(const Poly& p, const std::string& x) {
    UniPoly u;
    u.c.assign(static_cast<size_t>(p.degree_in(x)) + 1, Poly());
    const auto& vars = p.vars();
    auto it = std::find(vars.begin(), vars.end(), x);
    if (it == vars.end()) {
        u.c.assign(1, p);
        u.trim();
        return u;
    }
    size_t idx = static_cast<size_t>(it - vars.begin());
    for (const auto& [e, coeff] : p.terms()) {
        int k = e[idx];
        Poly mono{coeff};
        for (size_t i = 0; i < vars.size(); ++i) {
            if (i == idx || e[i] == 0) continue;
            mono *= Poly::var(vars[i]).pow(e[i]);
        }
        u.c[static_cast<size_t>(k)] += mono;
    }
    u.trim();
    return u;
}

Poly join_in(const UniPoly& u, const std::string& x) {
    Poly p, xp = Poly::var(x);
    for (size_t k = 0; k < u.c.size(); ++k)
        p += u.c[k] * xp.pow(static_cast<int>(k));
    return p;
}

Poly content_of(const UniPoly& u) {
    Poly g;
    for (const auto& ci : u.c) g = Poly::gcd(g, ci);
    return g;
}

UniPoly divide_coeffs(const UniPoly& u, const Poly& d) {
    UniPoly r;
    r.c.reserve(u.c.size());
    for (const auto& ci : u.c) r.c.push_back(ci.is_zero() ? Poly() : exact_div(ci, d));
    r.trim();
    return r;
}

UniPoly scale(const UniPoly& u, const Poly& s) {
    UniPoly r;
    r.c.reserve(u.c.size());
    for (const auto& ci : u.c) r.c.push_back(ci * s);
    r.trim();
    return r;
}

UniPoly sub_shifted(const UniPoly& a, const UniPoly& b, const Poly& s, int shift) {
    // a - s * x^shift * b
    UniPoly r = a;
    size_t need = b.c.size() + static_cast<size_t>(shift);
    if (r.c.size() < need) r.c.resize(need, Poly());
    for (size_t k = 0; k < b.c.size(); ++k)
        r.c[k + static_cast<size_t>(shift)] -= s * b.c[k];
    r.trim();
    return r;
}

// pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B
UniPoly prem(UniPoly A, const UniPoly& B) {
    int e = A.deg() - B.deg() + 1;
    const Poly lb = B.lc();
    while (!A.zero() && A.deg() >= B.deg()) {
        UniPoly next = sub_shifted(scale(A, lb), B, A.lc(), A.deg() - B.deg());
        A = std::move(next);
        --e;
    }
    for (; e > 0; --e) A = scale(A, lb);
    return A;
}

// subresultant polynomial remainder sequence gcd in Q[vars'][x]
Poly gcd_uni(UniPoly A, UniPoly B, const std::string& x) {
    if (A.deg() < B.deg()) std::swap(A, B);
    if (B.zero()) return join_in(A, x);
    Poly ca = content_of(A), cb = content_of(B);
    Poly cont = Poly::gcd(ca, cb);
    UniPoly P = divide_coeffs(A, ca), Q = divide_coeffs(B, cb);
    if (Q.deg() == 0) return cont;
    Poly g{Rat(1)}, h{Rat(1)};
    while (true) {
        int d = P.deg() - Q.deg();
        UniPoly R = prem(P, Q);
        if (R.zero()) break;
        if (R.deg() == 0) return cont;  // primitive part of gcd is a unit
        P = Q;
        Q = divide_coeffs(R, g * h.pow(d));
        g = P.lc();
        if (d > 0) h = exact_div(g.pow(d), h.pow(d - 1));
    }
    UniPoly pp = divide_coeffs(Q, content_of(Q));
    return cont * join_in(pp, x);
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly{Rat(1)};
    auto vs = merge_vars(a.vars_, b.vars_);
    const std::string& x = vs.back();
    Poly g = gcd_uni(split_in(a.on_vars(vs), x), split_in(b.on_vars(vs), x), x);
    return make_monic(g);
}

bool Poly::operator==(const Poly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_ ? -1 : 1;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) {
            return GrlexDesc{}(ia->first, ib->first) ? 1 : -1;
        }
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << mono;
        }
    }
    return os.str();
}

} // namespace addchow
