#include "addchow/forms.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "addchow/expr.hpp"

namespace addchow {

DiffForm::DiffForm(int degree) : degree_(degree) {
    if (degree < 0) throw DomainError("negative form degree");
}

void DiffForm::insert(std::vector<std::string> idx, RatFunc coeff) {
    if (static_cast<int>(idx.size()) != degree_)
        throw DomainError("wedge tuple length does not match form degree");
    if (coeff.is_zero()) return;
    for (size_t i = 0; i + 1 < idx.size(); ++i)
        if (!(idx[i] < idx[i + 1])) throw DomainError("wedge tuple must be strictly increasing");
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(std::move(idx), std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffForm DiffForm::scalar(const RatFunc& f) {
    DiffForm w(0);
    w.insert({}, f);
    return w;
}

DiffForm DiffForm::monomial(const RatFunc& f, std::vector<std::string> idx) {
    DiffForm w(static_cast<int>(idx.size()));
    w.insert(std::move(idx), f);
    return w;
}

DiffForm DiffForm::d(const RatFunc& f) {
    DiffForm w(1);
    std::set<std::string> vars;
    for (const auto& v : f.num().vars()) vars.insert(v);
    for (const auto& v : f.den().vars()) vars.insert(v);
    for (const auto& v : vars) w.insert({v}, f.derivative(v));
    return w;
}

DiffForm DiffForm::dlog(const RatFunc& f) {
    if (f.is_zero()) throw DomainError("dlog of zero");
    return d(f).scaled(f.inverse());
}

DiffForm DiffForm::operator-() const {
    DiffForm w(degree_);
    for (const auto& [idx, c] : terms_) w.terms_.emplace(idx, -c);
    return w;
}

DiffForm operator+(const DiffForm& a, const DiffForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_) throw DomainError("adding forms of different degree");
    DiffForm w = a;
    for (const auto& [idx, c] : b.terms_) w.insert(idx, c);
    return w;
}

DiffForm operator-(const DiffForm& a, const DiffForm& b) { return a + (-b); }

DiffForm DiffForm::scaled(const RatFunc& f) const {
    DiffForm w(degree_);
    if (f.is_zero()) return w;
    for (const auto& [idx, c] : terms_) w.terms_.emplace(idx, c * f);
    return w;
}

DiffForm DiffForm::scaled(const Int& c) const { return scaled(RatFunc(Rat(c))); }

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    DiffForm w(a.degree_ + b.degree_);
    for (const auto& [ia, ca] : a.terms_) {
        for (const auto& [ib, cb] : b.terms_) {
            // merge the two increasing tuples, tracking the permutation sign
            std::vector<std::string> idx;
            idx.reserve(ia.size() + ib.size());
            size_t p = 0, q = 0;
            int inversions = 0;
            bool repeated = false;
            while (p < ia.size() && q < ib.size()) {
                if (ia[p] == ib[q]) {
                    repeated = true;
                    break;
                }
                if (ia[p] < ib[q]) {
                    idx.push_back(ia[p++]);
                } else {
                    // ib[q] jumps over the remaining entries of ia
                    inversions += static_cast<int>(ia.size() - p);
                    idx.push_back(ib[q++]);
                }
            }
            if (repeated) continue;
            while (p < ia.size()) idx.push_back(ia[p++]);
            while (q < ib.size()) idx.push_back(ib[q++]);
            RatFunc c = ca * cb;
            if (inversions % 2 != 0) c = -c;
            w.insert(std::move(idx), std::move(c));
        }
    }
    return w;
}

DiffForm exterior_d(const DiffForm& w) {
    DiffForm out(w.degree_ + 1);
    for (const auto& [idx, c] : w.terms_)
        out = out + wedge(DiffForm::d(c), DiffForm::monomial(RatFunc(1), idx));
    return out;
}

bool DiffForm::operator==(const DiffForm& o) const {
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
}

std::string DiffForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool needs_paren = cs.find_first_of("+- */") != std::string::npos;
        std::string coeff = needs_paren ? "(" + cs + ")" : cs;
        if (idx.empty()) {
            os << coeff;
            continue;
        }
        if (coeff != "1") os << coeff << "*";
        for (size_t i = 0; i < idx.size(); ++i) {
            if (i) os << "^";
            os << "d(" << idx[i] << ")";
        }
    }
    return os.str();
}

DiffForm reg(const FormalCycle& z) {
    if (z.space().ring.e != 1)
        throw DomainError("regulator needs a single affine coordinate");
    DiffForm out(z.space().n);
    for (const auto& [t, d] : z.terms()) {
        if (!term_is_point(t)) throw DomainError("regulator is defined on point terms");
        const auto& p = std::get<PointTerm>(t);
        DiffForm piece = DiffForm::scalar(p.a[0].inverse());
        for (const auto& v : p.box) piece = wedge(piece, DiffForm::dlog(v.value()));
        out = out + piece.scaled(d.coeff);
    }
    return out;
}

RegDeltaReport reg_delta_factor_check(const FormalCycle& z) {
    const int n = z.space().n;
    RegDeltaReport rep;
    rep.factor = n + 1;
    DiffForm lhs = reg(delta(z));
    DiffForm rhs = exterior_d(reg(z)).scaled(Int(n + 1));
    if (lhs.is_zero() && rhs.is_zero()) {
        rep.ok = true;
    } else if (lhs == rhs) {
        rep.ok = true;
        rep.sign = 1;
    } else if (lhs == -rhs) {
        rep.ok = true;
        rep.sign = -1;
    }
    return rep;
}

namespace {

struct FormParser {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at offset " + std::to_string(i) + " in form '" + s + "'");
    }

    std::string balanced_parens() {
        skip();
        if (i >= s.size() || s[i] != '(') fail("expected '('");
        size_t start = ++i;
        int depth = 1;
        while (i < s.size() && depth > 0) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            ++i;
        }
        if (depth != 0) fail("unbalanced parentheses");
        return s.substr(start, i - start - 1);
    }

    DiffForm factor() {
        skip();
        if (i >= s.size()) fail("unexpected end of form");
        if (s.compare(i, 5, "dlog(") == 0) {
            i += 4;
            return DiffForm::dlog(parse_ratfunc(balanced_parens()));
        }
        if (s.compare(i, 2, "d(") == 0) {
            i += 1;
            return DiffForm::d(parse_ratfunc(balanced_parens()));
        }
        if (s[i] == '(') return DiffForm::scalar(parse_ratfunc(balanced_parens()));
        if (s[i] == '-') {
            ++i;
            return -factor();
        }
        size_t j = i;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            ++j;
        if (j == i) fail("expected a form atom");
        std::string tok = s.substr(i, j - i);
        i = j;
        return DiffForm::scalar(parse_ratfunc(tok));
    }

    DiffForm wedge_chain() {
        DiffForm w = factor();
        while (true) {
            skip();
            if (eat('*') || eat('^')) w = wedge(w, factor());
            else return w;
        }
    }

    DiffForm form() {
        DiffForm w = wedge_chain();
        while (true) {
            skip();
            if (eat('+')) w = w + wedge_chain();
            else if (eat('-')) w = w - wedge_chain();
            else return w;
        }
    }
};

} // namespace

DiffForm parse_form(const std::string& text) {
    FormParser p{text, 0};
    DiffForm w = p.form();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return w;
}

} // namespace addchow
