#include "addchow/cycles.hpp"

#include <algorithm>
#include <sstream>

namespace addchow {

ModulusRing ModulusRing::monomial(int m) {
    if (m < 1) throw DomainError("truncation exponent must be >= 1");
    return ModulusRing{1, {m}};
}

ModulusRing ModulusRing::tensor(const ModulusRing& o) const {
    if (e != 1 || o.e != 1) throw DomainError("tensor of rings needs two single factors");
    return ModulusRing{2, {m[0], o.m[0]}};
}

ModulusRing ModulusRing::min_ring(const ModulusRing& o) const {
    if (e != 1 || o.e != 1) throw DomainError("min of rings needs two single factors");
    return monomial(std::min(m[0], o.m[0]));
}

bool ModulusRing::operator<(const ModulusRing& o) const {
    if (e != o.e) return e < o.e;
    return m < o.m;
}

std::string ModulusRing::str() const {
    std::string s = "m=" + std::to_string(m[0]);
    for (size_t i = 1; i < m.size(); ++i) s += "," + std::to_string(m[i]);
    return s;
}

bool SlotSpace::operator<(const SlotSpace& o) const {
    if (!(ring == o.ring)) return ring < o.ring;
    return n < o.n;
}

std::string SlotSpace::str() const {
    return "e=" + std::to_string(ring.e) + " n=" + std::to_string(n) + " " + ring.str();
}

namespace {

int slot_order(const CurveSlot& a, const CurveSlot& b) {
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    if (a.index() == 0)
        return ProjValue::compare(std::get<ProjValue>(a), std::get<ProjValue>(b));
    return Mobius::compare(std::get<Mobius>(a), std::get<Mobius>(b));
}

template <class T, class Cmp>
int vec_order(const std::vector<T>& a, const std::vector<T>& b, Cmp cmp) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace

int term_order(const CycleTerm& a, const CycleTerm& b) {
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    if (term_is_point(a)) {
        const auto& p = std::get<PointTerm>(a);
        const auto& q = std::get<PointTerm>(b);
        int c = vec_order(p.a, q.a, RatFunc::compare);
        if (c != 0) return c;
        return vec_order(p.box, q.box, ProjValue::compare);
    }
    const auto& p = std::get<CurveTerm>(a);
    const auto& q = std::get<CurveTerm>(b);
    int c = vec_order(p.a, q.a, RatFunc::compare);
    if (c != 0) return c;
    return vec_order(p.box, q.box, slot_order);
}

bool term_is_point(const CycleTerm& t) { return t.index() == 0; }

std::string term_str(const CycleTerm& t) {
    std::ostringstream os;
    os << "(";
    auto join_a = [&os](const std::vector<RatFunc>& a) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) os << ", ";
            os << a[i].str();
        }
    };
    if (term_is_point(t)) {
        const auto& p = std::get<PointTerm>(t);
        join_a(p.a);
        if (!p.box.empty()) {
            os << "; ";
            for (size_t i = 0; i < p.box.size(); ++i) {
                if (i) os << ", ";
                os << p.box[i].str();
            }
        }
    } else {
        const auto& c = std::get<CurveTerm>(t);
        join_a(c.a);
        if (!c.box.empty()) {
            os << "; ";
            for (size_t i = 0; i < c.box.size(); ++i) {
                if (i) os << ", ";
                if (c.box[i].index() == 0) os << std::get<ProjValue>(c.box[i]).str();
                else os << std::get<Mobius>(c.box[i]).str("s");
            }
        }
    }
    os << ")";
    return os.str();
}

bool FormalCycle::all_points() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return term_is_point(kv.first); });
}

void FormalCycle::add(CycleTerm t, Int coeff, bool decomposable) {
    if (coeff == 0) return;
    // a coordinate identically 1 puts the term in the removed degenerate locus
    // (term is zero); identically 0 or infinite means it sits inside a face
    bool degenerate = false, on_face = false;
    auto classify = [&](const ProjValue& v) {
        if (v.is_one()) degenerate = true;
        else if (v.is_zero() || v.is_infinite()) on_face = true;
    };
    if (term_is_point(t)) {
        auto& p = std::get<PointTerm>(t);
        if (static_cast<int>(p.a.size()) != space_.ring.e ||
            static_cast<int>(p.box.size()) != space_.n)
            throw DomainError("term shape does not match the slot space");
        for (const auto& x : p.a)
            if (x.is_zero()) return;  // vanishing affine coordinate kills the term
        for (const auto& v : p.box) classify(v);
    } else {
        auto& c = std::get<CurveTerm>(t);
        if (static_cast<int>(c.a.size()) != space_.ring.e ||
            static_cast<int>(c.box.size()) != space_.n)
            throw DomainError("term shape does not match the slot space");
        for (const auto& x : c.a)
            if (x.is_zero()) return;
        bool parametrized = false;
        for (auto& s : c.box) {
            if (s.index() == 1 && std::get<Mobius>(s).is_constant())
                s = std::get<Mobius>(s).eval(ProjValue(RatFunc(0)));  // canonical form
            if (s.index() == 0) {
                classify(std::get<ProjValue>(s));
            } else {
                parametrized = true;
            }
        }
        if (!parametrized)
            throw DomainError("curve term without a parametrized slot");
    }
    if (degenerate) return;
    if (on_face)
        throw ImproperIntersection("box coordinate lies on a face: " + term_str(t));

    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(std::move(t), TermData{std::move(coeff), decomposable});
    } else {
        it->second.coeff += coeff;
        it->second.decomposable = it->second.decomposable || decomposable;
        if (it->second.coeff == 0) terms_.erase(it);
    }
}

FormalCycle FormalCycle::operator-() const { return scaled(-1); }

FormalCycle operator+(const FormalCycle& x, const FormalCycle& y) {
    if (!(x.space_ == y.space_)) throw DomainError("adding cycles from different spaces");
    FormalCycle r = x;
    for (const auto& [t, d] : y.terms_) r.add(t, d.coeff, d.decomposable);
    return r;
}

FormalCycle operator-(const FormalCycle& x, const FormalCycle& y) { return x + (-y); }

FormalCycle FormalCycle::scaled(const Int& c) const {
    FormalCycle r(space_);
    if (c == 0) return r;
    for (const auto& [t, d] : terms_) r.add(t, d.coeff * c, d.decomposable);
    return r;
}

bool FormalCycle::operator==(const FormalCycle& o) const {
    if (!(space_ == o.space_) || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (term_order(it->first, jt->first) != 0 || it->second.coeff != jt->second.coeff)
            return false;
    }
    return true;
}

std::string FormalCycle::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, d] : terms_) {
        Int a = abs(d.coeff);
        if (first) {
            if (d.coeff < 0) os << "-";
            first = false;
        } else {
            os << (d.coeff < 0 ? " - " : " + ");
        }
        if (a != 1) os << a.get_str() << "*";
        os << term_str(t);
    }
    return os.str();
}

FormalCycle zero_cycle(SlotSpace space) { return FormalCycle(std::move(space)); }

FormalCycle point_cycle(const ModulusRing& ring, std::vector<RatFunc> a,
                        std::vector<ProjValue> box) {
    FormalCycle z(SlotSpace{ring, static_cast<int>(box.size())});
    z.add(PointTerm{std::move(a), std::move(box)}, 1);
    return z;
}

namespace {

SlotSpace facet_space(const SlotSpace& s) {
    if (s.n == 0) throw DomainError("no box slot to intersect");
    return SlotSpace{s.ring, s.n - 1};
}

} // namespace

FormalCycle face(const FormalCycle& z, int i, FaceEnd end) {
    const int n = z.space().n;
    if (i < 1 || i > n) throw DomainError("face index out of range");
    FormalCycle out(facet_space(z.space()));
    ProjValue target = end == FaceEnd::Zero ? ProjValue(RatFunc(0)) : ProjValue::infinity();
    for (const auto& [t, d] : z.terms()) {
        if (term_is_point(t)) continue;  // admissible points miss every face
        const auto& c = std::get<CurveTerm>(t);
        const CurveSlot& slot = c.box[static_cast<size_t>(i - 1)];
        std::optional<ProjValue> s0;
        if (slot.index() == 0) {
            if (std::get<ProjValue>(slot) == target)
                throw ImproperIntersection("curve lies inside the face: " + term_str(t));
            continue;  // constant slot off the face: empty intersection
        }
        s0 = std::get<Mobius>(slot).solve(target);
        if (!s0) continue;
        PointTerm p;
        p.a = c.a;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const CurveSlot& sj = c.box[static_cast<size_t>(j - 1)];
            if (sj.index() == 0) p.box.push_back(std::get<ProjValue>(sj));
            else p.box.push_back(std::get<Mobius>(sj).eval(*s0));
        }
        out.add(std::move(p), d.coeff, d.decomposable);
    }
    return out;
}

FormalCycle boundary(const FormalCycle& z, BoundaryMode mode) {
    const int n = z.space().n;
    if (n == 0) return zero_cycle(SlotSpace{z.space().ring, 0});
    if (mode == BoundaryMode::LastZero) return face(z, n, FaceEnd::Zero);
    FormalCycle out(facet_space(z.space()));
    for (int i = 1; i <= n; ++i) {
        FormalCycle fi = face(z, i, FaceEnd::Zero) - face(z, i, FaceEnd::Infinity);
        out = out + (i % 2 == 0 ? fi : -fi);
    }
    return out;
}

FormalCycle delta_insert(const FormalCycle& z, int k) {
    if (z.space().ring.e != 1)
        throw DomainError("reciprocal insertion needs a single affine coordinate");
    const int n = z.space().n;
    if (k < 1 || k > n + 1) throw DomainError("insertion slot out of range");
    FormalCycle out(SlotSpace{z.space().ring, n + 1});
    for (const auto& [t, d] : z.terms()) {
        if (term_is_point(t)) {
            const auto& p = std::get<PointTerm>(t);
            PointTerm q;
            q.a = p.a;
            q.box = p.box;
            q.box.insert(q.box.begin() + (k - 1), ProjValue(p.a[0].inverse()));
            out.add(std::move(q), d.coeff, d.decomposable);
        } else {
            const auto& c = std::get<CurveTerm>(t);
            CurveTerm q;
            q.a = c.a;
            q.box = c.box;
            q.box.insert(q.box.begin() + (k - 1), CurveSlot(ProjValue(c.a[0].inverse())));
            out.add(std::move(q), d.coeff, d.decomposable);
        }
    }
    return out;
}

FormalCycle delta(const FormalCycle& z) {
    const int n = z.space().n;
    FormalCycle out(SlotSpace{z.space().ring, n + 1});
    for (int k = 1; k <= n + 1; ++k) {
        FormalCycle dk = delta_insert(z, k);
        out = out + (k % 2 == 0 ? dk : -dk);
    }
    return out;
}

bool is_reduced(const FormalCycle& z) {
    const int n = z.space().n;
    for (int i = 1; i <= n; ++i) {
        if (i < n && !face(z, i, FaceEnd::Zero).is_zero()) return false;
        if (!face(z, i, FaceEnd::Infinity).is_zero()) return false;
    }
    return true;
}

AdmissReport admissible(const FormalCycle& z) {
    try {
        for (int i = 1; i <= z.space().n; ++i) {
            face(z, i, FaceEnd::Zero);
            face(z, i, FaceEnd::Infinity);
        }
    } catch (const ImproperIntersection& e) {
        return {false, e.what()};
    }
    return {true, "faces proper; modulus bound automatic for constant affine coordinates"};
}

AdmissReport admissible_term(const SlotSpace& space, const CycleTerm& term) {
    const auto& a = term_is_point(term) ? std::get<PointTerm>(term).a
                                        : std::get<CurveTerm>(term).a;
    for (const auto& coord : a) {
        if (coord.is_zero())
            return {false,
                    "affine coordinate is identically zero, so the reciprocal coordinate "
                    "and the modulus condition are undefined"};
    }
    FormalCycle z(space);
    try {
        z.add(CycleTerm(term), 1);
    } catch (const Error& e) {
        return {false, e.what()};
    }
    return admissible(z);
}

FormalCycle act_on_slots(const Permutation& sigma, const FormalCycle& z) {
    const int n = z.space().n;
    if (sigma.degree() != n) throw DomainError("permutation degree does not match slots");
    Permutation inv = sigma.inverse();
    FormalCycle out(z.space());
    for (const auto& [t, d] : z.terms()) {
        if (term_is_point(t)) {
            const auto& p = std::get<PointTerm>(t);
            PointTerm q;
            q.a = p.a;
            q.box.reserve(p.box.size());
            for (int j = 1; j <= n; ++j) q.box.push_back(p.box[static_cast<size_t>(inv(j) - 1)]);
            out.add(std::move(q), d.coeff, d.decomposable);
        } else {
            const auto& c = std::get<CurveTerm>(t);
            CurveTerm q;
            q.a = c.a;
            q.box.reserve(c.box.size());
            for (int j = 1; j <= n; ++j) q.box.push_back(c.box[static_cast<size_t>(inv(j) - 1)]);
            out.add(std::move(q), d.coeff, d.decomposable);
        }
    }
    return out;
}

namespace {

std::vector<CurveSlot> as_slots(const std::vector<ProjValue>& box) {
    std::vector<CurveSlot> s;
    s.reserve(box.size());
    for (const auto& v : box) s.emplace_back(v);
    return s;
}

} // namespace

FormalCycle concat(const FormalCycle& x, const FormalCycle& y) {
    if (x.space().ring.e != 1 || y.space().ring.e != 1)
        throw DomainError("concatenation needs single-affine factors");
    SlotSpace sp{x.space().ring.tensor(y.space().ring), x.space().n + y.space().n};
    FormalCycle out(sp);
    for (const auto& [tx, dx] : x.terms()) {
        for (const auto& [ty, dy] : y.terms()) {
            Int coeff = dx.coeff * dy.coeff;
            if (term_is_point(tx) && term_is_point(ty)) {
                const auto& p = std::get<PointTerm>(tx);
                const auto& q = std::get<PointTerm>(ty);
                PointTerm r;
                r.a = {p.a[0], q.a[0]};
                r.box = p.box;
                r.box.insert(r.box.end(), q.box.begin(), q.box.end());
                out.add(std::move(r), coeff, true);
            } else if (!term_is_point(tx) && !term_is_point(ty)) {
                throw SizeLimitError("product of two parametrized factors is a surface");
            } else {
                const auto* cp = term_is_point(tx) ? nullptr : &std::get<CurveTerm>(tx);
                CurveTerm r;
                if (cp) {
                    const auto& q = std::get<PointTerm>(ty);
                    r.a = {cp->a[0], q.a[0]};
                    r.box = cp->box;
                    auto tail = as_slots(q.box);
                    r.box.insert(r.box.end(), tail.begin(), tail.end());
                } else {
                    const auto& p = std::get<PointTerm>(tx);
                    const auto& cq = std::get<CurveTerm>(ty);
                    r.a = {p.a[0], cq.a[0]};
                    r.box = as_slots(p.box);
                    r.box.insert(r.box.end(), cq.box.begin(), cq.box.end());
                }
                out.add(std::move(r), coeff, true);
            }
        }
    }
    return out;
}

FormalCycle shuffle_product(const FormalCycle& x, const FormalCycle& y) {
    FormalCycle base = concat(x, y);
    FormalCycle out(base.space());
    for (const auto& sigma : enumerate_shuffles({{x.space().n, y.space().n}}))
        out = out + act_on_slots(sigma, base).scaled(sigma.sign());
    return out;
}

FormalCycle mu_push(const FormalCycle& z) {
    if (z.space().ring.e != 2)
        throw DomainError("affine multiplication needs two affine coordinates");
    ModulusRing target = ModulusRing::monomial(std::min(z.space().ring.m[0], z.space().ring.m[1]));
    FormalCycle out(SlotSpace{target, z.space().n});
    for (const auto& [t, d] : z.terms()) {
        if (!d.decomposable)
            throw DomainError("affine multiplication needs decomposable terms: " + term_str(t));
        if (term_is_point(t)) {
            const auto& p = std::get<PointTerm>(t);
            out.add(PointTerm{{p.a[0] * p.a[1]}, p.box}, d.coeff);
        } else {
            const auto& c = std::get<CurveTerm>(t);
            out.add(CurveTerm{{c.a[0] * c.a[1]}, c.box}, d.coeff);
        }
    }
    return out;
}

FormalCycle wedge(const FormalCycle& x, const FormalCycle& y) {
    return mu_push(shuffle_product(x, y));
}

namespace {

const char* kParam = "_s";

} // namespace

FormalCycle extra_degenerate_concat(const FormalCycle& x, const FormalCycle& y) {
    if (x.space().ring.e != 1 || y.space().ring.e != 1)
        throw DomainError("extra-degenerate concatenation needs single-affine factors");
    if (!x.all_points() || !y.all_points())
        throw DomainError("extra-degenerate concatenation is defined on point terms");
    SlotSpace sp{x.space().ring.min_ring(y.space().ring), x.space().n + y.space().n + 2};
    FormalCycle out(sp);
    RatFunc s = RatFunc::var(kParam);
    for (const auto& [tx, dx] : x.terms()) {
        for (const auto& [ty, dy] : y.terms()) {
            const auto& p = std::get<PointTerm>(tx);
            const auto& q = std::get<PointTerm>(ty);
            RatFunc b1 = p.a[0].inverse(), b2 = q.a[0].inverse();
            RatFunc denom = s - b1 * b2;
            Mobius m = Mobius::from_ratfunc((b1 * s - b1 * b2) / denom, kParam);
            CurveTerm r;
            r.a = {p.a[0] * q.a[0]};
            r.box.emplace_back(Mobius::identity());
            r.box.emplace_back(std::move(m));
            for (const auto& v : p.box) r.box.emplace_back(v);
            for (const auto& v : q.box) r.box.emplace_back(v);
            out.add(std::move(r), dx.coeff * dy.coeff);
        }
    }
    return out;
}

FormalCycle cyclic_shuffle(const FormalCycle& x, const FormalCycle& y) {
    FormalCycle base = extra_degenerate_concat(x, y);
    const int n1 = x.space().n, n2 = y.space().n;
    const int objects = n1 + n2 + 1;  // glued pair of leading slots counts once
    FormalCycle out(base.space());
    for (const auto& nu : enumerate_shuffles({{1, n1, n2}})) {
        Permutation inv = nu.inverse();
        std::vector<int> source;  // result slot t (1-based) carries source slot source[t-1]
        source.reserve(static_cast<size_t>(objects) + 1);
        for (int j = 1; j <= objects; ++j) {
            int src = inv(j);
            if (src == 1) {
                source.push_back(1);
                source.push_back(2);
            } else {
                source.push_back(src + 1);
            }
        }
        std::vector<int> img(source.size());
        for (size_t t = 0; t < source.size(); ++t)
            img[static_cast<size_t>(source[t] - 1)] = static_cast<int>(t) + 1;
        // sign of the expanded slot permutation: sliding the glued two-slot block
        // across a single slot is an even move, so this differs from nu.sign()
        Permutation pi = Permutation::from_images(std::move(img));
        out = out + act_on_slots(pi, base).scaled(pi.sign());
    }
    return out;
}

DerivationReport connes_derivation_check(const FormalCycle& x, const FormalCycle& y) {
    if (!x.all_points() || !y.all_points())
        throw DomainError("derivation check is defined on point cycles");
    const int n1 = x.space().n;
    FormalCycle w = wedge(x, y);
    FormalCycle lhs = delta(w) - wedge(delta(x), y) -
                      wedge(x, delta(y)).scaled(n1 % 2 == 0 ? 1 : -1);
    FormalCycle rhs = boundary(cyclic_shuffle(x, y), BoundaryMode::Full).scaled(-1);
    DerivationReport rep{lhs, rhs, 0, false};
    if (lhs.is_zero() && rhs.is_zero()) {
        rep.holds = true;
    } else if (lhs == rhs) {
        rep.observed_sign = 1;
        rep.holds = true;
    } else if (lhs == rhs.scaled(-1)) {
        rep.observed_sign = -1;
        rep.holds = true;
    }
    return rep;
}

} // namespace addchow
