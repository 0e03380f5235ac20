#include "addchow/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "addchow/complex_io.hpp"
#include "addchow/cycles.hpp"
#include "addchow/error.hpp"
#include "addchow/fixtures.hpp"
#include "addchow/forms.hpp"
#include "addchow/mixed_complex.hpp"
#include "addchow/perm.hpp"
#include "addchow/rank_oracle.hpp"
#include "addchow/span_builder.hpp"
#include "addchow/totaro.hpp"

namespace addchow {

namespace {

// ---------------------------------------------------------------- utilities

struct CheckContext {
    const VerifyOptions& opt;
    std::ostringstream detail;
};

using CheckFn = std::function<bool(CheckContext&)>;

struct CheckSpec {
    std::string id;
    std::string suite;
    CheckFn fn;
};

RatFunc V(const std::string& name) { return RatFunc::var(name); }
ProjValue PV(const std::string& name) { return ProjValue(RatFunc::var(name)); }

ModulusRing mono2() { return ModulusRing::monomial(2); }

Int binom(int n, int k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Int factorial(int n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// the symbolic point (<affine>; <stem>1, ..., <stem>n)
FormalCycle sym_point(int n, const std::string& affine = "x",
                      const std::string& stem = "t") {
    std::vector<ProjValue> box;
    for (int i = 1; i <= n; ++i) box.push_back(PV(stem + std::to_string(i)));
    return point_cycle(mono2(), {V(affine)}, std::move(box));
}

// the parametrized line (a; s)
FormalCycle line_curve() {
    FormalCycle z(SlotSpace{mono2(), 1});
    z.add(CurveTerm{{V("a")}, {CurveSlot(Mobius::identity())}}, 1);
    return z;
}

// (a; s, (m1 s + m2)/(s + m3), c1, ..., c_extra): two moving slots, generic
// symbolic coefficients, optional constant tail
FormalCycle mobius_curve(int extra) {
    std::vector<CurveSlot> box{CurveSlot(Mobius::identity()),
                               CurveSlot(Mobius(V("m1"), V("m2"), RatFunc(1), V("m3")))};
    for (int i = 1; i <= extra; ++i) box.emplace_back(PV("c" + std::to_string(i)));
    FormalCycle z(SlotSpace{mono2(), 2 + extra});
    z.add(CurveTerm{{V("a")}, std::move(box)}, 1);
    return z;
}

// named parametrized corpus curves with at most max_n box slots
std::vector<std::pair<std::string, FormalCycle>> curve_corpus(int max_n) {
    std::vector<std::pair<std::string, FormalCycle>> out;
    auto keep = [&](const std::string& name, FormalCycle z) {
        if (z.space().n <= max_n) out.emplace_back(name, std::move(z));
    };
    keep("totaro", totaro_c2(V("a"), V("b1"), V("b2")));
    keep("totaro-extra1", totaro_c2(V("a"), V("b1"), V("b2"), {PV("c1")}));
    keep("totaro-extra2", totaro_c2(V("a"), V("b1"), V("b2"), {PV("c1"), PV("c2")}));
    keep("totaro-permuted",
         act_on_slots(Permutation::from_images({2, 3, 1}),
                      totaro_c2(V("a"), V("b1"), V("b2"), {PV("c1")})));
    keep("line", line_curve());
    keep("mobius-pair", mobius_curve(0));
    keep("mobius-pair-extra1", mobius_curve(1));
    keep("mobius-pair-extra2", mobius_curve(2));
    return out;
}

// point cycles and integer combinations of them: every face vanishes
std::vector<std::pair<std::string, FormalCycle>> reduced_corpus(int max_n) {
    std::vector<std::pair<std::string, FormalCycle>> out;
    for (int n = 0; n <= max_n; ++n)
        out.emplace_back("point-n" + std::to_string(n), sym_point(n));
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        FormalCycle z = sym_point(n) + sym_point(n, "y", "u").scaled(2);
        out.emplace_back("combo-n" + std::to_string(n), std::move(z));
    }
    return out;
}

// swap the two affine coordinates (and the matching ring factors); the
// canonical isomorphism under which the shuffle product is graded-commutative
FormalCycle swap_affine(const FormalCycle& z) {
    if (z.space().ring.e != 2)
        throw DomainError("swap_affine needs two affine coordinates");
    ModulusRing ring;
    ring.e = 2;
    ring.m = {z.space().ring.m[1], z.space().ring.m[0]};
    FormalCycle out(SlotSpace{ring, z.space().n});
    for (const auto& [t, d] : z.terms()) {
        CycleTerm u = t;
        if (term_is_point(u)) {
            auto& p = std::get<PointTerm>(u);
            std::swap(p.a[0], p.a[1]);
        } else {
            auto& c = std::get<CurveTerm>(u);
            std::swap(c.a[0], c.a[1]);
        }
        out.add(std::move(u), d.coeff, d.decomposable);
    }
    return out;
}

std::vector<std::vector<Rat>> random_rows(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    std::vector<std::vector<Rat>> data(rows, std::vector<Rat>(cols));
    for (auto& row : data)
        for (auto& x : row) {
            x = Rat(num(rng), den(rng));
            x.canonicalize();
        }
    return data;
}

// ------------------------------------------------------------ shuffle suite

bool check_shuffle_sum(int which, CheckContext& cx) {
    int pairs = 0;
    for (int r = 0; r <= cx.opt.max_rs; ++r)
        for (int s = 0; r + s <= cx.opt.max_rs; ++s) {
            ShuffleLemmaReport rep = shuffle_lemma_check(which, r, s);
            if (!rep.equal) {
                cx.detail << "group-ring identity " << which << " fails at (r,s)=(" << r
                          << "," << s << "): lhs " << rep.lhs.str() << " vs rhs "
                          << rep.rhs.str();
                return false;
            }
            ++pairs;
        }
    cx.detail << "identity " << which << " holds in the group ring for all " << pairs
              << " block shapes with r+s <= " << cx.opt.max_rs;
    return true;
}

bool check_shuffle_bijection(PhiKind kind, CheckContext& cx) {
    for (int r = 0; r <= cx.opt.max_rs; ++r)
        for (int s = 0; r + s <= cx.opt.max_rs; ++s) {
            std::vector<Permutation> sigmas, taus;
            switch (kind) {
            case PhiKind::InsertThenShuffle:
                sigmas = enumerate_shuffles({{r, s}});
                taus = enumerate_shuffles({{1, r + s}});
                break;
            case PhiKind::ShuffleFirstBlock:
                sigmas = enumerate_shuffles({{r + 1, s}});
                taus = enumerate_shuffles({{1, r}});
                break;
            case PhiKind::ShuffleLastBlock:
                sigmas = enumerate_shuffles({{r, s + 1}});
                taus = enumerate_shuffles({{1, s}});
                break;
            }
            std::set<Permutation> image;
            for (const auto& sigma : sigmas)
                for (const auto& tau : taus) {
                    Permutation p = phi_map(kind, sigma, tau, r, s);
                    if (!is_shuffle(p, {{1, r, s}})) {
                        cx.detail << "(r,s)=(" << r << "," << s << "): image "
                                  << p.str() << " is not a (1,r,s)-shuffle";
                        return false;
                    }
                    if (!image.insert(p).second) {
                        cx.detail << "(r,s)=(" << r << "," << s << "): image "
                                  << p.str() << " hit twice (not injective)";
                        return false;
                    }
                }
            Int expected = factorial(r + s + 1) / (factorial(r) * factorial(s));
            size_t target = enumerate_shuffles({{1, r, s}}).size();
            if (Int(static_cast<long>(image.size())) != expected ||
                image.size() != target) {
                cx.detail << "(r,s)=(" << r << "," << s << "): image size "
                          << image.size() << ", expected " << expected.get_str();
                return false;
            }
        }
    cx.detail << "bijective onto the (1,r,s)-shuffles with cardinality "
              << "(r+s+1)!/(r!s!) for all r+s <= " << cx.opt.max_rs;
    return true;
}

bool check_shuffle_cardinality(CheckContext& cx) {
    for (int r = 0; r <= cx.opt.max_rs; ++r)
        for (int s = 0; r + s <= cx.opt.max_rs; ++s) {
            Int expected = factorial(r + s + 1) / (factorial(r) * factorial(s));
            size_t got = enumerate_shuffles({{1, r, s}}).size();
            if (Int(static_cast<long>(got)) != expected) {
                cx.detail << "(r,s)=(" << r << "," << s << "): " << got
                          << " shuffles, expected " << expected.get_str();
                return false;
            }
        }
    cx.detail << "|(1,r,s)-shuffles| = (r+s+1)!/(r!s!) for all r+s <= " << cx.opt.max_rs;
    return true;
}

// -------------------------------------------------------------- delta suite

bool check_delta_square(CheckContext& cx) {
    int cap = cx.opt.max_n + 1;
    for (int n = 0; n <= cap; ++n) {
        FormalCycle z = sym_point(n);
        if (!delta(delta(z)).is_zero()) {
            cx.detail << "delta^2 != 0 on " << z.str();
            return false;
        }
    }
    FormalCycle combo = sym_point(2) - sym_point(2, "y", "u").scaled(3);
    if (!delta(delta(combo)).is_zero()) {
        cx.detail << "delta^2 != 0 on the combination " << combo.str();
        return false;
    }
    cx.detail << "delta^2 = 0 on symbolic points for n <= " << cap
              << " and on combinations";
    return true;
}

bool delta_branch_grid(const std::string& name, const FormalCycle& z, CheckContext& cx) {
    int n = z.space().n;
    for (int j = 1; j <= n + 1; ++j)
        for (int i = 1; i <= n + 2; ++i) {
            FormalCycle lhs = delta_insert(delta_insert(z, j), i);
            FormalCycle rhs = i <= j ? delta_insert(delta_insert(z, i), j + 1)
                                     : delta_insert(delta_insert(z, i - 1), j);
            if (!(lhs == rhs)) {
                cx.detail << name << ": insertion branch identity fails at n=" << n
                          << ", i=" << i << ", j=" << j;
                return false;
            }
        }
    return true;
}

bool check_delta_branches(bool on_curves, CheckContext& cx) {
    std::vector<std::pair<std::string, FormalCycle>> corpus;
    if (on_curves) {
        corpus = curve_corpus(cx.opt.max_n);
    } else {
        for (int n = 0; n <= cx.opt.max_n + 1; ++n)
            corpus.emplace_back("point-n" + std::to_string(n), sym_point(n));
    }
    for (const auto& [name, z] : corpus)
        if (!delta_branch_grid(name, z, cx)) return false;
    cx.detail << "delta_i delta_j = delta_{j+1} delta_i (i <= j) and "
              << "delta_j delta_{i-1} (i > j) over " << corpus.size() << " "
              << (on_curves ? "curves" : "point shapes");
    return true;
}

bool face_branch_grid(const std::string& name, const FormalCycle& z, CheckContext& cx) {
    int n = z.space().n;
    for (int k = 1; k <= n + 1; ++k) {
        FormalCycle dz = delta_insert(z, k);
        for (int i = 1; i <= n + 1; ++i)
            for (FaceEnd end : {FaceEnd::Zero, FaceEnd::Infinity}) {
                FormalCycle lhs = face(dz, i, end);
                FormalCycle rhs = lhs;
                if (i < k)
                    rhs = delta_insert(face(z, i, end), k - 1);
                else if (i == k)
                    rhs = zero_cycle(lhs.space());
                else
                    rhs = delta_insert(face(z, i - 1, end), k);
                if (!(lhs == rhs)) {
                    cx.detail << name << ": face/insertion branch fails at n=" << n
                              << ", i=" << i << ", k=" << k << ", end="
                              << (end == FaceEnd::Zero ? "0" : "inf");
                    return false;
                }
            }
    }
    return true;
}

bool check_face_branches(bool on_curves, CheckContext& cx) {
    std::vector<std::pair<std::string, FormalCycle>> corpus;
    if (on_curves) {
        corpus = curve_corpus(cx.opt.max_n);
    } else {
        for (int n = 0; n <= cx.opt.max_n; ++n)
            corpus.emplace_back("point-n" + std::to_string(n), sym_point(n));
    }
    for (const auto& [name, z] : corpus)
        if (!face_branch_grid(name, z, cx)) return false;
    cx.detail << "face_i delta_k = delta_{k-1} face_i (i<k), 0 (i=k), "
              << "delta_k face_{i-1} (i>k) over " << corpus.size() << " "
              << (on_curves ? "curves" : "point shapes");
    return true;
}

bool check_delta_preserves_reduced(CheckContext& cx) {
    for (const auto& [name, z] : reduced_corpus(cx.opt.max_n)) {
        if (!is_reduced(z)) {
            cx.detail << name << " is unexpectedly not reduced";
            return false;
        }
        for (int k = 1; k <= z.space().n + 1; ++k)
            if (!is_reduced(delta_insert(z, k))) {
                cx.detail << name << ": insertion at slot " << k
                          << " leaves the reduced subcomplex";
                return false;
            }
        if (!is_reduced(delta(z))) {
            cx.detail << name << ": the insertion sum leaves the reduced subcomplex";
            return false;
        }
    }
    cx.detail << "every insertion keeps point combinations inside the reduced "
              << "subcomplex";
    return true;
}

bool check_delta_reduced_boundary(CheckContext& cx) {
    auto corpus = reduced_corpus(cx.opt.max_n);
    for (auto& [name, z] : curve_corpus(cx.opt.max_n))
        corpus.emplace_back(name, std::move(z));
    for (const auto& [name, z] : corpus) {
        FormalCycle lhs = boundary(delta(z), BoundaryMode::LastZero);
        // a 0-slot cycle has zero boundary by convention, so the right side
        // degenerates to the zero cycle and only the left side needs checking
        bool ok = z.space().n == 0 ? lhs.is_zero()
                                   : lhs == delta(boundary(z, BoundaryMode::LastZero));
        if (!ok) {
            cx.detail << name << ": reduced boundary does not commute with the "
                      << "insertion sum";
            return false;
        }
    }
    cx.detail << "reduced boundary commutes with the insertion sum on " << corpus.size()
              << " corpus elements (points, combinations, curves)";
    return true;
}

bool check_delta_shuffle_expansion(CheckContext& cx) {
    for (int n = 0; n <= cx.opt.max_n; ++n) {
        FormalCycle z = sym_point(n);
        std::vector<ProjValue> box{ProjValue(V("x").inverse())};
        for (int i = 1; i <= n; ++i) box.push_back(PV("t" + std::to_string(i)));
        FormalCycle w = point_cycle(mono2(), {V("x")}, std::move(box));
        FormalCycle acc = zero_cycle(w.space());
        for (const auto& tau : enumerate_shuffles({{1, n}}))
            acc = acc + act_on_slots(tau, w).scaled(tau.sign());
        if (!(delta(z) == -acc)) {
            cx.detail << "insertion sum != negated signed (1,n)-shuffle sum at n=" << n;
            return false;
        }
    }
    cx.detail << "insertion sum equals the negated signed (1,n)-shuffle sum of "
              << "(x; 1/x, t...) for n <= " << cx.opt.max_n;
    return true;
}

// ------------------------------------------------------------ leibniz suite

bool check_totaro_boundary(CheckContext& cx) {
    FormalCycle c2 = totaro_c2(V("a"), V("b1"), V("b2"));
    FormalCycle expected(SlotSpace{mono2(), 1});
    RatFunc inv_a = V("a").inverse();
    expected.add(PointTerm{{inv_a}, {PV("b1")}}, 1);
    expected.add(PointTerm{{inv_a}, {PV("b2")}}, 1);
    expected.add(PointTerm{{inv_a}, {ProjValue(V("b1") * V("b2"))}}, -1);
    if (!(boundary(c2) == expected)) {
        cx.detail << "full boundary is " << boundary(c2).str() << ", expected "
                  << expected.str();
        return false;
    }
    if (!totaro_c2(RatFunc(0), V("b1"), V("b2")).is_zero()) {
        cx.detail << "vanishing affine parameter should give the zero cycle";
        return false;
    }
    bool threw = false;
    try {
        totaro_c2(V("a"), RatFunc(0), V("b2"));
    } catch (const DomainError&) {
        threw = true;
    }
    if (!threw) {
        cx.detail << "zero multiplicative parameter must be rejected";
        return false;
    }
    cx.detail << "boundary = (1/a; b1) + (1/a; b2) - (1/a; b1 b2) symbolically; "
              << "degenerate parameters handled";
    return true;
}

bool check_boundary_square(CheckContext& cx) {
    auto corpus = reduced_corpus(cx.opt.max_n);
    for (auto& [name, z] : curve_corpus(cx.opt.max_n))
        corpus.emplace_back(name, std::move(z));
    for (const auto& [name, z] : corpus) {
        if (!boundary(boundary(z)).is_zero()) {
            cx.detail << name << ": full boundary squared is nonzero";
            return false;
        }
        FormalCycle r = boundary(z, BoundaryMode::LastZero);
        if (!boundary(r, BoundaryMode::LastZero).is_zero()) {
            cx.detail << name << ": reduced boundary squared is nonzero";
            return false;
        }
    }
    cx.detail << "full and reduced boundaries square to zero on " << corpus.size()
              << " corpus elements";
    return true;
}

std::vector<std::tuple<std::string, FormalCycle, FormalCycle>>
product_pairs(int max_n) {
    std::vector<std::tuple<std::string, FormalCycle, FormalCycle>> pairs;
    std::vector<std::pair<std::string, FormalCycle>> small_curves;
    for (auto& [name, z] : curve_corpus(std::min(max_n, 3)))
        small_curves.emplace_back(name, std::move(z));
    for (int n = 0; n <= 2; ++n) {
        FormalCycle p = sym_point(n);
        FormalCycle q = sym_point(n, "y", "u");
        for (const auto& [name, c] : small_curves) {
            pairs.emplace_back("point-n" + std::to_string(n) + " x " + name, p, c);
            pairs.emplace_back(name + " x point-n" + std::to_string(n), c, q);
        }
    }
    pairs.emplace_back("point-n1 x point-n1", sym_point(1), sym_point(1, "y", "u"));
    pairs.emplace_back("point-n2 x point-n1", sym_point(2), sym_point(1, "y", "u"));
    return pairs;
}

bool leibniz_for(const std::string& which, CheckContext& cx) {
    auto prod = [&](const FormalCycle& x, const FormalCycle& y) {
        return which == "concatenation" ? concat(x, y) : shuffle_product(x, y);
    };
    auto pairs = product_pairs(cx.opt.max_n);
    for (const auto& [name, x, y] : pairs) {
        int sign = x.space().n % 2 == 0 ? 1 : -1;
        FormalCycle lhs = boundary(prod(x, y));
        // the boundary of a 0-slot factor is the zero cycle (kept at degree 0),
        // so its summand drops instead of being formed in a mismatched degree
        FormalCycle rhs = zero_cycle(lhs.space());
        if (x.space().n > 0) rhs = rhs + prod(boundary(x), y);
        if (y.space().n > 0) rhs = rhs + prod(x, boundary(y)).scaled(sign);
        if (!(lhs == rhs)) {
            cx.detail << which << " Leibniz rule fails on " << name
                      << "; lhs - rhs = " << (lhs + rhs.scaled(-1)).str();
            return false;
        }
    }
    cx.detail << "boundary(x*y) = boundary(x)*y + (-1)^{n1} x*boundary(y) for the "
              << which << " on " << pairs.size() << " corpus pairs";
    return true;
}

// sigma with source slot j and target position sigma(j) removed, indices closed up
Permutation restrict_perm(const Permutation& sigma, int j) {
    std::vector<int> images;
    images.reserve(sigma.degree() - 1);
    for (int k = 1; k <= sigma.degree(); ++k) {
        if (k == j) continue;
        int i = sigma(k);
        images.push_back(i > sigma(j) ? i - 1 : i);
    }
    return Permutation::from_images(std::move(images));
}

// Faces look at positions, slot actions move slots: the face of a permuted cycle
// at position i is the permuted face of the base cycle at slot sigma^{-1}(i), and
// removing a slot changes the parity of sigma by (-1)^{sigma(j) - j}.  Regrouping
// the boundary of every shuffled term by base slot index must therefore reproduce
// the boundary computed directly on the shuffled product.
bool check_shuffle_boundary_slot_action(CheckContext& cx) {
    auto pairs = product_pairs(cx.opt.max_n);
    for (const auto& [name, x, y] : pairs) {
        FormalCycle lhs = boundary(shuffle_product(x, y));
        FormalCycle base = concat(x, y);
        int n = base.space().n;
        if (n == 0) {
            if (!lhs.is_zero()) {
                cx.detail << name << ": slotless product has nonzero boundary";
                return false;
            }
            continue;
        }
        FormalCycle sum = zero_cycle(lhs.space());
        auto shuffles = enumerate_shuffles({{x.space().n, y.space().n}});
        for (int j = 1; j <= n; ++j) {
            FormalCycle f = face(base, j, FaceEnd::Zero) +
                            face(base, j, FaceEnd::Infinity).scaled(-1);
            if (f.is_zero()) continue;
            for (const auto& sigma : shuffles) {
                int c = sigma.sign() * (sigma(j) % 2 == 0 ? 1 : -1);
                sum = sum + act_on_slots(restrict_perm(sigma, j), f).scaled(c);
            }
        }
        if (!(lhs == sum)) {
            cx.detail << name << ": boundary of the shuffled product differs from "
                      << "the slot-transported face sum";
            return false;
        }
    }
    cx.detail << "boundary of the shuffled product equals the face sum transported "
              << "along each shuffle on " << pairs.size() << " corpus pairs";
    return true;
}

// The shuffle product is not a chain map for factors with several parametrized or
// constant box slots on each side: removing a faced slot forgets where it sat, so
// every placement of that slot across the other factor restricts to the same
// arrangement, and sliding a slot past another flips the shuffle sign and the face
// position sign together.  Placements therefore pile up with equal signs instead
// of telescoping, and the Leibniz defect is exactly the repeated-placement sum
// predicted here from faces of the plain concatenation.
bool check_shuffle_leibniz_defect(CheckContext& cx) {
    auto pairs = product_pairs(cx.opt.max_n);
    int nonzero = 0;
    for (const auto& [name, x, y] : pairs) {
        int r1 = x.space().n, r2 = y.space().n, n = r1 + r2;
        int sign = r1 % 2 == 0 ? 1 : -1;
        FormalCycle lhs = boundary(shuffle_product(x, y));
        FormalCycle rhs = zero_cycle(lhs.space());
        if (r1 > 0) rhs = rhs + shuffle_product(boundary(x), y);
        if (r2 > 0) rhs = rhs + shuffle_product(x, boundary(y)).scaled(sign);
        FormalCycle diff = lhs + rhs.scaled(-1);
        if (n == 0) {
            if (!diff.is_zero()) {
                cx.detail << name << ": slotless product has a Leibniz defect";
                return false;
            }
            continue;
        }
        FormalCycle base = concat(x, y);
        FormalCycle predicted = zero_cycle(lhs.space());
        auto shuffles = enumerate_shuffles({{r1, r2}});
        for (int j = 1; j <= n; ++j) {
            FormalCycle f = face(base, j, FaceEnd::Zero) +
                            face(base, j, FaceEnd::Infinity).scaled(-1);
            if (f.is_zero()) continue;
            int jsign = j % 2 == 0 ? 1 : -1;
            std::map<Permutation, long long> placements;
            for (const auto& sigma : shuffles) ++placements[restrict_perm(sigma, j)];
            for (const auto& [tau, m] : placements) {
                if (m == 1) continue;
                long c = static_cast<long>(m - 1) * jsign * tau.sign();
                predicted = predicted + act_on_slots(tau, f).scaled(Int(c));
            }
        }
        if (!(diff == predicted)) {
            cx.detail << name << ": Leibniz defect " << diff.str()
                      << " does not match the repeated-placement sum "
                      << predicted.str();
            return false;
        }
        if (!diff.is_zero()) ++nonzero;
    }
    cx.detail << "Leibniz defect of the shuffle product equals the "
              << "repeated-placement face sum on " << pairs.size()
              << " corpus pairs (nonzero on " << nonzero << ")";
    return true;
}

bool check_shuffle_graded_commutative(CheckContext& cx) {
    auto pairs = product_pairs(cx.opt.max_n);
    for (const auto& [name, x, y] : pairs) {
        int sign = (x.space().n * y.space().n) % 2 == 0 ? 1 : -1;
        FormalCycle lhs = shuffle_product(x, y);
        FormalCycle rhs = swap_affine(shuffle_product(y, x)).scaled(sign);
        if (!(lhs == rhs)) {
            cx.detail << "graded commutativity of the shuffle product fails on "
                      << name;
            return false;
        }
    }
    cx.detail << "x sh y = (-1)^{n1 n2} swap(y sh x) as exact formal sums on "
              << pairs.size() << " corpus pairs";
    return true;
}

bool check_wedge_graded_commutative(CheckContext& cx) {
    auto pairs = product_pairs(cx.opt.max_n);
    for (const auto& [name, x, y] : pairs) {
        int sign = (x.space().n * y.space().n) % 2 == 0 ? 1 : -1;
        FormalCycle lhs = wedge(x, y);
        FormalCycle rhs = wedge(y, x).scaled(sign);
        if (!(lhs == rhs)) {
            cx.detail << "graded commutativity of the wedge fails on " << name;
            return false;
        }
    }
    cx.detail << "x ^ y = (-1)^{n1 n2} y ^ x as exact formal sums on " << pairs.size()
              << " corpus pairs";
    return true;
}

// ---------------------------------------------------------- derivation suite

bool check_derivation_homotopy(CheckContext& cx) {
    std::vector<std::pair<int, int>> shapes{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}};
    std::pair<int, int> extra{cx.opt.r1, cx.opt.r2};
    if (std::find(shapes.begin(), shapes.end(), extra) == shapes.end())
        shapes.push_back(extra);
    int sign = 0;
    for (auto [r1, r2] : shapes) {
        FormalCycle xi = sym_point(r1);
        FormalCycle eta = sym_point(r2, "y", "u");
        DerivationReport rep = connes_derivation_check(xi, eta);
        if (!rep.holds) {
            cx.detail << "(r1,r2)=(" << r1 << "," << r2
                      << "): defect does not match the boundary of the cyclic "
                      << "shuffle product up to sign";
            return false;
        }
        if (rep.observed_sign != 0) {
            if (sign == 0) sign = rep.observed_sign;
            if (rep.observed_sign != sign) {
                cx.detail << "(r1,r2)=(" << r1 << "," << r2 << "): sign "
                          << rep.observed_sign << " breaks the run constant " << sign;
                return false;
            }
        }
    }
    cx.detail << "defect of the insertion sum against the wedge equals " << sign
              << " times the negated boundary of the cyclic shuffle product on "
              << shapes.size() << " shapes (run-constant sign " << sign << ")";
    return true;
}

// -------------------------------------------------------------- forms suite

bool check_exterior_d_square(CheckContext& cx) {
    std::vector<RatFunc> fs{V("x"), V("x") * V("y") + RatFunc(1),
                            (V("x") + V("y")) / (V("x") - V("y")),
                            V("x").inverse() * V("z")};
    for (const auto& f : fs)
        if (!exterior_d(DiffForm::d(f)).is_zero()) {
            cx.detail << "d(d(" << f.str() << ")) != 0";
            return false;
        }
    std::vector<std::string> forms{"(x*y) * d(x) + (1/y) * d(y)",
                                   "(1/(x*y)) * d(x) ^ d(y) + z * d(x) ^ d(z)",
                                   "dlog(x) ^ dlog(y) + d(z) ^ d(x)"};
    for (const auto& text : forms) {
        DiffForm w = parse_form(text);
        if (!exterior_d(exterior_d(w)).is_zero()) {
            cx.detail << "d(d(w)) != 0 for w = " << text;
            return false;
        }
    }
    cx.detail << "the exterior derivative squares to zero on scalar and parsed "
              << "sample forms";
    return true;
}

bool check_dlog_multiplicative(CheckContext& cx) {
    std::vector<std::pair<RatFunc, RatFunc>> samples{
        {V("x"), V("y")},
        {V("x") * V("y") + RatFunc(1), V("x")},
        {(V("x") - V("y")) / V("z"), V("z") * V("z")},
    };
    for (const auto& [f, g] : samples) {
        if (!(DiffForm::dlog(f * g) == DiffForm::dlog(f) + DiffForm::dlog(g))) {
            cx.detail << "dlog(fg) != dlog f + dlog g for f=" << f.str()
                      << ", g=" << g.str();
            return false;
        }
        if (!(DiffForm::dlog(f / g) == DiffForm::dlog(f) - DiffForm::dlog(g))) {
            cx.detail << "dlog(f/g) != dlog f - dlog g for f=" << f.str()
                      << ", g=" << g.str();
            return false;
        }
    }
    cx.detail << "dlog turns products into sums and quotients into differences";
    return true;
}

bool check_reg_kills_boundaries(CheckContext& cx) {
    auto corpus = curve_corpus(cx.opt.max_n);
    for (const auto& [name, z] : corpus) {
        if (!reg(boundary(z)).is_zero()) {
            cx.detail << name << ": the regulator of the full boundary is "
                      << reg(boundary(z)).str();
            return false;
        }
    }
    cx.detail << "the regulator kills the full boundary of all " << corpus.size()
              << " corpus curves";
    return true;
}

bool check_reg_delta_factor(CheckContext& cx) {
    int sign = 0;
    for (int n = 0; n <= cx.opt.max_n; ++n) {
        RegDeltaReport rep = reg_delta_factor_check(sym_point(n));
        if (!rep.ok || rep.factor != n + 1) {
            cx.detail << "n=" << n << ": regulator of the insertion sum is not an "
                      << "integer multiple of d(regulator)";
            return false;
        }
        if (rep.sign != 0) {
            if (sign == 0) sign = rep.sign;
            if (rep.sign != sign) {
                cx.detail << "n=" << n << ": sign " << rep.sign
                          << " breaks the run constant " << sign;
                return false;
            }
        }
    }
    cx.detail << "reg(insertion sum) = (" << sign
              << ") * (n+1) * d(reg) for n <= " << cx.opt.max_n
              << " (run-constant sign " << sign << ")";
    return true;
}

bool check_reg_relation_generators(CheckContext& cx) {
    for (int extra = 0; extra <= 2; ++extra) {
        std::vector<ProjValue> tail;
        for (int i = 1; i <= extra; ++i) tail.push_back(PV("b" + std::to_string(i)));
        RatFunc a = V("a");
        RatFunc one_minus = RatFunc(1) - a;
        FormalCycle z(SlotSpace{mono2(), 1 + extra});
        std::vector<ProjValue> box1{ProjValue(a)};
        std::vector<ProjValue> box2{ProjValue(one_minus)};
        for (const auto& v : tail) {
            box1.push_back(v);
            box2.push_back(v);
        }
        z.add(PointTerm{{a.inverse()}, std::move(box1)}, 1);
        z.add(PointTerm{{one_minus.inverse()}, std::move(box2)}, 1);
        if (!reg(z).is_zero()) {
            cx.detail << "relation generator with " << extra
                      << " extra slot(s) maps to " << reg(z).str();
            return false;
        }
    }
    cx.detail << "(1/a; a, T) + (1/(1-a); 1-a, T) maps to zero for 0..2 extra slots";
    return true;
}

bool check_reg_wedge_binomial(CheckContext& cx) {
    for (int n1 = 0; n1 <= cx.opt.max_n; ++n1)
        for (int n2 = 0; n1 + n2 <= cx.opt.max_n; ++n2) {
            FormalCycle xi = sym_point(n1);
            FormalCycle eta = sym_point(n2, "y", "u");
            DiffForm lhs = reg(wedge(xi, eta));
            DiffForm rhs = wedge(reg(xi), reg(eta)).scaled(binom(n1 + n2, n1));
            if (!(lhs == rhs)) {
                cx.detail << "(n1,n2)=(" << n1 << "," << n2
                          << "): reg(wedge) != C(n1+n2,n1) reg^reg";
                return false;
            }
        }
    cx.detail << "reg(x ^ y) = C(n1+n2, n1) * reg(x) ^ reg(y) for n1+n2 <= "
              << cx.opt.max_n;
    return true;
}

bool check_form_round_trip(CheckContext& cx) {
    std::vector<DiffForm> samples{
        DiffForm::scalar(RatFunc(0)),
        DiffForm::scalar((V("x") + RatFunc(1)) / V("y")),
        DiffForm::dlog(V("x") * V("y")),
        DiffForm::d((V("x") - V("y")) / V("z")),
        wedge(DiffForm::dlog(V("x")), DiffForm::dlog(V("y"))).scaled(Int(-3)),
        wedge(DiffForm::d(V("x")), wedge(DiffForm::d(V("y")), DiffForm::d(V("z")))),
    };
    for (const auto& w : samples) {
        DiffForm back = parse_form(w.str());
        if (!(back == w)) {
            cx.detail << "parse(print(w)) != w for w = " << w.str();
            return false;
        }
    }
    DiffForm built = wedge(DiffForm::dlog(V("u")), DiffForm::dlog(V("v")))
                         .scaled(V("u").inverse());
    if (!(parse_form("(1/u) * dlog(u) ^ dlog(v)") == built)) {
        cx.detail << "hand-written chain does not parse to the built form";
        return false;
    }
    cx.detail << "parse(print(w)) = w on scalar, exact, and wedge-chain samples";
    return true;
}

// ------------------------------------------------------------ mixedcx suite

bool check_mixed_fixtures_valid(CheckContext& cx) {
    for (int i = 0; i < cx.opt.fixtures; ++i) {
        MixedComplex m = random_mixed_complex(cx.opt.seed + i);
        ValidationReport rep = validate(m);
        if (!rep.ok) {
            cx.detail << "fixture " << i << " violates the axioms: " << rep.detail;
            return false;
        }
    }
    cx.detail << "b^2 = B^2 = bB + Bb = 0 on " << cx.opt.fixtures
              << " random fixtures";
    return true;
}

bool check_mixed_violation_detected(CheckContext& cx) {
    auto one = [] {
        return QMatrix::from_rows({{Rat(1)}});
    };
    MixedComplex bad;
    bad.space.dims = {{0, 1}, {1, 1}, {2, 1}};
    bad.b[1] = one();
    bad.b[2] = one();
    ValidationReport rep = validate(bad);
    if (rep.ok || rep.detail.find("degree 2") == std::string::npos) {
        cx.detail << "square of the differential not reported at degree 2: "
                  << rep.detail;
        return false;
    }
    MixedComplex badB;
    badB.space.dims = {{0, 1}, {1, 1}, {2, 1}};
    badB.B[0] = one();
    badB.B[1] = one();
    rep = validate(badB);
    if (rep.ok || rep.detail.find("degree 0") == std::string::npos) {
        cx.detail << "square of the degree +1 operator not reported at degree 0: "
                  << rep.detail;
        return false;
    }
    MixedComplex badAnti;
    badAnti.space.dims = {{0, 1}, {1, 1}};
    badAnti.b[1] = one();
    badAnti.B[0] = one();
    rep = validate(badAnti);
    if (rep.ok) {
        cx.detail << "anticommutator violation not detected";
        return false;
    }
    cx.detail << "constructed violations of each axiom are reported with the "
              << "failing degree";
    return true;
}

bool check_tot_square_zero(CheckContext& cx) {
    for (int i = 0; i < cx.opt.fixtures; ++i) {
        MixedComplex m = random_mixed_complex(cx.opt.seed + i);
        int lo = m.space.lo(), hi = m.space.hi();
        for (int n = lo; n <= hi + 2; ++n) {
            int expect = 0;
            for (int q = n; q >= lo; q -= 2) expect += m.space.dim(q);
            if (tot_dim(m, n) != expect) {
                cx.detail << "fixture " << i << ": total dimension at degree " << n
                          << " is " << tot_dim(m, n) << ", expected " << expect;
                return false;
            }
            if (!(tot_d(m, n) * tot_d(m, n + 1)).is_zero()) {
                cx.detail << "fixture " << i
                          << ": totalized differential does not square to zero "
                          << "at degree " << n + 1;
                return false;
            }
        }
    }
    cx.detail << "d^2 = 0 on the totalization and component dimensions add up on "
              << cx.opt.fixtures << " fixtures";
    return true;
}

bool check_homology_oracle(CheckContext& cx) {
    for (int i = 0; i < cx.opt.fixtures; ++i) {
        MixedComplex m = random_mixed_complex(cx.opt.seed + i);
        ChainComplex c = column_complex(m);
        int lo = m.space.lo(), hi = m.space.hi();
        for (int n = lo - 1; n <= hi + 1; ++n) {
            int got = homology(c, n).dim;
            int want = oracle_homology_dim(c.dim(n), c.d_at(n), c.d_at(n + 1));
            if (got != want) {
                cx.detail << "fixture " << i << ": column homology at degree " << n
                          << " is " << got << ", oracle says " << want;
                return false;
            }
        }
        if (i % 10 == 0) {
            ChainComplex t = totalize(m, lo - 1, hi + 2);
            for (int n = lo; n <= hi + 1; ++n) {
                int got = homology(t, n).dim;
                int want = oracle_homology_dim(t.dim(n), t.d_at(n), t.d_at(n + 1));
                if (got != want) {
                    cx.detail << "fixture " << i << ": totalized homology at degree "
                              << n << " is " << got << ", oracle says " << want;
                    return false;
                }
            }
        }
    }
    cx.detail << "echelon homology matches the fraction-free elimination oracle on "
              << cx.opt.fixtures << " fixtures (columns and sampled totalizations)";
    return true;
}

bool check_homology_identity_zero(CheckContext& cx) {
    MixedComplex m;
    m.space.dims = {{0, 3}, {1, 3}};
    m.b[1] = QMatrix::identity(3);
    ChainComplex c = column_complex(m);
    for (int n = 0; n <= 1; ++n)
        if (homology(c, n).dim != 0) {
            cx.detail << "identity differential: homology at degree " << n
                      << " is " << homology(c, n).dim << ", expected 0";
            return false;
        }
    MixedComplex z;
    z.space.dims = {{0, 2}, {1, 3}, {2, 1}};
    ChainComplex cz = column_complex(z);
    for (int n = 0; n <= 2; ++n)
        if (homology(cz, n).dim != z.space.dim(n)) {
            cx.detail << "zero differential: homology at degree " << n
                      << " is " << homology(cz, n).dim << ", expected "
                      << z.space.dim(n);
            return false;
        }
    cx.detail << "identity differential gives zero homology; zero differential "
              << "echoes the input dimensions";
    return true;
}

bool check_les_random_fixtures(CheckContext& cx) {
    for (int i = 0; i < cx.opt.fixtures; ++i) {
        MixedComplex m = random_mixed_complex(cx.opt.seed + i);
        LESReport rep = connes_sequence(m);
        if (!rep.valid_input) {
            cx.detail << "fixture " << i << " rejected: " << rep.validation_detail;
            return false;
        }
        if (!rep.all_exact) {
            for (const auto& node : rep.nodes)
                if (node.verified && !node.exact) {
                    cx.detail << "fixture " << i << ": sequence fails at " << node.name
                              << " (dim " << node.dim << ", ranks " << node.in_rank
                              << "+" << node.out_rank << ")";
                    return false;
                }
        }
    }
    cx.detail << "the periodicity sequence is exact at every verified node on "
              << cx.opt.fixtures << " random fixtures";
    return true;
}

bool les_exact_or_report(const std::string& name, const MixedComplex& m,
                         CheckContext& cx) {
    ValidationReport v = validate(m);
    if (!v.ok) {
        cx.detail << name << ": axioms fail: " << v.detail;
        return false;
    }
    LESReport rep = connes_sequence(m);
    if (!rep.valid_input || !rep.all_exact) {
        cx.detail << name << ": sequence not exact ("
                  << (rep.valid_input ? "exactness" : rep.validation_detail) << ")";
        return false;
    }
    return true;
}

bool check_les_span_fixtures(CheckContext& cx) {
    FormalCycle u0 = point_cycle(mono2(), {V("u")}, {});
    MixedComplex m1 = span_builder({u0}, SpanOptions{});
    if (m1.space.dim(0) != 1 || m1.space.dim(1) != 1 || m1.space.total_dim() != 2) {
        cx.detail << "span of (u): expected one generator at degrees 0 and 1, got "
                  << m1.space.total_dim() << " in total";
        return false;
    }
    if (!m1.B_at(1).is_zero()) {
        cx.detail << "span of (u): insertion image of the degree-1 generator "
                  << "should vanish";
        return false;
    }
    if (!les_exact_or_report("span of (u)", m1, cx)) return false;

    FormalCycle p1 = point_cycle(mono2(), {V("u")}, {PV("t1")});
    MixedComplex m2 = span_builder({p1}, SpanOptions{});
    if (m2.space.dim(0) != 0 || m2.space.dim(1) != 1 || m2.space.dim(2) != 2) {
        cx.detail << "span of (u; t1): unexpected degreewise dimensions "
                  << m2.space.dim(0) << "/" << m2.space.dim(1) << "/"
                  << m2.space.dim(2);
        return false;
    }
    if (!les_exact_or_report("span of (u; t1)", m2, cx)) return false;

    SpanOptions relaxed;
    relaxed.require_reduced = false;
    MixedComplex m3 =
        span_builder({u0, totaro_c2(RatFunc(1), V("b1"), V("b2"))}, relaxed);
    if (!les_exact_or_report("span of {(u), unit-parameter curve}", m3, cx))
        return false;

    cx.detail << "span-built complexes satisfy the axioms and their sequences are "
              << "exact (seeds: (u); (u; t1); {(u), unit-parameter curve})";
    return true;
}

bool check_span_guards(CheckContext& cx) {
    bool cap_throw = false;
    try {
        SpanOptions o;
        o.n_cap = 2;
        span_builder({sym_point(2)}, o);
    } catch (const SizeLimitError&) {
        cap_throw = true;
    }
    if (!cap_throw) {
        cx.detail << "a nonzero insertion image above the cap must be rejected";
        return false;
    }
    bool seed_throw = false;
    try {
        SpanOptions o;
        o.n_cap = 3;
        span_builder({sym_point(4)}, o);
    } catch (const SizeLimitError&) {
        seed_throw = true;
    }
    if (!seed_throw) {
        cx.detail << "a seed above the cap must be rejected";
        return false;
    }
    bool reduced_throw = false;
    try {
        span_builder({totaro_c2(V("a"), V("b1"), V("b2"))}, SpanOptions{});
    } catch (const DomainError&) {
        reduced_throw = true;
    }
    if (!reduced_throw) {
        cx.detail << "a non-reduced seed must be rejected when reduction is required";
        return false;
    }
    cx.detail << "cap overflow, oversized seeds, and non-reduced seeds are all "
              << "rejected";
    return true;
}

bool check_rref_paths_agree(CheckContext& cx) {
    std::mt19937_64 rng(cx.opt.seed);
    std::vector<std::pair<int, int>> sizes{{5, 7}, {12, 12}, {9, 4}, {20, 20}};
    for (auto [r, c] : sizes) {
        QMatrix a = QMatrix::from_rows(random_rows(rng, r, c));
        Echelon es = a.reduced_echelon_serial();
        Echelon ep = a.reduced_echelon_parallel();
        if (!(es.rref == ep.rref) || es.pivot_cols != ep.pivot_cols) {
            cx.detail << r << "x" << c << ": serial and parallel echelon forms differ";
            return false;
        }
        int rank = static_cast<int>(es.pivot_cols.size());
        if (rank != bareiss_rank(a)) {
            cx.detail << r << "x" << c << ": echelon rank " << rank
                      << " vs fraction-free rank " << bareiss_rank(a);
            return false;
        }
        auto kernel = a.kernel_basis();
        if (static_cast<int>(kernel.size()) != c - rank) {
            cx.detail << r << "x" << c << ": kernel basis has " << kernel.size()
                      << " vectors for nullity " << c - rank;
            return false;
        }
        for (const auto& v : kernel)
            for (const auto& entry : a.apply(v))
                if (entry != 0) {
                    cx.detail << r << "x" << c
                              << ": a kernel vector is not annihilated";
                    return false;
                }
    }
    // rank-deficient product and solve consistency
    QMatrix b1 = QMatrix::from_rows(random_rows(rng, 15, 6));
    QMatrix b2 = QMatrix::from_rows(random_rows(rng, 6, 18));
    QMatrix low = b1 * b2;
    if (low.rank() > 6 || low.rank() != bareiss_rank(low)) {
        cx.detail << "rank of a 15x18 product through rank-6 exceeds 6 or paths "
                  << "disagree";
        return false;
    }
    QMatrix a = random_invertible(cx.opt.seed + 17, 6);
    std::vector<Rat> x0;
    for (int i = 0; i < 6; ++i) x0.push_back(Rat(i - 3, i + 1));
    for (auto& v : x0) v.canonicalize();
    auto sol = a.solve(a.apply(x0));
    if (!sol || a.apply(*sol) != a.apply(x0)) {
        cx.detail << "solvable system not solved correctly";
        return false;
    }
    QMatrix tall = QMatrix::from_rows({{Rat(1)}, {Rat(0)}});
    if (tall.solve({Rat(0), Rat(1)})) {
        cx.detail << "inconsistent system did not report unsolvable";
        return false;
    }
    cx.detail << "serial/parallel elimination agree bit for bit; ranks match the "
              << "fraction-free oracle; kernels and solves are consistent";
    return true;
}

// ------------------------------------------------------------- registry

const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> specs = [] {
        std::vector<CheckSpec> r;
        auto add = [&r](std::string id, std::string suite, CheckFn fn) {
            r.push_back({std::move(id), std::move(suite), std::move(fn)});
        };
        add("shuffle-sum-insert-rotation", "shuffle",
            [](CheckContext& cx) { return check_shuffle_sum(1, cx); });
        add("shuffle-sum-first-block", "shuffle",
            [](CheckContext& cx) { return check_shuffle_sum(2, cx); });
        add("shuffle-sum-last-block", "shuffle",
            [](CheckContext& cx) { return check_shuffle_sum(3, cx); });
        add("shuffle-bijection-insert-rotation", "shuffle", [](CheckContext& cx) {
            return check_shuffle_bijection(PhiKind::InsertThenShuffle, cx);
        });
        add("shuffle-bijection-first-block", "shuffle", [](CheckContext& cx) {
            return check_shuffle_bijection(PhiKind::ShuffleFirstBlock, cx);
        });
        add("shuffle-bijection-last-block", "shuffle", [](CheckContext& cx) {
            return check_shuffle_bijection(PhiKind::ShuffleLastBlock, cx);
        });
        add("shuffle-cardinality-formula", "shuffle", check_shuffle_cardinality);

        add("delta-square-zero-points", "delta", check_delta_square);
        add("delta-insert-branch-points", "delta",
            [](CheckContext& cx) { return check_delta_branches(false, cx); });
        add("delta-insert-branch-curves", "delta",
            [](CheckContext& cx) { return check_delta_branches(true, cx); });
        add("face-insert-branch-points", "delta",
            [](CheckContext& cx) { return check_face_branches(false, cx); });
        add("face-insert-branch-curves", "delta",
            [](CheckContext& cx) { return check_face_branches(true, cx); });
        add("delta-preserves-reduced", "delta", check_delta_preserves_reduced);
        add("delta-reduced-boundary-commutes", "delta", check_delta_reduced_boundary);
        add("delta-shuffle-expansion", "delta", check_delta_shuffle_expansion);

        add("totaro-boundary-three-terms", "leibniz", check_totaro_boundary);
        add("boundary-square-zero", "leibniz", check_boundary_square);
        add("leibniz-concatenation", "leibniz",
            [](CheckContext& cx) { return leibniz_for("concatenation", cx); });
        add("leibniz-shuffle-product", "leibniz",
            [](CheckContext& cx) { return leibniz_for("shuffle product", cx); });
        add("shuffle-boundary-slot-action-law", "leibniz",
            check_shuffle_boundary_slot_action);
        add("shuffle-leibniz-defect-characterized", "leibniz",
            check_shuffle_leibniz_defect);
        add("shuffle-product-graded-commutative", "leibniz",
            check_shuffle_graded_commutative);
        add("wedge-graded-commutative", "leibniz", check_wedge_graded_commutative);

        add("cyclic-shuffle-derivation-homotopy", "derivation",
            check_derivation_homotopy);

        add("exterior-derivative-square-zero", "forms", check_exterior_d_square);
        add("dlog-multiplicativity", "forms", check_dlog_multiplicative);
        add("regulator-kills-curve-boundaries", "forms", check_reg_kills_boundaries);
        add("regulator-insertion-derivative-factor", "forms", check_reg_delta_factor);
        add("regulator-kills-relation-generators", "forms",
            check_reg_relation_generators);
        add("regulator-wedge-binomial-factor", "forms", check_reg_wedge_binomial);
        add("form-parse-print-round-trip", "forms", check_form_round_trip);

        add("mixed-axioms-random-fixtures", "mixedcx", check_mixed_fixtures_valid);
        add("mixed-axioms-violation-detected", "mixedcx",
            check_mixed_violation_detected);
        add("totalization-square-zero", "mixedcx", check_tot_square_zero);
        add("homology-matches-rank-oracle", "mixedcx", check_homology_oracle);
        add("homology-identity-and-zero", "mixedcx", check_homology_identity_zero);
        add("periodicity-sequence-random-fixtures", "mixedcx",
            check_les_random_fixtures);
        add("periodicity-sequence-span-fixtures", "mixedcx", check_les_span_fixtures);
        add("span-cap-and-reduced-guards", "mixedcx", check_span_guards);
        add("rref-parallel-matches-serial", "mixedcx", check_rref_paths_agree);
        return r;
    }();
    return specs;
}

std::vector<const CheckSpec*> select_suite(const std::string& suite) {
    std::vector<const CheckSpec*> picked;
    for (const auto& spec : registry())
        if (suite == "all" || spec.suite == suite) picked.push_back(&spec);
    if (picked.empty()) throw DomainError("unknown suite '" + suite + "'");
    return picked;
}

std::vector<CheckResult> run_selected(const std::vector<const CheckSpec*>& specs,
                                      const VerifyOptions& opt) {
    std::vector<CheckResult> out(specs.size());
    int workers = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < static_cast<int>(specs.size()); ++i) {
        double t0 = omp_get_wtime();
        CheckResult r;
        r.id = specs[i]->id;
        r.suite = specs[i]->suite;
        CheckContext cx{opt, {}};
        try {
            r.pass = specs[i]->fn(cx);
            r.detail = cx.detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("unexpected exception: ") + e.what();
        }
        r.seconds = omp_get_wtime() - t0;
        out[i] = std::move(r);
    }
    return out;
}

} // namespace

std::vector<std::string> verify_suites() {
    return {"shuffle", "delta", "leibniz", "derivation", "forms", "mixedcx"};
}

std::vector<std::string> check_ids(const std::string& suite) {
    std::vector<std::string> ids;
    for (const auto* spec : select_suite(suite)) ids.push_back(spec->id);
    return ids;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    return run_selected(select_suite(suite), opt);
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& ids,
                                    const VerifyOptions& opt) {
    std::vector<const CheckSpec*> picked;
    for (const auto& id : ids) {
        const CheckSpec* found = nullptr;
        for (const auto& spec : registry())
            if (spec.id == id) {
                found = &spec;
                break;
            }
        if (!found) throw DomainError("unknown check '" + id + "'");
        picked.push_back(found);
    }
    return run_selected(picked, opt);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string results_text(const std::vector<CheckResult>& results, bool structured) {
    std::ostringstream out;
    if (structured) {
        for (const auto& r : results)
            out << r.id << ' ' << (r.pass ? "pass" : "fail") << ' ' << r.detail << '\n';
        return out.str();
    }
    int passed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << " [" << r.suite << "]\n"
            << "      " << r.detail << '\n';
        if (r.pass) ++passed;
    }
    out << passed << "/" << results.size() << " checks passed\n";
    return out.str();
}

} // namespace addchow
