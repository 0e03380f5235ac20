// Formal cycles: face semantics, boundaries, reciprocal insertion, slot
// actions, and the three products.  Every expected cycle is assembled
// independently from point constructors and frozen here.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "addchow/cycle_io.hpp"
#include "addchow/cycles.hpp"
#include "addchow/error.hpp"
#include "addchow/totaro.hpp"

using namespace addchow;

namespace {

const ModulusRing M2 = ModulusRing::monomial(2);
const RatFunc A = RatFunc::var("a");
const RatFunc B1 = RatFunc::var("b1");
const RatFunc B2 = RatFunc::var("b2");
const RatFunc X = RatFunc::var("x");
const RatFunc Y = RatFunc::var("y");
const RatFunc T1 = RatFunc::var("t1");
const RatFunc T2 = RatFunc::var("t2");
const RatFunc S1 = RatFunc::var("s1");

FormalCycle pt(std::vector<RatFunc> a, std::vector<RatFunc> box) {
    std::vector<ProjValue> b(box.begin(), box.end());
    return point_cycle(M2, std::move(a), std::move(b));
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

TEST_CASE("term validation: degenerate terms drop, face contact throws") {
    CHECK(point_cycle(M2, {X}, {ProjValue(1)}).is_zero());       // box value 1
    CHECK(point_cycle(M2, {RatFunc()}, {ProjValue(X)}).is_zero());  // affine 0
    CHECK_THROWS_AS(point_cycle(M2, {X}, {ProjValue()}), ImproperIntersection);
    CHECK_THROWS_AS(point_cycle(M2, {X}, {ProjValue::infinity()}),
                    ImproperIntersection);

    FormalCycle z = pt({X}, {T1});
    CHECK((z - z).is_zero());
    CHECK(z.scaled(Int(0)).is_zero());
    CHECK((z + z) == z.scaled(Int(2)));
    CHECK(z.all_points());
}

TEST_CASE("two-slot parametrized curve: all four faces, frozen") {
    FormalCycle c2 = totaro_c2(A, B1, B2);
    CHECK_FALSE(c2.all_points());
    CHECK(c2.space().n == 2);
    CHECK(admissible(c2).ok);
    CHECK_FALSE(is_reduced(c2));

    // slot 1 at 0 forces the second slot to 1: the term degenerates away
    CHECK(face(c2, 1, FaceEnd::Zero).is_zero());
    FormalCycle at_b1 = point_cycle(M2, {A.inverse()}, {ProjValue(B1)});
    FormalCycle at_b2 = point_cycle(M2, {A.inverse()}, {ProjValue(B2)});
    FormalCycle at_b1b2 = point_cycle(M2, {A.inverse()}, {ProjValue(B1 * B2)});
    CHECK(face(c2, 1, FaceEnd::Infinity) == at_b1);
    CHECK(face(c2, 2, FaceEnd::Zero) == at_b2);
    CHECK(face(c2, 2, FaceEnd::Infinity) == at_b1b2);

    FormalCycle bd = boundary(c2);
    CHECK(bd == at_b1 + at_b2 - at_b1b2);
    CHECK(boundary(bd).is_zero());

    CHECK(totaro_c2(RatFunc(), B1, B2).is_zero());  // vanishing modulus point
    FormalCycle extended = totaro_c2(A, B1, B2, {ProjValue(T1)}, 3);
    CHECK(extended.space().n == 3);
    CHECK(extended.space().ring == ModulusRing::monomial(3));
}

TEST_CASE("boundary of a slotless cycle is the zero cycle at the same space") {
    FormalCycle z = pt({X}, {});
    FormalCycle bd = boundary(z);
    CHECK(bd.is_zero());
    CHECK(bd.space() == z.space());
    CHECK(boundary(z, BoundaryMode::LastZero).is_zero());
}

TEST_CASE("reduced cycles: every face vanishes except maybe the last at 0") {
    CHECK(is_reduced(pt({X}, {T1})));
    CHECK(is_reduced(pt({X}, {X.inverse()})));
    CHECK(is_reduced(pt({X}, {X.inverse(), T1})));
    // boundary in reduced mode only looks at the final slot
    FormalCycle z = pt({X}, {T1, T2});
    CHECK(boundary(z, BoundaryMode::LastZero).is_zero());
}

TEST_CASE("reciprocal insertion: positions, alternating sum, square zero") {
    FormalCycle z = pt({X}, {T1});
    FormalCycle left = pt({X}, {X.inverse(), T1});
    FormalCycle right = pt({X}, {T1, X.inverse()});
    CHECK(delta_insert(z, 1) == left);
    CHECK(delta_insert(z, 2) == right);
    CHECK_THROWS_AS(delta_insert(z, 0), Error);
    CHECK_THROWS_AS(delta_insert(z, 3), Error);
    CHECK(delta(z) == right - left);

    // one slotless seed: the single insertion enters with weight -1
    FormalCycle u = pt({X}, {});
    CHECK(delta(u) == pt({X}, {X.inverse()}).scaled(Int(-1)));

    CHECK(delta(delta(z)).is_zero());
    CHECK(delta(delta(pt({X}, {T1, T2}))).is_zero());
    CHECK(delta(delta(u)).is_zero());
}

TEST_CASE("slot action: transport rule and composition, exhaustively in S_3") {
    FormalCycle z = pt({X}, {T1, T2, S1});
    // new slot j carries old slot sigma^{-1}(j): the transposition (1 2)
    Permutation swap12 = Permutation::from_images({2, 1, 3});
    CHECK(act_on_slots(swap12, z) == pt({X}, {T2, T1, S1}));
    CHECK(act_on_slots(Permutation(3), z) == z);

    for (const Permutation& sigma : symmetric_group(3))
        for (const Permutation& tau : symmetric_group(3))
            CHECK(act_on_slots(sigma, act_on_slots(tau, z)) ==
                  act_on_slots(sigma * tau, z));

    // the action also moves parametrized slots
    FormalCycle c2 = totaro_c2(A, B1, B2);
    FormalCycle swapped = act_on_slots(Permutation::from_images({2, 1}), c2);
    CHECK_FALSE(swapped == c2);
    CHECK(act_on_slots(Permutation::from_images({2, 1}), swapped) == c2);
}

TEST_CASE("concatenation, shuffle product, and wedge on two points") {
    FormalCycle x = pt({X}, {T1});
    FormalCycle y = pt({Y}, {S1});

    FormalCycle cc = concat(x, y);
    CHECK(cc.space().ring.e == 2);
    CHECK(cc.space().n == 2);
    CHECK(cc == point_cycle(M2.tensor(M2), {X, Y}, {ProjValue(T1), ProjValue(S1)}));

    FormalCycle shuffled = shuffle_product(x, y);
    FormalCycle straight = point_cycle(M2.tensor(M2), {X, Y},
                                       {ProjValue(T1), ProjValue(S1)});
    FormalCycle crossed = point_cycle(M2.tensor(M2), {X, Y},
                                      {ProjValue(S1), ProjValue(T1)});
    CHECK(shuffled == straight - crossed);

    FormalCycle w = wedge(x, y);
    FormalCycle xy_straight = point_cycle(M2, {X * Y}, {ProjValue(T1), ProjValue(S1)});
    FormalCycle xy_crossed = point_cycle(M2, {X * Y}, {ProjValue(S1), ProjValue(T1)});
    CHECK(w == xy_straight - xy_crossed);
    CHECK(w.space().ring == M2);  // minimum of the two truncation exponents

    // bilinearity and graded sign under swapping the degree-1 factors
    CHECK(shuffle_product(x.scaled(Int(2)), y) == shuffled.scaled(Int(2)));
    CHECK(wedge(y, x) == w.scaled(Int(-1)));

    // direct e = 2 points carry no product split, so the push-forward refuses
    FormalCycle raw = point_cycle(M2.tensor(M2), {X, Y}, {ProjValue(T1)});
    CHECK_THROWS_AS(mu_push(raw), Error);
    CHECK(mu_push(cc) == point_cycle(M2, {X * Y}, {ProjValue(T1), ProjValue(S1)}));

    FormalCycle c2 = totaro_c2(A, B1, B2);
    CHECK_THROWS_AS(concat(c2, c2), Error);  // at most one curve factor
}

TEST_CASE("extra-degenerate concatenation and the cyclic shuffle sum") {
    FormalCycle x = pt({X}, {T1});
    FormalCycle y = pt({Y}, {S1});

    FormalCycle glued = extra_degenerate_concat(x, y);
    CHECK(glued.space().ring == M2);
    CHECK(glued.space().n == 4);
    CHECK(glued.terms().size() == 1);
    CHECK_FALSE(glued.all_points());
    // frozen rendering: the helper slots are s and (s y - 1)/(s x y - 1)
    CHECK(cycle_to_text(glued) ==
          "cycle\n"
          "ring 2\n"
          "slots 4\n"
          "symbols s1 t1 x y\n"
          "term 1 | x*y | s ; (s*y - 1)/(s*x*y - 1) ; t1 ; s1\n"
          "end\n");

    FormalCycle cyc = cyclic_shuffle(x, y);
    CHECK(cyc.space().ring == M2);
    CHECK(cyc.space().n == 4);
    CHECK(cyc.terms().size() == 6);  // |Perm_(1,1,1)| arrangements
    CHECK_FALSE(cyc.all_points());
    for (const auto& [term, data] : cyc.terms()) {
        CHECK_FALSE(term_is_point(term));
        CHECK((data.coeff == 1 || data.coeff == -1));
    }

    DerivationReport rep = connes_derivation_check(x, y);
    CHECK(rep.holds);
    CHECK((rep.observed_sign == 1 || rep.observed_sign == -1));
}

TEST_CASE("admissibility reports name the defect instead of dropping it") {
    SlotSpace space{M2, 1};
    AdmissReport bad_box = admissible_term(space, PointTerm{{X}, {ProjValue()}});
    CHECK_FALSE(bad_box.ok);
    CHECK_FALSE(bad_box.reason.empty());
    AdmissReport bad_affine = admissible_term(space, PointTerm{{RatFunc()}, {ProjValue(T1)}});
    CHECK_FALSE(bad_affine.ok);
    AdmissReport constant_curve =
        admissible_term(space, CurveTerm{{X}, {CurveSlot(ProjValue(T1))}});
    CHECK_FALSE(constant_curve.ok);
    AdmissReport fine = admissible_term(space, PointTerm{{X}, {ProjValue(T1)}});
    CHECK(fine.ok);
}
