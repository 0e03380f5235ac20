// Permutations, shuffle enumeration, the insertion/rotation bijections, and
// the integral group ring.  Signs are cross-checked against an independent
// inversion count, and shuffle counts against the multinomial formula.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "addchow/error.hpp"
#include "addchow/perm.hpp"

using namespace addchow;

namespace {

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// independent sign oracle: parity of the inversion count
int inversion_sign(const Permutation& p) {
    int inv = 0;
    for (int i = 1; i <= p.degree(); ++i)
        for (int j = i + 1; j <= p.degree(); ++j)
            if (p(i) > p(j)) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

long long multinomial(const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) total += p;
    long long r = 1;
    int used = 0;
    for (int p : parts)
        for (int k = 1; k <= p; ++k) r = r * ++used / k;  // running binomials
    (void)total;
    return r;
}

}  // namespace

TEST_CASE("construction and composition convention") {
    CHECK(Permutation(0).degree() == 0);
    CHECK(Permutation(3)(2) == 2);
    CHECK_THROWS_AS(Permutation::from_images({1, 1}), Error);
    CHECK_THROWS_AS(Permutation::from_images({0, 2}), Error);

    // (a * b)(j) = a(b(j)), checked exhaustively in S_4
    for (const Permutation& a : symmetric_group(4))
        for (const Permutation& b : symmetric_group(4)) {
            Permutation ab = a * b;
            for (int j = 1; j <= 4; ++j) CHECK(ab(j) == a(b(j)));
        }
}

TEST_CASE("sign agrees with inversion parity and is multiplicative") {
    for (int n = 0; n <= 5; ++n) {
        std::vector<Permutation> sn = symmetric_group(n);
        for (const Permutation& p : sn) {
            CHECK(p.sign() == inversion_sign(p));
            CHECK((p * p.inverse()) == Permutation(n));
            CHECK(p.inverse().inverse() == p);
        }
        if (n > 4) continue;  // keep the product loop quadratic only up to S_4
        for (const Permutation& a : sn)
            for (const Permutation& b : sn)
                CHECK((a * b).sign() == a.sign() * b.sign());
    }
}

TEST_CASE("shuffle enumeration: count, membership, monotone blocks") {
    for (int r = 0; r <= 4; ++r)
        for (int s = 0; s <= 4; ++s) {
            ShuffleSpec spec{{r, s}};
            std::vector<Permutation> sh = enumerate_shuffles(spec);
            CHECK(static_cast<long long>(sh.size()) == multinomial({r, s}));
            std::set<Permutation> distinct(sh.begin(), sh.end());
            CHECK(distinct.size() == sh.size());
            for (const Permutation& p : sh) {
                CHECK(is_shuffle(p, spec));
                for (int j = 1; j < r; ++j) CHECK(p(j) < p(j + 1));
                for (int j = r + 1; j < r + s; ++j) CHECK(p(j) < p(j + 1));
            }
        }
    // membership is exact: in S_3 exactly C(3,1) = 3 permutations are (1,2)-shuffles
    int members = 0;
    for (const Permutation& p : symmetric_group(3))
        if (is_shuffle(p, ShuffleSpec{{1, 2}})) ++members;
    CHECK(members == 3);

    ShuffleSpec three{{1, 2, 2}};
    CHECK(static_cast<long long>(enumerate_shuffles(three).size()) ==
          multinomial({1, 2, 2}));
    CHECK(enumerate_shuffles(ShuffleSpec{{0, 3}}).size() == 1);
    CHECK(enumerate_shuffles(ShuffleSpec{{0, 3}})[0] == Permutation(3));
}

TEST_CASE("block extensions and the rotation cycle") {
    Permutation tau = Permutation::from_images({2, 1});
    Permutation right = extend_right(tau, 3);  // tau x Id_3 in S_5
    CHECK(right.degree() == 5);
    CHECK(right(1) == 2);
    CHECK(right(2) == 1);
    for (int j = 3; j <= 5; ++j) CHECK(right(j) == j);

    Permutation left = extend_left(3, tau);  // Id_3 x tau in S_5
    CHECK(left.degree() == 5);
    for (int j = 1; j <= 3; ++j) CHECK(left(j) == j);
    CHECK(left(4) == 5);
    CHECK(left(5) == 4);

    // rotation(r): the (r+1)-cycle 1 -> r+1, j -> j-1 for 2 <= j <= r+1
    Permutation rho = rotation(2, 4);
    CHECK(rho(1) == 3);
    CHECK(rho(2) == 1);
    CHECK(rho(3) == 2);
    CHECK(rho(4) == 4);
    for (int r = 0; r <= 4; ++r)
        CHECK(rotation(r, 5).sign() == (r % 2 == 0 ? 1 : -1));
}

TEST_CASE("insertion embedding fixes the new letter and keeps the sign") {
    for (int n = 0; n <= 4; ++n)
        for (const Permutation& sigma : symmetric_group(n))
            for (int i = 1; i <= n + 1; ++i) {
                Permutation ins = sigma_insert(sigma, i);
                CHECK(ins.degree() == n + 1);
                CHECK(ins(i) == i);
                CHECK(ins.sign() == sigma.sign());
                // order isomorphism on the complement reproduces sigma
                std::vector<int> rest;
                for (int j = 1; j <= n + 1; ++j)
                    if (j != i) rest.push_back(ins(j) - (ins(j) > i ? 1 : 0));
                for (int j = 1; j <= n; ++j) CHECK(rest[j - 1] == sigma(j));
            }
}

TEST_CASE("the three change-of-variable maps are bijections onto (1,r,s)-shuffles") {
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s) {
            std::vector<Permutation> target = enumerate_shuffles(ShuffleSpec{{1, r, s}});
            std::set<Permutation> target_set(target.begin(), target.end());
            CHECK(static_cast<long long>(target.size()) == multinomial({1, r, s}));

            struct Domain {
                PhiKind kind;
                ShuffleSpec sigma_spec;
                ShuffleSpec tau_spec;
            };
            std::vector<Domain> domains{
                {PhiKind::InsertThenShuffle, {{r, s}}, {{1, r + s}}},
                {PhiKind::ShuffleFirstBlock, {{r + 1, s}}, {{1, r}}},
                {PhiKind::ShuffleLastBlock, {{r, s + 1}}, {{1, s}}},
            };
            for (const Domain& dom : domains) {
                std::set<Permutation> image;
                size_t pairs = 0;
                for (const Permutation& sigma : enumerate_shuffles(dom.sigma_spec))
                    for (const Permutation& tau : enumerate_shuffles(dom.tau_spec)) {
                        ++pairs;
                        image.insert(phi_map(dom.kind, sigma, tau, r, s));
                    }
                CHECK(image.size() == pairs);  // injective
                CHECK(image == target_set);    // onto
            }
        }
}

TEST_CASE("group ring arithmetic") {
    Permutation a = Permutation::from_images({2, 1, 3});
    Permutation b = Permutation::from_images({1, 3, 2});
    GroupRingElem ua = GroupRingElem::unit(a, 2);
    GroupRingElem ub = GroupRingElem::unit(b, -1);
    CHECK((ua - ua).is_zero());
    CHECK((ua + ub).terms().size() == 2);
    // unit(a, 2) * unit(b, -1) = unit(ab, -2)
    GroupRingElem prod = ua * ub;
    CHECK(prod == GroupRingElem::unit(a * b, -2));
    CHECK(ua.scaled(3) == GroupRingElem::unit(a, 6));

    GroupRingElem sum = signed_shuffle_sum(ShuffleSpec{{2, 1}});
    CHECK(static_cast<long long>(sum.terms().size()) == multinomial({2, 1}));
    auto it = sum.terms().find(Permutation(3));
    REQUIRE(it != sum.terms().end());
    CHECK(it->second == 1);  // the identity shuffle carries +1
    for (const auto& [p, c] : sum.terms()) CHECK(c == p.sign());
}

TEST_CASE("product-rotation identities hold in the group ring") {
    for (int which = 1; which <= 3; ++which)
        for (int r = 0; r <= 3; ++r)
            for (int s = 0; s <= 3; ++s) {
                ShuffleLemmaReport rep = shuffle_lemma_check(which, r, s);
                CHECK(rep.equal);
                CHECK(rep.lhs == rep.rhs);
            }
}
