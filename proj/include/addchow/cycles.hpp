#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "addchow/perm.hpp"
#include "addchow/projective.hpp"

namespace addchow {

// truncation ring: k[w]/(w^m) for e = 1, tensor of two such for e = 2
struct ModulusRing {
    int e = 1;
    std::vector<int> m = {2};

    static ModulusRing monomial(int m);
    ModulusRing tensor(const ModulusRing& o) const;
    ModulusRing min_ring(const ModulusRing& o) const;  // requires e == 1 on both sides

    bool operator==(const ModulusRing& o) const { return e == o.e && m == o.m; }
    bool operator<(const ModulusRing& o) const;
    std::string str() const;
};

// ambient shape: e affine coordinates, n box coordinates
struct SlotSpace {
    ModulusRing ring;
    int n = 0;

    bool operator==(const SlotSpace& o) const { return ring == o.ring && n == o.n; }
    bool operator<(const SlotSpace& o) const;
    std::string str() const;
};

// a closed point with coordinates in the symbol field
struct PointTerm {
    std::vector<RatFunc> a;      // e affine coordinates, each nonzero
    std::vector<ProjValue> box;  // n box coordinates, each avoiding {0, 1, inf}
};

// slot of a parametrized curve: constant, or a fractional-linear function of the parameter
using CurveSlot = std::variant<ProjValue, Mobius>;

// a rational curve whose box coordinates are fractional-linear in one parameter
struct CurveTerm {
    std::vector<RatFunc> a;      // constant affine coordinates
    std::vector<CurveSlot> box;
};

using CycleTerm = std::variant<PointTerm, CurveTerm>;

int term_order(const CycleTerm& a, const CycleTerm& b);
bool term_is_point(const CycleTerm& t);
std::string term_str(const CycleTerm& t);

struct TermLess {
    bool operator()(const CycleTerm& a, const CycleTerm& b) const {
        return term_order(a, b) < 0;
    }
};

enum class FaceEnd { Zero, Infinity };
enum class BoundaryMode { Full, LastZero };

// Formal Z-linear combination of terms in a fixed slot space. The decomposable flag
// records a known product structure across the two affine coordinates (set by
// concatenation, kept by slot actions); it never enters equality.
class FormalCycle {
public:
    explicit FormalCycle(SlotSpace space) : space_(std::move(space)) {}

    struct TermData {
        Int coeff;
        bool decomposable = false;
    };

    using TermMap = std::map<CycleTerm, TermData, TermLess>;

    const SlotSpace& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool all_points() const;

    // validates the term against the space; drops terms that are degenerate
    // (a box coordinate identically 1, or an affine coordinate identically 0),
    // throws ImproperIntersection when a box coordinate is identically 0 or inf
    void add(CycleTerm t, Int coeff, bool decomposable = false);

    FormalCycle operator-() const;
    friend FormalCycle operator+(const FormalCycle& x, const FormalCycle& y);
    friend FormalCycle operator-(const FormalCycle& x, const FormalCycle& y);
    FormalCycle scaled(const Int& c) const;

    bool operator==(const FormalCycle& o) const;
    std::string str() const;

private:
    SlotSpace space_;
    TermMap terms_;
};

FormalCycle zero_cycle(SlotSpace space);
FormalCycle point_cycle(const ModulusRing& ring, std::vector<RatFunc> a,
                        std::vector<ProjValue> box);

// intersection with the hyperplane {slot i = 0} or {slot i = inf}; 1-based slot index
FormalCycle face(const FormalCycle& z, int i, FaceEnd end);
// Full: sum over i of (-1)^i (face at 0 minus face at infinity); LastZero: last slot at 0
FormalCycle boundary(const FormalCycle& z, BoundaryMode mode = BoundaryMode::Full);

// insert the reciprocal affine coordinate as a new box slot at position k (e = 1 only)
FormalCycle delta_insert(const FormalCycle& z, int k);
// alternating sum of the n+1 insertions, weights (-1)^k
FormalCycle delta(const FormalCycle& z);

// every face vanishes except possibly the last slot at 0
bool is_reduced(const FormalCycle& z);

struct AdmissReport {
    bool ok = true;
    std::string reason;
};
// proper intersection with all faces; the modulus bound is automatic here because
// affine coordinates are constant along every parametrized direction
AdmissReport admissible(const FormalCycle& z);
// same check on a raw term, reporting shape defects (zero affine coordinate,
// boundary box values, constant curves) instead of silently dropping the term
AdmissReport admissible_term(const SlotSpace& space, const CycleTerm& term);

// geometric slot action: new box slot j carries old slot sigma^{-1}(j)
FormalCycle act_on_slots(const Permutation& sigma, const FormalCycle& z);

// concatenation (x; T1) x (y; T2) = (x, y; T1, T2); both factors e = 1, at most one curve
FormalCycle concat(const FormalCycle& x, const FormalCycle& y);
// signed sum of slot shuffles of the concatenation
FormalCycle shuffle_product(const FormalCycle& x, const FormalCycle& y);
// multiply the two affine coordinates; requires e = 2 and every term decomposable
FormalCycle mu_push(const FormalCycle& z);
// mu_push of shuffle_product; lands in the min truncation ring
FormalCycle wedge(const FormalCycle& x, const FormalCycle& y);

// (x; T1) x' (y; T2): the parametrized curve (xy; s, (s/x - 1/(xy))/(s - 1/(xy)), T1, T2)
// in the min ring; both inputs must consist of point terms
FormalCycle extra_degenerate_concat(const FormalCycle& x, const FormalCycle& y);
// signed sum over Perm_{(1,n1,n2)} acting on the n1+n2+1 objects of the
// extra-degenerate concatenation, the first two slots moving as one glued block;
// each term is weighted by the sign of the expanded slot permutation
FormalCycle cyclic_shuffle(const FormalCycle& x, const FormalCycle& y);

struct DerivationReport {
    FormalCycle lhs;  // delta(wedge) - (delta x)^y - (-1)^{n1} x^(delta y)
    FormalCycle rhs;  // negated full boundary of the cyclic shuffle product
    int observed_sign = 0;  // lhs == observed_sign * rhs; 0 when both sides vanish
    bool holds = false;     // lhs matches +rhs or -rhs
};
// the derivation defect of delta against the wedge, compared with the boundary
// of the cyclic shuffle product
DerivationReport connes_derivation_check(const FormalCycle& x, const FormalCycle& y);

} // namespace addchow
