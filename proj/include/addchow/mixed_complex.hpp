#pragma once

#include <map>
#include <string>
#include <vector>

#include "addchow/qmatrix.hpp"

namespace addchow {

// finitely supported graded rational vector space with optional basis labels
struct GradedSpace {
    std::map<int, int> dims;  // degree -> dimension; only nonzero entries kept
    std::map<int, std::vector<std::string>> labels;

    int dim(int n) const;
    bool empty() const;
    int lo() const;  // smallest degree with nonzero dimension (0 when empty)
    int hi() const;  // largest degree with nonzero dimension (-1 when empty)
    int total_dim() const;
};

// graded space with a degree -1 differential b and a degree +1 operator B,
// subject to b^2 = B^2 = bB + Bb = 0
struct MixedComplex {
    GradedSpace space;
    std::map<int, QMatrix> b;  // b[n] : V_n -> V_{n-1}
    std::map<int, QMatrix> B;  // B[n] : V_n -> V_{n+1}

    QMatrix b_at(int n) const;  // stored matrix or zero of the right shape
    QMatrix B_at(int n) const;
};

struct ValidationReport {
    bool ok = true;
    std::string detail;  // first violated identity and the degree it fails at
};
ValidationReport validate(const MixedComplex& m);

// plain chain complex with a degree -1 differential
struct ChainComplex {
    std::map<int, int> dims;
    std::map<int, QMatrix> d;  // d[n] : C_n -> C_{n-1}
    std::map<int, std::vector<std::string>> labels;

    int dim(int n) const;
    QMatrix d_at(int n) const;
};
ValidationReport validate_chain(const ChainComplex& c);

// homology at one degree, with a representative cycle basis that extends the
// boundary space; `boundaries` keeps the incoming differential so classes of
// new cycles can be expressed in the representative basis
struct HomologyData {
    int dim = 0;
    int chain_dim = 0;
    QMatrix reps;        // chain_dim x dim, representative cycles as columns
    QMatrix boundaries;  // incoming differential d_{n+1}
};
HomologyData homology(const ChainComplex& c, int n);
// coordinates of the class of cycle z in the representative basis
std::vector<Rat> class_coords(const HomologyData& h, const std::vector<Rat>& z);

// the first column (V, b) of the mixed complex as a chain complex
ChainComplex column_complex(const MixedComplex& m);

// Tot_n = direct sum over i >= 0 of V_{n-2i} with
// d(c_0, c_1, ...) = (b c_0 + B c_1, b c_1 + B c_2, ...),
// materialized for degrees lo..hi (dims also recorded at lo-1 for shapes)
ChainComplex totalize(const MixedComplex& m, int lo, int hi);
// dimension of Tot_n and the offset of component i inside it
int tot_dim(const MixedComplex& m, int n);
QMatrix tot_d(const MixedComplex& m, int n);  // Tot_n -> Tot_{n-1}

// one group occurrence in the periodicity sequence, between two maps
struct LESNode {
    std::string name;     // e.g. "H_3" or "HC_3(occurrence at period 5)"
    std::string kind;     // "H" or "HC"
    int degree = 0;       // homological degree of the group
    int dim = 0;
    std::string in_map, out_map;
    int in_rank = 0, out_rank = 0;
    bool composite_zero = false;  // out_map . in_map == 0
    bool exact = false;           // composite zero and in_rank + out_rank == dim
    bool verified = true;         // false near the reporting cap
};

struct LESReport {
    bool valid_input = true;
    std::string validation_detail;
    bool all_exact = true;  // over verified nodes
    int lo = 0, hi = 0;     // column support
    int report_hi = 0;      // top degree reported (hi + 2)
    std::vector<LESNode> nodes;  // ordered along the sequence, descending degree
};

// the long exact sequence ... -> H_n -I-> HC_n -S-> HC_{n-2} -conn-> H_{n-1} -> ...
// induced by 0 -> column -> Tot -> Tot[2] -> 0, with connecting map [z] -> [B z_0];
// exactness is checked node by node (composite zero + rank count)
LESReport connes_sequence(const MixedComplex& m);

}  // namespace addchow
