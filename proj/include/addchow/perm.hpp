#pragma once

#include <map>
#include <string>
#include <vector>

#include "addchow/error.hpp"

namespace addchow {

// Permutation of {1, ..., n} stored by images; degree 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);  // identity
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const;
    Permutation inverse() const;
    int sign() const;

    // (a * b)(j) = a(b(j)): apply b first
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const;

    // one-line notation "[2 1 3]"
    std::string str() const;

private:
    std::vector<int> img_;
};

// consecutive blocks of the given sizes; zero parts allowed
struct ShuffleSpec {
    std::vector<int> parts;
    int total() const;
};

// all permutations increasing on each block, in deterministic order
std::vector<Permutation> enumerate_shuffles(const ShuffleSpec& spec);
bool is_shuffle(const Permutation& p, const ShuffleSpec& spec);

// extend into a larger symmetric group: tau x Id_s acts on the first letters,
// Id_r x tau on the last letters (shifted by r)
Permutation extend_right(const Permutation& tau, int s);
Permutation extend_left(int r, const Permutation& tau);

// the (r+1)-cycle sending slot 1 to slot r+1 and sliding 2..r+1 down; identity on the rest
Permutation rotation(int r, int degree);

// sigma[i] in S_{n+1}: fixes i, acts on the complement as sigma does on {1..n}
// under the order isomorphism
Permutation sigma_insert(const Permutation& sigma, int i);

enum class PhiKind { InsertThenShuffle, ShuffleFirstBlock, ShuffleLastBlock };

// The three change-of-variable bijections onto Perm_{(1,r,s)}:
//   InsertThenShuffle:  (sigma in Perm_{(r,s)},   tau in Perm_{(1,r+s)}) -> sigma[tau(1)] * tau
//   ShuffleFirstBlock:  (sigma in Perm_{(r+1,s)}, tau in Perm_{(1,r)})   -> sigma * (tau x Id_s)
//   ShuffleLastBlock:   (sigma in Perm_{(r,s+1)}, tau in Perm_{(1,s)})   -> sigma * (Id_r x tau) * rotation(r)
Permutation phi_map(PhiKind kind, const Permutation& sigma, const Permutation& tau,
                    int r, int s);

// Element of the integral group ring Z[S_n].
class GroupRingElem {
public:
    explicit GroupRingElem(int degree = 0) : degree_(degree) {}
    static GroupRingElem unit(const Permutation& p, long long coeff = 1);

    int degree() const { return degree_; }
    const std::map<Permutation, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElem& add(const Permutation& p, long long coeff);
    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b);
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
    GroupRingElem scaled(long long c) const;

    bool operator==(const GroupRingElem& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    int degree_;
    std::map<Permutation, long long> terms_;
};

// the signed sum over all shuffles of the given type
GroupRingElem signed_shuffle_sum(const ShuffleSpec& spec);

struct ShuffleLemmaReport {
    GroupRingElem lhs, rhs;
    bool equal = false;
};

// The three product-rotation identities in Z[S_{r+s+1}], built exactly as stated
// (including the (-1)^r prefactor in the third) against the signed sum over Perm_{(1,r,s)}.
ShuffleLemmaReport shuffle_lemma_check(int which, int r, int s);

} // namespace addchow
