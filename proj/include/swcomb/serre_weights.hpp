#ifndef SWCOMB_SERRE_WEIGHTS_HPP
#define SWCOMB_SERRE_WEIGHTS_HPP

#include "swcomb/tame_characters.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

/*
 * Serre weights for GL_n of a finite field: decreasing integer tuples with
 * successive differences at most l-1, one tuple per embedding of the residue
 * field.  A family with f components is indexed by sigma_j = sigma_0 o Frob^j
 * for j = 0..f-1; that ordering is what turns the equivalence character into
 * the exponent sum  Sum_j l^j * (a_{j,n} - b_{j,n})  mod l^f - 1.
 *
 * All of the GL_3 machinery downstream fixes f = 1 (l split completely);
 * validity and equivalence are implemented for general f because they cost
 * nothing extra.
 */

namespace swcomb {

// A point of Z^n_+: integers a_1 >= a_2 >= ... >= a_n, n >= 1.
class LocalWeight {
public:
    explicit LocalWeight(std::vector<std::int64_t> entries);

    std::size_t rank() const noexcept { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; } // 0-based
    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

    friend bool operator==(const LocalWeight&, const LocalWeight&) = default;
    friend auto operator<=>(const LocalWeight&, const LocalWeight&) = default;

private:
    std::vector<std::int64_t> entries_;
};

// f-indexed family, component j attached to sigma_0 o Frob^j
using WeightFamily = std::vector<LocalWeight>;

// every successive difference at most l-1 (decreasingness is the type invariant)
bool is_serre_weight(OddPrime l, const LocalWeight& a);
bool is_serre_weight(OddPrime l, const WeightFamily& a);

// F_a = F_b: all per-sigma successive differences agree and the character
// x -> prod_sigma sigma(x)^(a_{sigma,n} - b_{sigma,n}) of F_{l^f}^x is trivial.
bool equivalent(OddPrime l, const LocalWeight& a, const LocalWeight& b);
bool equivalent(OddPrime l, const WeightFamily& a, const WeightFamily& b);

// Representative of the equivalence class with a_n in [0, l-2] (f = 1 only):
// subtracts the unique multiple of (l-1)*(1,...,1).
LocalWeight canonical_rep(OddPrime l, const LocalWeight& a);
LocalWeight canonical_rep(OddPrime l, const WeightFamily& a); // rejects f > 1

// All canonical representatives for rank n, f = 1: a_n in [0, l-2] and each
// difference in [0, l-1].  Cardinality (l-1) * l^(n-1).
std::vector<LocalWeight> enumerate_weights(OddPrime l, int n);

// Hodge type of the obvious crystalline lift: {a_i + n - i}, emitted in the
// (strictly decreasing) order i = 1..n.
std::vector<std::int64_t> hodge_type(const LocalWeight& a);

// Conjugate-duality partner: (-a_n, ..., -a_1).  Involutive, preserves
// Serre-weight validity.
LocalWeight dual_weight(const LocalWeight& a);

// lambda is a lift of a: the embeddings carrying lambda are partitioned over
// the residue embeddings by `over` (over[t] = index into a); above each
// residue embedding exactly one component equals a_sigma and the rest vanish.
bool is_lift(const std::vector<LocalWeight>& lambda,
             const std::vector<std::size_t>& over,
             const WeightFamily& a);

// Global weight: families keyed by place label, with an explicit conjugate
// pairing (the artifact has no number-field machinery; the pairing is caller
// data).  Component j at w is paired with component j at w^c.
struct GlobalWeight {
    std::map<std::string, WeightFamily> places;
    std::map<std::string, std::string> conjugate;
};

// a_{sigma,i} + a_{sigma c, n+1-i} = 0 at every paired place.
// Throws std::invalid_argument on an unpaired or missing place label.
bool check_global_duality(const GlobalWeight& g);

} // namespace swcomb

#endif
