#ifndef SWCOMB_EXPLICIT_WEIGHTS_HPP
#define SWCOMB_EXPLICIT_WEIGHTS_HPP

#include "swcomb/serre_weights.hpp"
#include "swcomb/tame_characters.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

/*
 * The explicitly predicted weight set, at the level of inertia.  A weight a
 * and a permutation sigma give the shifted exponents c_j = a_{sigma(j)} + n
 * - sigma(j); a composition of n chunks c into blocks, each block feeding
 * one induced character exponent -(c_0 + l c_1 + ... + l^(m-1) c_{m-1}).  A
 * tame semisimple type tau lies over a exactly when some (sigma,
 * composition) pair reproduces tau.  Membership enumerates all pairs with no
 * pruning: at the GL_3 target size that is a 24-case loop, and correctness
 * beats cleverness.
 */

namespace swcomb {

// Ordered composition n = n_1 + ... + n_r with positive parts.  Ordered
// rather than unordered: the definition chunks a sigma-ordered tuple, and
// duplicates die in the canonical candidate set anyway.
class Composition {
public:
    explicit Composition(std::vector<int> parts);
    const std::vector<int>& parts() const noexcept { return parts_; }
    int total() const noexcept { return total_; }

private:
    std::vector<int> parts_;
    int total_;
};

// all 2^(n-1) compositions of n, in a fixed deterministic order
std::vector<Composition> all_compositions(int n);

// sigma as the image list: j -> sigma[j], 0-based
using Permutation = std::vector<int>;
std::vector<Permutation> all_permutations(int n);

using ShiftedExponentTuple = std::vector<std::int64_t>;

// c_j = a_{sigma(j)} + n - sigma(j)  (1-based in the written convention)
ShiftedExponentTuple shifted_exponents(const LocalWeight& a, const Permutation& sigma);

// Inertial restriction of the split tame representation attached to (comp, c):
// chunk c by comp, form the exponent -(c_{i,0} + l c_{i,1} + ...) mod l^{n_i}-1
// for each chunk, induce and canonicalize.  Unramified twists die on inertia
// and are not represented here.
TameInertialType rho_bar_inertial(OddPrime l, const Composition& comp,
                                  const ShiftedExponentTuple& c);

// tau in the candidate set of a?  Throws std::invalid_argument when the rank
// of a and the dimension of tau disagree.
bool w_explicit_I_contains(OddPrime l, const TameInertialType& tau, const LocalWeight& a);

// all canonical representatives of rank n lying over tau
std::vector<LocalWeight> w_explicit_I(OddPrime l, int n, const TameInertialType& tau);

// canonical, pairwise distinct
using CandidateSet = std::set<TameInertialType>;

// every type reachable from a: { rho_bar_inertial(l, comp, shifted_exponents(a, sigma)) }
CandidateSet inertial_candidates(OddPrime l, const LocalWeight& a);

// Conjunction of the local memberships over the supplied places.  Requires
// check_global_duality(g) and one type per place; the places must be split
// completely (families of degree 1).
bool w_explicit_global_contains(OddPrime l,
                                const std::map<std::string, TameInertialType>& types,
                                const GlobalWeight& g);

// A tame type of the full local Galois group: primitive inertial orbits
// tagged with opaque Frobenius-eigenvalue labels.  Labels carry no
// isomorphism semantics beyond equality (unramified-twist identifications
// of induced representations are deliberately not modelled); everything
// the verifier computes happens on the inertial part.
class LabeledFullType {
public:
    using Piece = std::pair<CharExponent, std::string>;

    // Normalizes each exponent to its minimal orbit representative and sorts.
    // A label on a non-primitive orbit is rejected: the labelled summand
    // would be reducible and its label semantics undefined.
    LabeledFullType(OddPrime l, std::vector<Piece> pieces);

    const OddPrime& prime() const noexcept { return l_; }
    const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    TameInertialType inertial_restriction() const;

    friend bool operator==(const LabeledFullType&, const LabeledFullType&) = default;

private:
    OddPrime l_;
    std::vector<Piece> pieces_;
};

} // namespace swcomb

#endif
