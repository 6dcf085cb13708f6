#ifndef SWCOMB_TAME_CHARACTERS_HPP
#define SWCOMB_TAME_CHARACTERS_HPP

#include <compare>
#include <cstdint>
#include <vector>

/*
 * Exact arithmetic on powers of the fundamental characters omega_m of tame
 * inertia over Q_l.  omega_m has order l^m - 1 and its Galois conjugates are
 * the powers omega_m^(l^i * e), so an isomorphism class of characters is a
 * Frobenius orbit of exponents modulo l^m - 1.  A tame semisimple inertial
 * representation is a multiset of such orbits; we store each orbit as its
 * minimal exponent and keep the multiset sorted, which makes isomorphism
 * testing plain equality.
 */

namespace swcomb {

// An odd prime l >= 3, checked by trial division at construction.
class OddPrime {
public:
    explicit OddPrime(std::int64_t l);
    std::int64_t value() const noexcept { return l_; }
    friend bool operator==(const OddPrime&, const OddPrime&) = default;
    friend auto operator<=>(const OddPrime&, const OddPrime&) = default;

private:
    std::int64_t l_;
};

// l^niveau - 1, the order of omega_niveau.  Exactness is the contract:
// throws std::overflow_error instead of wrapping when the value does not
// fit in 64 bits.
std::int64_t niveau_modulus(OddPrime l, int niveau);

// A power of the fundamental character of the given niveau.  The exponent
// of a reduced piece lies in [0, l^niveau - 2].
struct CharExponent {
    int niveau = 1;
    std::int64_t exponent = 0;
    friend auto operator<=>(const CharExponent&, const CharExponent&) = default;
};

// Orbit of e under multiplication by l modulo l^m - 1, sorted ascending.
// The orbit size always divides m.
std::vector<std::int64_t> frobenius_orbit(OddPrime l, int niveau, std::int64_t e);

// Primitive pieces of the inertial restriction of Ind_{Q_{l^m}}^{Q_l} omega_m^e.
// If the orbit of e has size d (a divisor of m), then e is a multiple of
// (l^m-1)/(l^d-1) and omega_m^e extends omega_d; the result is the niveau-d
// orbit of e*(l^d-1)/(l^m-1) with multiplicity m/d.  Niveaux summed with
// multiplicity always give m.  Non-primitive input is decomposed, never an
// error: the degenerate collapses are exactly what the GL_3 weight-list
// comparison has to track.
std::vector<CharExponent> decompose_induced(OddPrime l, int niveau, std::int64_t e);

// Canonical form of a tame semisimple inertial type: every piece primitive,
// every exponent the minimal element of its Frobenius orbit, pieces sorted
// by (niveau, exponent).  Built only through canonicalize().
class TameInertialType {
public:
    const OddPrime& prime() const noexcept { return l_; }
    const std::vector<CharExponent>& pieces() const noexcept { return pieces_; }

    // sum of the piece niveaux: the dimension of the representation
    int dimension() const;

    // largest piece niveau (0 for the empty type); this is the "niveau" of
    // a tame semisimple rho-bar in the sense of the weight-elimination
    // case split
    int niveau() const;

    friend bool operator==(const TameInertialType&, const TameInertialType&) = default;
    friend auto operator<=>(const TameInertialType&, const TameInertialType&) = default;

private:
    friend TameInertialType canonicalize(OddPrime, const std::vector<CharExponent>&);
    TameInertialType(OddPrime l, std::vector<CharExponent> pieces);

    OddPrime l_;
    std::vector<CharExponent> pieces_;
};

// Decomposes every entry, replaces each resulting piece by its minimal orbit
// representative and sorts.  Idempotent and independent of the input order.
TameInertialType canonicalize(OddPrime l, const std::vector<CharExponent>& raw);

// Isomorphism test; canonical forms make this equality of piece lists.
// Throws std::invalid_argument when the two types live over different primes.
bool types_equal(const TameInertialType& a, const TameInertialType& b);

// Inertial dual: negates every exponent mod l^m - 1.  Involutive.
TameInertialType dual_type(const TameInertialType& t);

// Twist by omega^k, using omega_m^((l^m-1)/(l-1)) = omega: adds
// k*(l^m-1)/(l-1) to each niveau-m exponent.  twist_cyclotomic(t, l-1) = t.
TameInertialType twist_cyclotomic(const TameInertialType& t, std::int64_t k);

} // namespace swcomb

#endif
