#include "swcomb/tame_characters.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace swcomb {

OddPrime::OddPrime(std::int64_t l) : l_(l) {
    if (l < 3 || l % 2 == 0)
        throw std::invalid_argument("not an odd prime >= 3: " + std::to_string(l));
    for (std::int64_t d = 3; d * d <= l; d += 2)
        if (l % d == 0)
            throw std::invalid_argument("not prime: " + std::to_string(l));
}

std::int64_t niveau_modulus(OddPrime l, int niveau) {
    if (niveau < 1)
        throw std::invalid_argument("niveau must be >= 1, got " + std::to_string(niveau));
    std::int64_t p = 1;
    for (int i = 0; i < niveau; ++i) {
        if (p > std::numeric_limits<std::int64_t>::max() / l.value())
            throw std::overflow_error("l^m - 1 does not fit in 64 bits (l=" +
                                      std::to_string(l.value()) + ", m=" + std::to_string(niveau) + ")");
        p *= l.value();
    }
    return p - 1;
}

namespace {

std::int64_t reduce_mod(std::int64_t e, std::int64_t m) {
    e %= m;
    return e < 0 ? e + m : e;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

// both operands already reduced into [0, m)
std::int64_t add_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return a >= m - b ? a - (m - b) : a + b;
}

} // namespace

std::vector<std::int64_t> frobenius_orbit(OddPrime l, int niveau, std::int64_t e) {
    const std::int64_t m = niveau_modulus(l, niveau);
    std::vector<std::int64_t> orbit;
    std::int64_t x = reduce_mod(e, m);
    const std::int64_t start = x;
    do {
        orbit.push_back(x);
        x = mul_mod(x, l.value(), m);
    } while (x != start);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<CharExponent> decompose_induced(OddPrime l, int niveau, std::int64_t e) {
    const std::int64_t big = niveau_modulus(l, niveau);
    const std::int64_t x = reduce_mod(e, big);

    // orbit size d of x under multiplication by l; d | niveau
    int d = 1;
    std::int64_t y = mul_mod(x, l.value(), big);
    while (y != x) {
        y = mul_mod(y, l.value(), big);
        ++d;
    }

    // x is a multiple of (l^niveau-1)/(l^d-1); rewrite over omega_d
    const std::int64_t small = niveau_modulus(l, d);
    const std::int64_t f = x / (big / small);
    const std::int64_t fmin = frobenius_orbit(l, d, f).front();

    std::vector<CharExponent> out(static_cast<std::size_t>(niveau / d),
                                  CharExponent{d, fmin});
    return out;
}

TameInertialType::TameInertialType(OddPrime l, std::vector<CharExponent> pieces)
    : l_(l), pieces_(std::move(pieces)) {}

int TameInertialType::dimension() const {
    int n = 0;
    for (const auto& p : pieces_) n += p.niveau;
    return n;
}

int TameInertialType::niveau() const {
    int m = 0;
    for (const auto& p : pieces_) m = std::max(m, p.niveau);
    return m;
}

TameInertialType canonicalize(OddPrime l, const std::vector<CharExponent>& raw) {
    std::vector<CharExponent> out;
    out.reserve(raw.size());
    for (const auto& piece : raw) {
        auto dec = decompose_induced(l, piece.niveau, piece.exponent);
        out.insert(out.end(), dec.begin(), dec.end());
    }
    std::sort(out.begin(), out.end());
    return TameInertialType(l, std::move(out));
}

bool types_equal(const TameInertialType& a, const TameInertialType& b) {
    if (!(a.prime() == b.prime()))
        throw std::invalid_argument("types over different primes are not comparable");
    return a.pieces() == b.pieces();
}

TameInertialType dual_type(const TameInertialType& t) {
    std::vector<CharExponent> raw;
    raw.reserve(t.pieces().size());
    for (const auto& p : t.pieces())
        raw.push_back({p.niveau, -p.exponent});
    return canonicalize(t.prime(), raw);
}

TameInertialType twist_cyclotomic(const TameInertialType& t, std::int64_t k) {
    const std::int64_t l = t.prime().value();
    const std::int64_t kr = reduce_mod(k, l - 1); // omega^(l-1) = 1
    std::vector<CharExponent> raw;
    raw.reserve(t.pieces().size());
    for (const auto& p : t.pieces()) {
        const std::int64_t m = niveau_modulus(t.prime(), p.niveau);
        const std::int64_t shift = mul_mod(kr, (m / (l - 1)), m);
        raw.push_back({p.niveau, add_mod(p.exponent, shift, m)});
    }
    return canonicalize(t.prime(), raw);
}

} // namespace swcomb
