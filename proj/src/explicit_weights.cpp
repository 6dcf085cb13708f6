#include "swcomb/explicit_weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace swcomb {

namespace {

std::int64_t reduce_mod(std::int64_t e, std::int64_t m) {
    e %= m;
    return e < 0 ? e + m : e;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

} // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), total_(0) {
    if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        total_ += p;
    }
}

std::vector<Composition> all_compositions(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<Composition> out;
    // bit i of mask set <=> a cut after position i+1
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

ShiftedExponentTuple shifted_exponents(const LocalWeight& a, const Permutation& sigma) {
    const std::size_t n = a.rank();
    if (sigma.size() != n)
        throw std::invalid_argument("permutation size must match the weight rank");
    ShiftedExponentTuple c(n);
    for (std::size_t j = 0; j < n; ++j) {
        const int s = sigma[j];
        if (s < 0 || static_cast<std::size_t>(s) >= n)
            throw std::invalid_argument("permutation image out of range");
        // 1-based: c_j = a_{sigma(j)} + n - sigma(j)
        c[j] = a[static_cast<std::size_t>(s)] + static_cast<std::int64_t>(n) - (s + 1);
    }
    return c;
}

TameInertialType rho_bar_inertial(OddPrime l, const Composition& comp,
                                  const ShiftedExponentTuple& c) {
    if (static_cast<std::size_t>(comp.total()) != c.size())
        throw std::invalid_argument("composition and exponent tuple length mismatch");
    std::vector<CharExponent> raw;
    std::size_t pos = 0;
    for (int part : comp.parts()) {
        const std::int64_t mod = niveau_modulus(l, part);
        std::int64_t acc = 0;
        std::int64_t pw = 1;
        for (int k = 0; k < part; ++k) {
            acc = (acc + mul_mod(reduce_mod(c[pos + static_cast<std::size_t>(k)], mod), pw, mod)) % mod;
            pw = mul_mod(pw, l.value(), mod);
        }
        raw.push_back({part, reduce_mod(-acc, mod)});
        pos += static_cast<std::size_t>(part);
    }
    return canonicalize(l, raw);
}

bool w_explicit_I_contains(OddPrime l, const TameInertialType& tau, const LocalWeight& a) {
    if (!(tau.prime() == l))
        throw std::invalid_argument("type does not live over the given prime");
    if (tau.dimension() != static_cast<int>(a.rank()))
        throw std::invalid_argument("rank mismatch between weight and inertial type");
    const int n = static_cast<int>(a.rank());
    for (const auto& sigma : all_permutations(n)) {
        const auto c = shifted_exponents(a, sigma);
        for (const auto& comp : all_compositions(n))
            if (rho_bar_inertial(l, comp, c) == tau) return true;
    }
    return false;
}

std::vector<LocalWeight> w_explicit_I(OddPrime l, int n, const TameInertialType& tau) {
    std::vector<LocalWeight> out;
    for (const auto& a : enumerate_weights(l, n))
        if (w_explicit_I_contains(l, tau, a)) out.push_back(a);
    return out;
}

CandidateSet inertial_candidates(OddPrime l, const LocalWeight& a) {
    const int n = static_cast<int>(a.rank());
    CandidateSet out;
    for (const auto& sigma : all_permutations(n)) {
        const auto c = shifted_exponents(a, sigma);
        for (const auto& comp : all_compositions(n))
            out.insert(rho_bar_inertial(l, comp, c));
    }
    return out;
}

bool w_explicit_global_contains(OddPrime l,
                                const std::map<std::string, TameInertialType>& types,
                                const GlobalWeight& g) {
    if (!check_global_duality(g))
        throw std::invalid_argument("global weight violates conjugate duality");
    for (const auto& [label, family] : g.places) {
        const auto tit = types.find(label);
        if (tit == types.end())
            throw std::invalid_argument("no inertial type supplied for place: " + label);
        if (family.size() != 1)
            throw std::invalid_argument("inertial membership needs split-completely places (f = 1)");
        if (!w_explicit_I_contains(l, tit->second, family.front())) return false;
    }
    return true;
}

LabeledFullType::LabeledFullType(OddPrime l, std::vector<Piece> pieces)
    : l_(l), pieces_(std::move(pieces)) {
    for (auto& [orbit, label] : pieces_) {
        const auto dec = decompose_induced(l_, orbit.niveau, orbit.exponent);
        if (dec.size() != 1 || dec.front().niveau != orbit.niveau)
            throw std::invalid_argument("Frobenius label attached to a non-primitive orbit");
        orbit = dec.front();
    }
    std::sort(pieces_.begin(), pieces_.end());
}

TameInertialType LabeledFullType::inertial_restriction() const {
    std::vector<CharExponent> raw;
    raw.reserve(pieces_.size());
    for (const auto& [orbit, label] : pieces_) raw.push_back(orbit);
    return canonicalize(l_, raw);
}

} // namespace swcomb
