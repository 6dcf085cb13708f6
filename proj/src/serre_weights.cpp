#include "swcomb/serre_weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace swcomb {

namespace {

std::int64_t reduce_mod(std::int64_t e, std::int64_t m) {
    e %= m;
    return e < 0 ? e + m : e;
}

bool is_zero(const LocalWeight& w) {
    return std::all_of(w.entries().begin(), w.entries().end(),
                       [](std::int64_t x) { return x == 0; });
}

} // namespace

LocalWeight::LocalWeight(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("weight must have rank >= 1");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1])
            throw std::invalid_argument("weight entries must be decreasing");
}

bool is_serre_weight(OddPrime l, const LocalWeight& a) {
    for (std::size_t i = 0; i + 1 < a.rank(); ++i)
        if (a[i] - a[i + 1] > l.value() - 1) return false;
    return true;
}

bool is_serre_weight(OddPrime l, const WeightFamily& a) {
    return std::all_of(a.begin(), a.end(),
                       [&](const LocalWeight& w) { return is_serre_weight(l, w); });
}

bool equivalent(OddPrime l, const LocalWeight& a, const LocalWeight& b) {
    return equivalent(l, WeightFamily{a}, WeightFamily{b});
}

bool equivalent(OddPrime l, const WeightFamily& a, const WeightFamily& b) {
    if (a.empty() || a.size() != b.size())
        throw std::invalid_argument("weight families must be nonempty and of equal degree");
    const std::size_t n = a.front().rank();
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j].rank() != n || b[j].rank() != n)
            throw std::invalid_argument("weight families must have a uniform rank");

    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (a[j][i] - a[j][i + 1] != b[j][i] - b[j][i + 1]) return false;

    // triviality of x -> prod_j sigma_j(x)^(a_{j,n} - b_{j,n}) on F_{l^f}^x
    const std::int64_t mod = niveau_modulus(l, static_cast<int>(a.size()));
    std::int64_t acc = 0;
    std::int64_t pw = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const std::int64_t diff = reduce_mod(a[j][n - 1] - b[j][n - 1], mod);
        acc = (acc + static_cast<std::int64_t>(static_cast<__int128>(pw) * diff % mod)) % mod;
        pw = static_cast<std::int64_t>(static_cast<__int128>(pw) * l.value() % mod);
    }
    return acc == 0;
}

LocalWeight canonical_rep(OddPrime l, const LocalWeight& a) {
    const std::int64_t r = reduce_mod(a[a.rank() - 1], l.value() - 1);
    const std::int64_t shift = a[a.rank() - 1] - r;
    std::vector<std::int64_t> out;
    out.reserve(a.rank());
    for (std::int64_t x : a.entries()) out.push_back(x - shift);
    return LocalWeight(std::move(out));
}

LocalWeight canonical_rep(OddPrime l, const WeightFamily& a) {
    if (a.size() != 1)
        throw std::invalid_argument("canonical representatives exist only for f = 1");
    return canonical_rep(l, a.front());
}

std::vector<LocalWeight> enumerate_weights(OddPrime l, int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    std::vector<LocalWeight> out;
    // odometer over (a_n, d_{n-1}, ..., d_1), differences d_i = a_i - a_{i+1}
    std::vector<std::int64_t> digit(static_cast<std::size_t>(n), 0);
    const std::int64_t base_last = l.value() - 1; // a_n in [0, l-2]
    const std::int64_t base_diff = l.value();     // d_i in [0, l-1]
    for (;;) {
        std::vector<std::int64_t> entries(static_cast<std::size_t>(n));
        entries[static_cast<std::size_t>(n) - 1] = digit[0];
        for (int i = n - 2; i >= 0; --i)
            entries[static_cast<std::size_t>(i)] =
                entries[static_cast<std::size_t>(i) + 1] + digit[static_cast<std::size_t>(n - 1 - i)];
        out.emplace_back(std::move(entries));

        std::size_t pos = 0;
        while (pos < digit.size()) {
            const std::int64_t base = pos == 0 ? base_last : base_diff;
            if (++digit[pos] < base) break;
            digit[pos] = 0;
            ++pos;
        }
        if (pos == digit.size()) break;
    }
    return out;
}

std::vector<std::int64_t> hodge_type(const LocalWeight& a) {
    const std::int64_t n = static_cast<std::int64_t>(a.rank());
    std::vector<std::int64_t> out;
    out.reserve(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
        out.push_back(a[i] + n - 1 - static_cast<std::int64_t>(i));
    return out;
}

LocalWeight dual_weight(const LocalWeight& a) {
    std::vector<std::int64_t> out;
    out.reserve(a.rank());
    for (std::size_t i = a.rank(); i-- > 0;) out.push_back(-a[i]);
    return LocalWeight(std::move(out));
}

bool is_lift(const std::vector<LocalWeight>& lambda,
             const std::vector<std::size_t>& over,
             const WeightFamily& a) {
    if (lambda.size() != over.size())
        throw std::invalid_argument("every lifted component needs a residue embedding");
    for (std::size_t t = 0; t < over.size(); ++t)
        if (over[t] >= a.size())
            throw std::invalid_argument("residue embedding index out of range");

    const std::size_t n = a.empty() ? 0 : a.front().rank();
    for (const auto& w : lambda)
        if (w.rank() != n) throw std::invalid_argument("rank mismatch in lift");
    for (const auto& w : a)
        if (w.rank() != n) throw std::invalid_argument("rank mismatch in lift");

    for (std::size_t s = 0; s < a.size(); ++s) {
        std::size_t carriers = 0, nonzero = 0, count = 0;
        for (std::size_t t = 0; t < lambda.size(); ++t) {
            if (over[t] != s) continue;
            ++count;
            if (!is_zero(lambda[t])) {
                ++nonzero;
                if (lambda[t] == a[s]) ++carriers;
            }
        }
        if (count == 0)
            throw std::invalid_argument("residue embedding with no lift above it");
        if (is_zero(a[s])) {
            if (nonzero != 0) return false;
        } else {
            if (nonzero != 1 || carriers != 1) return false;
        }
    }
    return true;
}

bool check_global_duality(const GlobalWeight& g) {
    for (const auto& [label, family] : g.places) {
        const auto pit = g.conjugate.find(label);
        if (pit == g.conjugate.end())
            throw std::invalid_argument("unpaired place label: " + label);
        const auto wit = g.places.find(pit->second);
        if (wit == g.places.end())
            throw std::invalid_argument("missing conjugate place: " + pit->second);
        const auto back = g.conjugate.find(pit->second);
        if (back == g.conjugate.end() || back->second != label)
            throw std::invalid_argument("conjugation is not an involution at: " + label);

        const WeightFamily& partner = wit->second;
        if (family.size() != partner.size())
            throw std::invalid_argument("conjugate places with different residue degrees");
        for (std::size_t j = 0; j < family.size(); ++j) {
            const std::size_t n = family[j].rank();
            if (partner[j].rank() != n)
                throw std::invalid_argument("conjugate places with different ranks");
            for (std::size_t i = 0; i < n; ++i)
                if (family[j][i] + partner[j][n - 1 - i] != 0) return false;
        }
    }
    return true;
}

} // namespace swcomb
