#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "swcomb/explicit_weights.hpp"

#include <stdexcept>

using namespace swcomb;

namespace {
LocalWeight w(std::vector<std::int64_t> e) { return LocalWeight(std::move(e)); }
TameInertialType mk(std::int64_t l, std::vector<CharExponent> raw) {
    return canonicalize(OddPrime(l), raw);
}
} // namespace

TEST_CASE("compositions") {
    CHECK(all_compositions(1).size() == 1);
    CHECK(all_compositions(3).size() == 4);
    CHECK(all_compositions(5).size() == 16);
    for (const auto& c : all_compositions(3)) CHECK(c.total() == 3);
    CHECK_THROWS_AS(Composition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Composition(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("shifted_exponents follows c_j = a_sigma(j) + n - sigma(j)") {
    const auto a = w({7, 3, 0});
    CHECK(shifted_exponents(a, {0, 1, 2}) == ShiftedExponentTuple{9, 4, 0});
    // swap of first and third slots permutes the Hodge-type entries
    CHECK(shifted_exponents(a, {2, 1, 0}) == ShiftedExponentTuple{0, 4, 9});
    CHECK(shifted_exponents(w({5}), {0}) == ShiftedExponentTuple{5});
    CHECK_THROWS_AS(shifted_exponents(a, {0, 1}), std::invalid_argument);
}

TEST_CASE("rho_bar_inertial") {
    CHECK(rho_bar_inertial(OddPrime(7), Composition({1, 1, 1}), {9, 4, 0}) ==
          mk(7, {{1, 3}, {1, 2}, {1, 0}}));
    CHECK(rho_bar_inertial(OddPrime(5), Composition({1, 2}), {3, 6, 0}) ==
          mk(5, {{1, 1}, {1, 3}, {1, 3}}));
    CHECK(rho_bar_inertial(OddPrime(5), Composition({3}), {0, 0, 0}) ==
          mk(5, {{1, 0}, {1, 0}, {1, 0}}));
    CHECK(rho_bar_inertial(OddPrime(7), Composition({3}), {9, 4, 0}) == mk(7, {{3, 83}}));
    CHECK_THROWS_AS(rho_bar_inertial(OddPrime(5), Composition({2}), {1, 2, 3}),
                    std::invalid_argument);
}

TEST_CASE("w_explicit_I membership") {
    const OddPrime l7(7);
    const auto tau = rho_bar_inertial(l7, Composition({3}),
                                      shifted_exponents(w({7, 3, 0}), {0, 1, 2}));
    CHECK(tau == mk(7, {{3, 83}}));
    CHECK(w_explicit_I_contains(l7, tau, w({7, 3, 0})));

    const OddPrime l5(5);
    CHECK_FALSE(w_explicit_I_contains(l5, mk(5, {{3, 1}}), w({0, 0, 0})));
    CHECK(w_explicit_I_contains(l5, mk(5, {{1, 1}, {1, 3}, {1, 3}}), w({4, 2, 0})));

    CHECK_THROWS_AS(w_explicit_I_contains(l5, mk(5, {{1, 0}}), w({1, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(w_explicit_I_contains(l5, mk(7, {{1, 0}}), w({1})),
                    std::invalid_argument);
}

TEST_CASE("w_explicit_I enumeration") {
    const OddPrime l5(5);
    CHECK(w_explicit_I(l5, 1, mk(5, {{1, 2}})) == std::vector<LocalWeight>{w({2})});

    const auto over_31 = w_explicit_I(l5, 3, mk(5, {{3, 1}}));
    for (const auto& a : over_31) CHECK(a != w({0, 0, 0}));

    const OddPrime l7(7);
    const auto over_niv1 = w_explicit_I(l7, 3, mk(7, {{1, 3}, {1, 2}, {1, 0}}));
    bool found = false;
    for (const auto& a : over_niv1) found = found || a == w({7, 3, 0});
    CHECK(found); // (7,3,0) is its own canonical representative
}

TEST_CASE("inertial_candidates") {
    const OddPrime l7(7);
    const auto c7 = inertial_candidates(l7, w({7, 3, 0}));
    CHECK(c7.count(mk(7, {{1, 3}, {1, 2}, {1, 0}})) == 1);
    CHECK(c7.count(mk(7, {{3, 83}})) == 1);

    const OddPrime l5(5);
    const auto c5 = inertial_candidates(l5, w({4, 2, 0}));
    CHECK(c5.count(mk(5, {{1, 1}, {1, 3}, {1, 3}})) == 1);

    CHECK(inertial_candidates(l5, w({2})) == CandidateSet{mk(5, {{1, 2}})});

    // at most |S_n| * 2^(n-1) members, and every member round-trips
    for (const auto& a : enumerate_weights(l5, 3)) {
        const auto set = inertial_candidates(l5, a);
        CHECK(set.size() <= 24);
        for (const auto& t : set) CHECK(w_explicit_I_contains(l5, t, a));
    }
}

TEST_CASE("membership is equivalence-invariant") {
    for (std::int64_t lv : {3, 5, 7}) {
        const OddPrime l(lv);
        for (const auto& a : enumerate_weights(l, 3)) {
            std::vector<std::int64_t> shifted_entries;
            for (auto x : a.entries()) shifted_entries.push_back(x + (lv - 1));
            const LocalWeight b(shifted_entries);
            REQUIRE(equivalent(l, a, b));
            CHECK(inertial_candidates(l, a) == inertial_candidates(l, b));
        }
    }
}

TEST_CASE("duality compatibility of the candidate sets") {
    // tau in candidates(a)  <=>  twist(dual(tau), 1-n) in candidates(dual a)
    for (std::int64_t lv : {3, 5}) {
        const OddPrime l(lv);
        for (int n = 1; n <= 3; ++n) {
            for (const auto& a : enumerate_weights(l, n)) {
                const auto expect = inertial_candidates(l, dual_weight(a));
                CandidateSet built;
                for (const auto& t : inertial_candidates(l, a))
                    built.insert(twist_cyclotomic(dual_type(t), 1 - n));
                CHECK(built == expect);
            }
        }
    }
}

TEST_CASE("w_explicit_global_contains") {
    const OddPrime l(7);
    const auto a = w({7, 3, 0});
    const auto ad = dual_weight(a);
    const auto tau = mk(7, {{3, 83}});
    const auto tau_c = twist_cyclotomic(dual_type(tau), -2);

    GlobalWeight g;
    g.places["w"] = {a};
    g.places["wc"] = {ad};
    g.conjugate = {{"w", "wc"}, {"wc", "w"}};

    std::map<std::string, TameInertialType> types{{"w", tau}, {"wc", tau_c}};
    CHECK(w_explicit_global_contains(l, types, g));

    // one failing place kills the conjunction
    std::map<std::string, TameInertialType> wrong{{"w", tau},
                                                  {"wc", mk(7, {{3, 1}})}};
    CHECK_FALSE(w_explicit_global_contains(l, wrong, g));

    GlobalWeight empty;
    CHECK(w_explicit_global_contains(l, {}, empty));

    std::map<std::string, TameInertialType> missing{{"w", tau}};
    CHECK_THROWS_AS(w_explicit_global_contains(l, missing, g), std::invalid_argument);

    GlobalWeight broken;
    broken.places["w"] = {w({1, 0, 0})};
    broken.places["wc"] = {w({1, 0, 0})};
    broken.conjugate = {{"w", "wc"}, {"wc", "w"}};
    CHECK_THROWS_AS(w_explicit_global_contains(l, types, broken), std::invalid_argument);
}

TEST_CASE("labeled full types") {
    const OddPrime l(5);
    const LabeledFullType t1(l, {{{2, 7}, "u"}, {{1, 0}, "v"}});
    const LabeledFullType t2(l, {{{1, 0}, "v"}, {{2, 11}, "u"}}); // 11 conjugate to 7
    CHECK(t1 == t2);

    const LabeledFullType t3(l, {{{1, 0}, "w"}, {{2, 7}, "u"}});
    CHECK_FALSE(t1 == t3); // labels compare by equality only

    CHECK(t1.inertial_restriction() == mk(5, {{1, 0}, {2, 7}}));

    // a label on a reducible summand has no meaning
    CHECK_THROWS_AS(LabeledFullType(l, {{{2, 6}, "u"}}), std::invalid_argument);
}
