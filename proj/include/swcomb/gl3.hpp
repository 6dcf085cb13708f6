#ifndef SWCOMB_GL3_HPP
#define SWCOMB_GL3_HPP

#include "swcomb/explicit_weights.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

/*
 * The n = 3 theory.  The dual Weyl module of a weight a either stays
 * irreducible or picks up one extra Jordan-Hoelder factor F_b with
 * b = (a_3 + l - 2, a_2, a_1 - l + 2); in the latter regime the companion b
 * falls into the Fontaine-Laffaille range, so a modular weight forces the
 * inertial type into the candidate set of b as well as of a.  Weight
 * elimination rests on the two candidate sets being disjoint for generic a;
 * the verifier here checks that exhaustively, both as raw candidate-set
 * intersections and as the twelve niveau-3 congruences modulo l^3 - 1 to
 * which the comparison reduces.
 */

namespace swcomb {
namespace gl3 {

// the two-factor regime: l-1 <= a_1-a_3 and a_1-a_2, a_2-a_3 <= l-2
bool in_two_factor_region(OddPrime l, const LocalWeight& a);

// Non-generic means one of:
//   a_1-a_3 = l-1 with a_1-a_2, a_2-a_3 <= l-2;
//   a_2-a_3 = l-2 with a_1-a_2 >= 2;
//   a_1-a_2 = l-2 with a_2-a_3 >= 2.
// In refined mode the test is relaxed by the niveau of rho-bar: at niveau 1
// only the first configuration matters, at niveau 3 nothing does, and at
// niveau 2 the full test applies (a missing hint keeps the full test).
bool is_generic(OddPrime l, const LocalWeight& a, bool refined = false,
                std::optional<int> niveau_hint = std::nullopt);

// {a} or {a, companion(l, a)}; returned factors are valid Serre weights
std::vector<LocalWeight> jh_factors(OddPrime l, const LocalWeight& a);

// b = (a_3 + l - 2, a_2, a_1 - l + 2); requires the two-factor regime.
// Satisfies b_1 - b_3 = 2l - 4 - (a_1 - a_3) <= l - 3.
LocalWeight companion(OddPrime l, const LocalWeight& a);

// The candidate set generated from the closed-form weight list: the special
// niveau-1 shape when a_1 - a_3 = l - 1, and for every permutation x, y, z
// of -(a_1+2), -(a_2+1), -a_3 the three displayed shapes, subject to
// (l+1) not dividing ly + z resp. (l^2+l+1) not dividing x + ly + l^2 z.
// Must coincide with inertial_candidates(l, a); the equality is the machine
// check of the explicit weight list.
CandidateSet closed_form_candidates(OddPrime l, const LocalWeight& a);

// The eight auxiliary non-congruences feeding the case analysis.  They all
// hold whenever a lies in the two-factor region (inequalities
// 1 <= a_1-a_2, a_2-a_3 <= l-2 and l-1 <= a_1-a_3 <= 2l-4) and is generic;
// the facts are computed regardless and the flag records the precondition.
struct CongruenceFacts {
    bool preconditions_hold = false;
    std::array<bool, 8> holds{};
    bool all() const;
};
CongruenceFacts generic_congruence_facts(OddPrime l, const LocalWeight& a);

// One congruence of the elimination argument: niveau-3 cases 1..12, or one
// of the labeled auxiliary facts C3..C8.
class CaseId {
public:
    static CaseId niveau3(int k); // 1..12
    static CaseId fact(int k);    // 3..8
    static CaseId parse(const std::string& s); // "7" or "C4" / "c4"

    bool is_fact() const noexcept { return fact_; }
    int index() const noexcept { return index_; }
    std::string str() const;

private:
    CaseId(bool fact, int index) : fact_(fact), index_(index) {}
    bool fact_;
    int index_;
};

// True when the case's original congruence (the raw identity modulo l^3 - 1
// between the two exponent expressions) has no solution in the two-factor
// region; with check_simplification set, additionally demands that the
// closed-form simplification agrees with the raw congruence at every tuple
// of the region.  The simplifications are verified, never trusted: a
// transcription slip is exactly what this is for.  For C5..C8 the region is
// restricted to generic weights, matching how those facts are derived.
bool verify_congruence_case(OddPrime l, CaseId id, bool check_simplification = false);

struct WeightCaseOutcome {
    enum class Kind { not_applicable, disjoint, intersects };
    Kind kind = Kind::not_applicable;
    std::optional<TameInertialType> witness; // set iff kind == intersects
};

// Compares the candidate sets of a and of its companion.  Set disjointness
// subsumes the niveau-by-niveau case analysis and is robust to its
// bookkeeping; the niveau-wise facts stay available for diagnostics.
WeightCaseOutcome verify_weight_case(OddPrime l, const LocalWeight& a);

struct SkippedWeight {
    std::int64_t l;
    LocalWeight weight;
};

struct VerificationFailure {
    std::int64_t l;
    LocalWeight weight;
    std::optional<TameInertialType> witness; // intersection failure
    std::optional<int> congruence_case;      // niveau-3 case failure
};

struct VerificationReport {
    std::int64_t l_min = 0;
    std::int64_t l_max = 0;
    bool refined = false;
    std::int64_t examined = 0; // region weights scanned, a_3 in [0, l-2]
    std::int64_t generic = 0;  // of those, fully generic
    std::vector<SkippedWeight> skipped;
    std::vector<VerificationFailure> failures;
    std::int64_t wall_time_ms = 0;
    bool pass() const noexcept { return failures.empty(); }
};

// Exhaustive check over every prime in [l_min, l_max] and every canonical
// weight of the two-factor region: generic weights must have disjoint
// candidate sets, non-generic ones are recorded as skipped, and all twelve
// congruence cases are re-verified with their simplifications.  In refined
// mode every weight is checked against each intersecting type under the
// per-niveau genericity of is_generic.  Deterministic output regardless of
// the number of worker threads (0 = hardware concurrency).
VerificationReport verify_range(std::int64_t l_min, std::int64_t l_max,
                                bool refined = false, unsigned threads = 0);

// odd primes in [lo, hi] by trial division; the target ranges are tiny
std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi);

} // namespace gl3
} // namespace swcomb

#endif
