#include "swcomb/serialization.hpp"

#include <sstream>
#include <stdexcept>

namespace swcomb {

namespace {

std::vector<CharExponent> pieces_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("\"pieces\" must be an array");
    std::vector<CharExponent> raw;
    for (const auto& p : j) {
        if (!p.contains("niveau") || !p.contains("exponent"))
            throw std::invalid_argument("type piece needs \"niveau\" and \"exponent\"");
        raw.push_back({p.at("niveau").get<int>(), p.at("exponent").get<std::int64_t>()});
    }
    return raw;
}

} // namespace

json type_to_json(const TameInertialType& t) {
    json pieces = json::array();
    for (const auto& p : t.pieces())
        pieces.push_back(json{{"niveau", p.niveau}, {"exponent", p.exponent}});
    return json{{"l", t.prime().value()}, {"pieces", std::move(pieces)}};
}

TameInertialType type_from_json(const json& j) {
    if (!j.contains("l")) throw std::invalid_argument("type record needs \"l\"");
    const OddPrime l(j.at("l").get<std::int64_t>());
    return canonicalize(l, pieces_from_json(j.at("pieces")));
}

TameInertialType type_from_json(const json& j, OddPrime l) {
    if (j.contains("l") && j.at("l").get<std::int64_t>() != l.value())
        throw std::invalid_argument("type record prime disagrees with context");
    if (!j.contains("pieces")) throw std::invalid_argument("type record needs \"pieces\"");
    return canonicalize(l, pieces_from_json(j.at("pieces")));
}

json weight_to_json(const LocalWeight& a) {
    return json{{"entries", a.entries()}};
}

LocalWeight weight_from_json(const json& j) {
    if (!j.contains("entries")) throw std::invalid_argument("weight record needs \"entries\"");
    return LocalWeight(j.at("entries").get<std::vector<std::int64_t>>());
}

LocalWeight parse_weight(const std::string& csv) {
    std::vector<std::int64_t> entries;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        // no whitespace: stoll would silently skip it
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            if (item.find_first_not_of("-0123456789") != std::string::npos)
                throw std::invalid_argument(item);
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed weight entry: \"" + item + "\"");
        }
        if (used != item.size())
            throw std::invalid_argument("malformed weight entry: \"" + item + "\"");
        entries.push_back(value);
    }
    if (entries.empty()) throw std::invalid_argument("empty weight string");
    return LocalWeight(std::move(entries));
}

std::string format_weight(const LocalWeight& a) {
    std::ostringstream out;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        if (i) out << ',';
        out << a[i];
    }
    return out.str();
}

std::string format_type(const TameInertialType& t) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& p : t.pieces()) {
        if (!first) out << ',';
        first = false;
        out << '(' << p.niveau << ',' << p.exponent << ')';
    }
    out << '}';
    return out.str();
}

json candidates_to_json(const CandidateSet& set) {
    json out = json::array();
    for (const auto& t : set) out.push_back(type_to_json(t));
    return out;
}

json report_to_json(const gl3::VerificationReport& r) {
    json skipped = json::array();
    for (const auto& s : r.skipped)
        skipped.push_back(json{{"l", s.l}, {"weight", s.weight.entries()}});

    json failures = json::array();
    for (const auto& f : r.failures) {
        json entry{{"l", f.l}, {"weight", f.weight.entries()}};
        if (f.witness) entry["witness"] = type_to_json(*f.witness);
        if (f.congruence_case) entry["case"] = *f.congruence_case;
        failures.push_back(std::move(entry));
    }

    return json{{"l_range", json::array({r.l_min, r.l_max})},
                {"examined", r.examined},
                {"generic", r.generic},
                {"skipped", std::move(skipped)},
                {"failures", std::move(failures)},
                {"pass", r.pass()}};
}

gl3::VerificationReport report_from_json(const json& j) {
    gl3::VerificationReport r;
    const auto& range = j.at("l_range");
    r.l_min = range.at(0).get<std::int64_t>();
    r.l_max = range.at(1).get<std::int64_t>();
    r.examined = j.at("examined").get<std::int64_t>();
    r.generic = j.at("generic").get<std::int64_t>();
    for (const auto& s : j.at("skipped"))
        r.skipped.push_back({s.at("l").get<std::int64_t>(),
                             LocalWeight(s.at("weight").get<std::vector<std::int64_t>>())});
    for (const auto& f : j.at("failures")) {
        gl3::VerificationFailure fail{f.at("l").get<std::int64_t>(),
                                      LocalWeight(f.at("weight").get<std::vector<std::int64_t>>()),
                                      std::nullopt, std::nullopt};
        if (f.contains("witness")) fail.witness = type_from_json(f.at("witness"));
        if (f.contains("case")) fail.congruence_case = f.at("case").get<int>();
        r.failures.push_back(std::move(fail));
    }
    if (j.at("pass").get<bool>() != r.pass())
        throw std::invalid_argument("report \"pass\" flag inconsistent with failure list");
    return r;
}

} // namespace swcomb
