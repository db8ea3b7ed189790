#include "opn/errors.hpp"
#include "opn/lp.hpp"

#include <algorithm>
#include <set>

namespace opn {

std::string_view to_string(Variant v) { return v == Variant::Standard ? "standard" : "no3"; }

Variant parse_variant(std::string_view text) {
    if (text == "standard") {
        return Variant::Standard;
    }
    if (text == "no3") {
        return Variant::No3;
    }
    throw InvalidInput("unknown variant '" + std::string(text) + "' (expected standard or no3)");
}

bool is_symbol(std::string_view name) {
    return std::find(kSymbols.begin(), kSymbols.end(), name) != kSymbols.end();
}

std::string_view to_string(RelationKind k) { return k == RelationKind::EQ ? "EQ" : "LE"; }

LinearRelation::LinearRelation(std::string id_, RelationKind kind_, std::map<std::string, Rational> terms_,
                               Rational constant_)
    : id(std::move(id_)), kind(kind_), constant(std::move(constant_)) {
    for (auto& [sym, coef] : terms_) {
        if (!is_symbol(sym)) {
            throw InvalidInput("relation " + id + " uses unregistered symbol '" + sym + "'");
        }
        if (coef != 0) {
            terms.emplace(sym, coef);
        }
    }
}

Rational LinearRelation::coefficient(std::string_view symbol) const {
    auto it = terms.find(std::string(symbol));
    return it == terms.end() ? Rational(0) : it->second;
}

ConstraintSystem::ConstraintSystem(Variant variant, std::vector<LinearRelation> relations)
    : variant_(variant), relations_(std::move(relations)) {
    std::set<std::string> seen;
    for (const auto& r : relations_) {
        if (!seen.insert(r.id).second) {
            throw InvalidInput("duplicate relation id " + r.id);
        }
    }
}

const LinearRelation* ConstraintSystem::find(std::string_view id) const {
    for (const auto& r : relations_) {
        if (r.id == id) {
            return &r;
        }
    }
    return nullptr;
}

namespace {

// Sums repeated symbols so that printed forms can be transcribed as written.
using Term = std::pair<const char*, Rational>;

LinearRelation rel(const char* id, RelationKind kind, std::initializer_list<Term> terms, long constant) {
    std::map<std::string, Rational> sum;
    for (const auto& [sym, coef] : terms) {
        sum[sym] += coef;
    }
    return LinearRelation(id, kind, std::move(sum), Rational(constant));
}

const Rational kHalf(1, 2);

} // namespace

ConstraintSystem build_system(Variant variant) {
    constexpr auto EQ = RelationKind::EQ;
    constexpr auto LE = RelationKind::LE;
    std::vector<LinearRelation> r;
    r.push_back(rel("5.1", EQ, {{"e0", 1}, {"f3", 1}, {"S", 2}, {"g4", 1}, {"Omega", -1}}, 0));
    if (variant == Variant::Standard) {
        r.push_back(rel("5.2", LE, {{"omega", 1}, {"S", -1}, {"T", -1}}, -2));
    } else {
        r.push_back(rel("5.2", EQ, {{"omega", 1}, {"S", -1}, {"T", -1}}, -1));
    }
    r.push_back(rel("5.3", LE, {{"T", 4}, {"g4", -1}}, 0));
    r.push_back(rel("5.4", LE, {{"e0", -1}}, 1));
    r.push_back(rel("5.5", EQ, {{"S", 1}, {"S1", -1}, {"S2", -1}, {"S3", -1}, {"S4p", -1}}, 0));
    r.push_back(rel("5.6", EQ, {{"S2", 1}, {"S21", -1}, {"S22", -1}}, 0));
    r.push_back(rel("5.7", EQ, {{"S3", 1}, {"S31", -1}, {"S32", -1}}, 0));
    r.push_back(rel("5.8", EQ, {{"S4p", 1}, {"S41", -1}, {"S42", -1}}, 0));
    r.push_back(rel("5.9", EQ, {{"S1", 1}, {"S1_S", -1}, {"S1_T", -1}, {"S1_p0", -1}}, 0));
    r.push_back(rel("5.10", EQ, {{"S31", 1}, {"S31_SS", -1}, {"S31_TT", -1}, {"S31_ST", -1}}, 0));
    r.push_back(rel("5.11", LE, {{"S31", 1}, {"S31_SnF_T", -1}, {"S31_S_TnF", -1}}, 0));
    r.push_back(rel("5.12", LE, {{"S32", 1}, {"S32_SnF", -1}, {"S32_TnF", -1}}, 0));
    r.push_back(rel("5.13", LE, {{"S1_p0", 1}}, -1));
    r.push_back(rel("5.14", LE, {{"S21", 1}, {"S31", 1}, {"S41", 1}, {"f3", -1}}, 0));
    r.push_back(rel("5.15", LE,
                    {{"S1", 1}, {"S22", 2}, {"S32", 3}, {"S42", 4}, {"S41", 1}, {"g4", -1}, {"e0", -1}, {"S21", -1}},
                    0));
    r.push_back(rel("5.16", LE, {{"S1", 1}, {"S2", 1}, {"T", -1}, {"S21", -1}, {"S31", -1}, {"S41", -1}}, -1));
    r.push_back(rel("5.17", LE,
                    {{"S1", 1},
                     {"S21", 1},
                     {"S22", kHalf},
                     {"S31", kHalf},
                     {"T", -1},
                     {"S21", -1},
                     {"S31", -1},
                     {"S41", -1}},
                    -1));
    r.push_back(rel("5.18", LE,
                    {{"S1_S", 2},
                     {"S31_SS", 1},
                     {"S31_SnF_T", 1},
                     {"S32_SnF", 1},
                     {"S21", -2},
                     {"S31", -2},
                     {"S41", -2}},
                    0));
    r.push_back(rel("5.19", LE,
                    {{"S1_T", 4}, {"S31_TT", 1}, {"S31_S_TnF", 1}, {"S32_TnF", 1}, {"g4", -1}, {"e0", -1}}, 0));
    if (variant == Variant::No3) {
        r.push_back(rel("5.21", EQ, {{"f3", 1}}, 0));
    }
    return ConstraintSystem(variant, std::move(r));
}

} // namespace opn
