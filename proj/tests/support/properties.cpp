#include "properties.hpp"

#include "opn/errors.hpp"
#include "opn/polynomial.hpp"
#include "opn/simplex.hpp"

#include <map>
#include <optional>
#include <random>

namespace opn::testing {

std::vector<unsigned> cyclotomic_product_failures(unsigned max_n) {
    std::vector<unsigned> bad;
    for (unsigned n = 1; n <= max_n; ++n) {
        IntPoly product{1};
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d == 0) {
                product = product * cyclotomic(d);
            }
        }
        if (!(product == IntPoly::monomial(n) - IntPoly{1})) {
            bad.push_back(n);
        }
    }
    return bad;
}

Certificate printed_table2(const Rational& c10) {
    Certificate c;
    c.variant = Variant::Standard;
    const long num[] = {37, 99, 28, 28, 25, 20, 25, 25, 4, 1, 1, 1, 4, 37, 8, 5, 8, 2, 1};
    for (int i = 0; i < 19; ++i) {
        c.multipliers["5." + std::to_string(i + 1)] = make_rational(num[i], 37);
    }
    c.multipliers["5.10"] = c10;
    return c;
}

namespace {

using Point = std::map<std::string, long>;

bool satisfies(const LinearRelation& r, const Point& x) {
    Rational v = r.constant;
    for (const auto& [sym, c] : r.terms) {
        v += c * x.at(sym);
    }
    return r.kind == RelationKind::EQ ? v == 0 : v <= 0;
}

// Leaves drawn at random, aggregates filled in from the splitting equalities,
// slack variables padded so most draws are feasible. Every draw is still
// checked against the full system before use.
Point draw(Variant variant, std::mt19937_64& rng) {
    auto u = [&](long hi) { return std::uniform_int_distribution<long>(0, hi)(rng); };
    Point x;
    const bool no3 = variant == Variant::No3;
    x["S1_S"] = u(3);
    x["S1_T"] = u(3);
    x["S1_p0"] = u(1);
    x["S1"] = x["S1_S"] + x["S1_T"] + x["S1_p0"];
    x["S21"] = no3 ? 0 : u(4);
    x["S22"] = u(4);
    x["S2"] = x["S21"] + x["S22"];
    x["S31_SS"] = no3 ? 0 : u(3);
    x["S31_TT"] = no3 ? 0 : u(3);
    x["S31_ST"] = no3 ? 0 : u(3);
    x["S31"] = x["S31_SS"] + x["S31_TT"] + x["S31_ST"];
    x["S32"] = u(4);
    x["S3"] = x["S31"] + x["S32"];
    x["S41"] = no3 ? 0 : u(3);
    x["S42"] = u(3);
    x["S4p"] = x["S41"] + x["S42"];
    x["S"] = x["S1"] + x["S2"] + x["S3"] + x["S4p"];
    const long snf = u(x["S31"] + 1);
    x["S31_SnF_T"] = snf;
    x["S31_S_TnF"] = std::max(0L, x["S31"] - snf) + u(1);
    const long s32 = u(x["S32"] + 1);
    x["S32_SnF"] = s32;
    x["S32_TnF"] = std::max(0L, x["S32"] - s32) + u(1);
    x["T"] = u(12);
    x["e0"] = 1 + u(3);
    x["f3"] = no3 ? 0 : x["S21"] + x["S31"] + x["S41"] + u(2);
    const long need15 = x["S1"] + 2 * x["S22"] + 3 * x["S32"] + 4 * x["S42"] + x["S41"] - x["S21"];
    const long need19 = 4 * x["S1_T"] + x["S31_TT"] + x["S31_S_TnF"] + x["S32_TnF"];
    x["g4"] = std::max({4 * x["T"], need15 - x["e0"], need19 - x["e0"], 0L}) + u(3);
    const long top = (no3 ? 1 : 2) + x["S"] + x["T"];
    x["omega"] = no3 ? top : u(top);
    x["Omega"] = x["e0"] + x["f3"] + 2 * x["S"] + x["g4"];
    return x;
}

// Gaussian elimination over Q; nullopt if singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) {
                continue;
            }
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) {
                a[r][k] -= f * a[col][k];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = b[i] / a[i][i];
    }
    return x;
}

// Best objective over all basic feasible points, or nullopt if none.
std::optional<Rational> vertex_optimum(const LpProblem& p) {
    const std::size_t n = p.num_vars;
    // Hyperplanes: each constraint, then x_i = 0.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& c : p.constraints) {
        rows.push_back(c.coeffs);
        rhs.push_back(c.rhs);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = 1;
        rows.push_back(e);
        rhs.push_back(0);
    }
    auto feasible = [&](const std::vector<Rational>& x) {
        for (const Rational& v : x) {
            if (v < 0) {
                return false;
            }
        }
        for (const auto& c : p.constraints) {
            Rational lhs = 0;
            for (std::size_t i = 0; i < n; ++i) {
                lhs += c.coeffs[i] * x[i];
            }
            if ((c.sense == Sense::LE && lhs > c.rhs) || (c.sense == Sense::GE && lhs < c.rhs) ||
                (c.sense == Sense::EQ && lhs != c.rhs)) {
                return false;
            }
        }
        return true;
    };
    std::optional<Rational> best;
    const std::size_t total = rows.size();
    std::vector<std::size_t> pick(n);
    // Enumerate n-subsets of hyperplanes.
    std::vector<bool> mask(total, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), true);
    do {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (std::size_t i = 0; i < total; ++i) {
            if (mask[i]) {
                a.push_back(rows[i]);
                b.push_back(rhs[i]);
            }
        }
        const auto x = solve(a, b);
        if (x && feasible(*x)) {
            Rational v = 0;
            for (std::size_t i = 0; i < n; ++i) {
                v += p.objective[i] * (*x)[i];
            }
            if (!best || v > *best) {
                best = v;
            }
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return best;
}

} // namespace

SoundnessReport certificate_soundness(Variant variant, std::size_t samples, std::uint64_t seed) {
    const ConstraintSystem system = build_system(variant);
    std::vector<Certificate> candidates{optimize(system).certificate, Certificate{variant, {{"5.1", Rational(1)}}}};
    if (variant == Variant::Standard) {
        candidates.push_back(printed_table2(0));
        candidates.push_back(printed_table2(make_rational(1, 37)));  // rejected; must not be used
    }
    std::vector<BoundResult> bounds;
    for (const auto& c : candidates) {
        try {
            bounds.push_back(check_certificate(system, c));
        } catch (const InvalidCertificate&) {
        }
    }
    SoundnessReport report;
    report.certificates = bounds.size();
    std::mt19937_64 rng(seed);
    while (report.samples < samples) {
        const Point x = draw(variant, rng);
        bool ok = true;
        for (const auto& r : system.relations()) {
            ok = ok && satisfies(r, x);
        }
        if (!ok) {
            ++report.rejected;
            continue;
        }
        ++report.samples;
        for (const auto& b : bounds) {
            if (b.a * x.at("omega") + b.b > x.at("Omega")) {
                ++report.violations;
            }
        }
    }
    return report;
}

DualityReport simplex_vs_vertices(std::size_t problems, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto u = [&](long lo, long hi) { return Rational(std::uniform_int_distribution<long>(lo, hi)(rng)); };
    DualityReport report;
    while (report.problems < problems) {
        LpProblem p;
        p.num_vars = static_cast<std::size_t>(u(1, 6).get_num().get_si());
        const std::size_t n = p.num_vars;
        for (std::size_t i = 0; i < n; ++i) {
            p.objective.push_back(u(-3, 5));
        }
        const long m = u(1, 3).get_num().get_si();
        for (long k = 0; k < m; ++k) {
            LpConstraint c;
            for (std::size_t i = 0; i < n; ++i) {
                c.coeffs.push_back(u(-3, 5));
            }
            const long kind = u(0, 5).get_num().get_si();
            c.sense = kind == 0 ? Sense::EQ : kind == 1 ? Sense::GE : Sense::LE;
            c.rhs = u(-2, 10);
            p.constraints.push_back(std::move(c));
        }
        // Box keeps every instance bounded.
        for (std::size_t i = 0; i < n; ++i) {
            LpConstraint c{std::vector<Rational>(n, Rational(0)), Sense::LE, u(1, 8)};
            c.coeffs[i] = 1;
            p.constraints.push_back(std::move(c));
        }
        ++report.problems;
        const LpSolution s = simplex_maximize(p);
        const auto v = vertex_optimum(p);
        if (!v) {
            report.infeasible += s.status == LpStatus::Infeasible;
            report.disagreements += s.status != LpStatus::Infeasible;
            continue;
        }
        if (s.status != LpStatus::Optimal || s.value != *v) {
            ++report.disagreements;
            continue;
        }
        ++report.optimal;
    }
    return report;
}

} // namespace opn::testing
