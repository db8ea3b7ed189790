#include "opn/errors.hpp"
#include "opn/lp.hpp"
#include "opn/simplex.hpp"

namespace opn {

Rational Expansion::coefficient(std::string_view symbol) const {
    auto it = residual.find(std::string(symbol));
    return it == residual.end() ? Rational(0) : it->second;
}

Expansion expand(const ConstraintSystem& system, const Certificate& cert) {
    for (const auto& [id, c] : cert.multipliers) {
        if (system.find(id) == nullptr) {
            throw UnknownRelation("certificate references unknown relation " + id);
        }
    }
    Expansion out;
    for (const auto& r : system.relations()) {
        auto it = cert.multipliers.find(r.id);
        if (it == cert.multipliers.end() || it->second == 0) {
            continue;
        }
        const Rational& c = it->second;
        for (const auto& [sym, coef] : r.terms) {
            out.residual[sym] += c * coef;
        }
        out.constant += c * r.constant;
    }
    std::erase_if(out.residual, [](const auto& kv) { return kv.second == 0; });
    return out;
}

BoundResult check_certificate(const ConstraintSystem& system, const Certificate& cert) {
    if (cert.variant != system.variant()) {
        throw InvalidCertificate("certificate variant " + std::string(to_string(cert.variant)) +
                                 " does not match system variant " + std::string(to_string(system.variant())));
    }
    const Expansion e = expand(system, cert);
    auto mult = [&](const std::string& id) {
        auto it = cert.multipliers.find(id);
        return it == cert.multipliers.end() ? Rational(0) : it->second;
    };
    if (mult("5.1") != 1) {
        throw InvalidCertificate("multiplier of 5.1 must be 1, got " + to_string(mult("5.1")));
    }
    for (const auto& r : system.relations()) {
        if (r.kind == RelationKind::LE && mult(r.id) < 0) {
            throw InvalidCertificate("negative multiplier on inequality " + r.id);
        }
    }
    if (e.coefficient("Omega") != -1) {
        throw InvalidCertificate("residual on Omega must be -1, got " + to_string(e.coefficient("Omega")));
    }
    for (std::string_view sym : kSymbols) {
        if (sym == "Omega" || sym == "omega") {
            continue;
        }
        if (e.coefficient(sym) < 0) {
            throw InvalidCertificate("negative residual on " + std::string(sym));
        }
    }
    return {e.coefficient("omega"), e.constant, e.residual, e.constant};
}

namespace {

// One LP column per LE multiplier, two (u - v) per EQ multiplier; 5.1 is fixed at 1.
struct Columns {
    std::vector<const LinearRelation*> rel;
    std::vector<int> sign;
};

Rational dot_column(const Columns& cols, std::size_t j, std::string_view sym) {
    return cols.sign[j] * cols.rel[j]->coefficient(sym);
}

} // namespace

Optimum optimize(const ConstraintSystem& system) {
    const LinearRelation* fixed = system.find("5.1");
    if (fixed == nullptr) {
        throw InvalidInput("system has no relation 5.1");
    }
    Columns cols;
    for (const auto& r : system.relations()) {
        if (&r == fixed) {
            continue;
        }
        cols.rel.push_back(&r);
        cols.sign.push_back(1);
        if (r.kind == RelationKind::EQ) {
            cols.rel.push_back(&r);
            cols.sign.push_back(-1);
        }
    }
    const std::size_t n = cols.rel.size();

    LpProblem lp;
    lp.num_vars = n;
    // residual(sym) = fixed(sym) + sum_j col_j(sym) x_j >= 0
    for (std::string_view sym : kSymbols) {
        if (sym == "Omega" || sym == "omega") {
            continue;
        }
        LpConstraint c{std::vector<Rational>(n), Sense::GE, -fixed->coefficient(sym)};
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
            c.coeffs[j] = dot_column(cols, j, sym);
            any = any || c.coeffs[j] != 0;
        }
        if (any || c.rhs > 0) {
            lp.constraints.push_back(std::move(c));
        }
    }
    std::vector<Rational> omega_row(n);
    std::vector<Rational> constant_row(n);
    for (std::size_t j = 0; j < n; ++j) {
        omega_row[j] = dot_column(cols, j, "omega");
        constant_row[j] = cols.sign[j] * cols.rel[j]->constant;
    }

    lp.objective = omega_row;
    const LpSolution first = simplex_maximize(lp);
    if (first.status != LpStatus::Optimal) {
        throw LpUnsolvable(first.status == LpStatus::Unbounded ? "omega coefficient is unbounded"
                                                               : "no feasible certificate");
    }
    const Rational a_star = fixed->coefficient("omega") + first.value;

    lp.constraints.push_back({omega_row, Sense::EQ, first.value});
    lp.objective = constant_row;
    const LpSolution second = simplex_maximize(lp);
    if (second.status != LpStatus::Optimal) {
        throw LpUnsolvable(second.status == LpStatus::Unbounded ? "constant term is unbounded"
                                                                : "second phase infeasible");
    }

    Optimum out;
    out.certificate.variant = system.variant();
    for (const auto& r : system.relations()) {
        out.certificate.multipliers[r.id] = 0;
    }
    out.certificate.multipliers[fixed->id] = 1;
    for (std::size_t j = 0; j < n; ++j) {
        out.certificate.multipliers[cols.rel[j]->id] += cols.sign[j] * second.x[j];
    }
    out.result = check_certificate(system, out.certificate);
    out.phase1_a = a_star;
    return out;
}

} // namespace opn
