#include "opn/simplex.hpp"

#include "opn/errors.hpp"

namespace opn {

namespace {

class Tableau {
public:
    // rows_[i] has cols_ entries plus the right-hand side at the end.
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> basis;
    std::vector<Rational> cost;  // reduced-cost row; cost.back() is the objective value
    std::size_t cols = 0;

    void pivot(std::size_t r, std::size_t c) {
        auto& pr = rows[r];
        const Rational inv = 1 / pr[c];
        for (auto& v : pr) {
            v *= inv;
        }
        auto eliminate = [&](std::vector<Rational>& row) {
            if (row[c] == 0) {
                return;
            }
            const Rational f = row[c];
            for (std::size_t k = 0; k <= cols; ++k) {
                if (pr[k] != 0) {
                    row[k] -= f * pr[k];
                }
            }
        };
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r) {
                eliminate(rows[i]);
            }
        }
        eliminate(cost);
        basis[r] = c;
    }

    // Installs "maximize c . x" as the cost row, expressed in the current basis.
    void set_objective(const std::vector<Rational>& c) {
        cost.assign(cols + 1, Rational(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
            cost[j] = -c[j];
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational f = cost[basis[i]];
            if (f != 0) {
                for (std::size_t k = 0; k <= cols; ++k) {
                    cost[k] -= f * rows[i][k];
                }
            }
        }
    }

    // Returns false when unbounded. Columns >= limit never enter.
    bool run(std::size_t limit) {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == limit) {
                return true;
            }
            std::size_t leave = rows.size();
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) {
                    continue;
                }
                const Rational ratio = rows[i][cols] / rows[i][enter];
                if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size()) {
                return false;
            }
            pivot(leave, enter);
        }
    }
};

} // namespace

LpSolution simplex_maximize(const LpProblem& problem) {
    const std::size_t n = problem.num_vars;
    if (problem.objective.size() != n) {
        throw InvalidInput("objective length does not match variable count");
    }
    for (const auto& c : problem.constraints) {
        if (c.coeffs.size() != n) {
            throw InvalidInput("constraint length does not match variable count");
        }
    }

    // Normalize to nonnegative right-hand sides, then count slack and artificial columns.
    std::vector<LpConstraint> cons = problem.constraints;
    std::size_t slacks = 0, artificials = 0;
    for (auto& c : cons) {
        if (c.rhs < 0) {
            for (auto& v : c.coeffs) {
                v = -v;
            }
            c.rhs = -c.rhs;
            if (c.sense != Sense::EQ) {
                c.sense = c.sense == Sense::LE ? Sense::GE : Sense::LE;
            }
        }
        slacks += c.sense != Sense::EQ;
        artificials += c.sense != Sense::LE;
    }

    Tableau t;
    const std::size_t art_begin = n + slacks;
    t.cols = art_begin + artificials;
    std::size_t next_slack = n, next_art = art_begin;
    for (const auto& c : cons) {
        std::vector<Rational> row(t.cols + 1, Rational(0));
        std::copy(c.coeffs.begin(), c.coeffs.end(), row.begin());
        row[t.cols] = c.rhs;
        if (c.sense == Sense::LE) {
            row[next_slack] = 1;
            t.basis.push_back(next_slack++);
        } else {
            if (c.sense == Sense::GE) {
                row[next_slack++] = -1;
            }
            row[next_art] = 1;
            t.basis.push_back(next_art++);
        }
        t.rows.push_back(std::move(row));
    }

    // Phase 1: maximize minus the sum of artificials.
    if (artificials > 0) {
        std::vector<Rational> phase1(t.cols, Rational(0));
        for (std::size_t j = art_begin; j < t.cols; ++j) {
            phase1[j] = -1;
        }
        t.set_objective(phase1);
        t.run(t.cols);
        if (t.cost[t.cols] < 0) {
            return {LpStatus::Infeasible, Rational(0), {}};
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < art_begin) {
                ++i;
                continue;
            }
            std::size_t col = art_begin;
            for (std::size_t j = 0; j < art_begin; ++j) {
                if (t.rows[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col == art_begin) {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            t.pivot(i, col);
            ++i;
        }
    }

    // Phase 2 over structural and slack columns only.
    t.set_objective(problem.objective);
    if (!t.run(art_begin)) {
        return {LpStatus::Unbounded, Rational(0), {}};
    }
    LpSolution out{LpStatus::Optimal, t.cost[t.cols], std::vector<Rational>(n, Rational(0))};
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.basis[i] < n) {
            out.x[t.basis[i]] = t.rows[i][t.cols];
        }
    }
    return out;
}

} // namespace opn
