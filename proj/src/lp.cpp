#include "coopgame/lp.hpp"

#include <cstddef>

#include "coopgame/errors.hpp"

namespace coopgame {

namespace {

// Dense simplex tableau kept in canonical form: for every row i the column
// basis[i] is a unit column, including in the cost row.
struct Tableau {
    std::vector<std::vector<Rational>> a; // rows x cols
    std::vector<Rational> b;              // rhs, kept >= 0
    std::vector<int> basis;               // basic column per row
    std::vector<Rational> cost;           // reduced costs
    Rational z;                           // objective value at current basis

    std::size_t rows() const { return a.size(); }
    std::size_t cols() const { return cost.size(); }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = Rational(1) / a[r][c];
        for (auto& entry : a[r]) entry *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational factor = a[i][c];
            for (std::size_t j = 0; j < cols(); ++j) a[i][j] -= factor * a[r][j];
            b[i] -= factor * b[r];
        }
        if (cost[c] != 0) {
            const Rational factor = cost[c];
            for (std::size_t j = 0; j < cols(); ++j) cost[j] -= factor * a[r][j];
            z += factor * b[r];
        }
        basis[r] = static_cast<int>(c);
    }

    // Minimizes with Bland's rule: smallest negative-cost column enters,
    // ratio ties broken by smallest basic column. Returns false on
    // unboundedness. Terminates without cycling.
    bool run(std::size_t eligible_cols) {
        for (;;) {
            std::size_t entering = eligible_cols;
            for (std::size_t j = 0; j < eligible_cols; ++j) {
                if (cost[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == eligible_cols) return true; // optimal

            bool found = false;
            std::size_t leave_row = 0;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (a[i][entering] <= 0) continue;
                Rational ratio = b[i] / a[i][entering];
                if (!found || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave_row])) {
                    found = true;
                    leave_row = i;
                    best_ratio = ratio;
                }
            }
            if (!found) return false; // unbounded
            pivot(leave_row, entering);
        }
    }
};

} // namespace

LPResult solve_lp(const LPProblem& p) {
    const std::size_t n = p.variable_count();
    if (p.lower_bounds.size() != n)
        throw MalformedProblemError("lower_bounds size does not match variable count");
    for (const LPConstraint& c : p.constraints)
        if (c.coeffs.size() != n)
            throw MalformedProblemError("constraint coefficient size does not match variables");

    // Shift bounded variables to x_j = l_j + u_j with u_j >= 0; split free
    // variables into u+ - u-.
    struct VarMap {
        std::size_t col_pos;
        std::size_t col_neg; // == col_pos when the variable is bounded
        Rational offset;
    };
    std::vector<VarMap> var_map(n);
    std::size_t n_struct = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (p.lower_bounds[j].has_value()) {
            var_map[j] = {n_struct, n_struct, *p.lower_bounds[j]};
            n_struct += 1;
        } else {
            var_map[j] = {n_struct, n_struct + 1, Rational(0)};
            n_struct += 2;
        }
    }

    const std::size_t n_rows = p.constraints.size();
    const std::size_t n_slack = n_rows; // one per inequality row, zeroed for ==
    const std::size_t n_cols = n_struct + n_slack;

    Tableau t;
    t.a.assign(n_rows, std::vector<Rational>(n_cols + n_rows, Rational(0)));
    t.b.assign(n_rows, Rational(0));
    t.basis.assign(n_rows, -1);

    for (std::size_t i = 0; i < n_rows; ++i) {
        const LPConstraint& con = p.constraints[i];
        Rational rhs = con.rhs;
        for (std::size_t j = 0; j < n; ++j) {
            if (con.coeffs[j] == 0) continue;
            t.a[i][var_map[j].col_pos] += con.coeffs[j];
            if (var_map[j].col_neg != var_map[j].col_pos)
                t.a[i][var_map[j].col_neg] -= con.coeffs[j];
            rhs -= con.coeffs[j] * var_map[j].offset;
        }
        if (con.relation == Relation::less_equal)
            t.a[i][n_struct + i] = 1;
        else if (con.relation == Relation::greater_equal)
            t.a[i][n_struct + i] = -1;
        t.b[i] = rhs;
        if (t.b[i] < 0) {
            for (auto& entry : t.a[i]) entry = -entry;
            t.b[i] = -t.b[i];
        }
        // One artificial per row is the initial basis.
        t.a[i][n_cols + i] = 1;
        t.basis[i] = static_cast<int>(n_cols + i);
    }

    // Phase 1: minimize the sum of artificials, expressed over the nonbasic
    // columns.
    t.cost.assign(n_cols + n_rows, Rational(0));
    t.z = 0;
    for (std::size_t i = 0; i < n_rows; ++i) {
        for (std::size_t j = 0; j < n_cols; ++j) t.cost[j] -= t.a[i][j];
        t.z += t.b[i];
    }
    t.run(n_cols); // cannot be unbounded: objective is bounded below by 0
    if (t.z != 0) return LPResult{LPStatus::infeasible, Rational(0), {}};

    // Drive leftover artificials out of the basis; rows where no structural
    // pivot exists are redundant and dropped.
    for (std::size_t i = 0; i < t.rows();) {
        if (t.basis[i] < static_cast<int>(n_cols)) {
            ++i;
            continue;
        }
        std::size_t pivot_col = n_cols;
        for (std::size_t j = 0; j < n_cols; ++j) {
            if (t.a[i][j] != 0) {
                pivot_col = j;
                break;
            }
        }
        if (pivot_col < n_cols) {
            t.pivot(i, pivot_col);
            ++i;
        } else {
            t.a.erase(t.a.begin() + i);
            t.b.erase(t.b.begin() + i);
            t.basis.erase(t.basis.begin() + i);
        }
    }

    // Drop artificial columns entirely.
    for (auto& row : t.a) row.resize(n_cols);

    // Phase 2 objective over the transformed variables (internally minimize).
    std::vector<Rational> obj(n_cols, Rational(0));
    Rational obj_const = 0;
    const bool maximize = p.sense == Sense::maximize;
    for (std::size_t j = 0; j < n; ++j) {
        Rational cj = maximize ? -p.objective[j] : p.objective[j];
        obj[var_map[j].col_pos] += cj;
        if (var_map[j].col_neg != var_map[j].col_pos) obj[var_map[j].col_neg] -= cj;
        obj_const += cj * var_map[j].offset;
    }
    t.cost = obj;
    t.z = obj_const;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        const Rational cb = obj[t.basis[i]];
        if (cb == 0) continue;
        for (std::size_t j = 0; j < n_cols; ++j) t.cost[j] -= cb * t.a[i][j];
        t.z += cb * t.b[i];
    }
    t.cost.resize(n_cols);
    if (!t.run(n_cols)) return LPResult{LPStatus::unbounded, Rational(0), {}};

    std::vector<Rational> transformed(n_cols, Rational(0));
    for (std::size_t i = 0; i < t.rows(); ++i) transformed[t.basis[i]] = t.b[i];

    LPResult result;
    result.status = LPStatus::optimal;
    result.solution.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        result.solution[j] = var_map[j].offset + transformed[var_map[j].col_pos];
        if (var_map[j].col_neg != var_map[j].col_pos)
            result.solution[j] -= transformed[var_map[j].col_neg];
    }
    result.objective_value = 0;
    for (std::size_t j = 0; j < n; ++j)
        result.objective_value += p.objective[j] * result.solution[j];
    return result;
}

} // namespace coopgame
