// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/lp.h"

#include "qcx/errors.h"

namespace qcx {

void LinearSystem::add_row(std::vector<std::pair<size_t, Rational>> coeffs, Rational b) {
    for (const auto &[j, v] : coeffs) {
        if (j >= num_vars) {
            throw DimensionMismatch("coefficient index beyond variable count");
        }
    }
    rows.push_back(std::move(coeffs));
    rhs.push_back(std::move(b));
}

FeasibilityResult find_nonnegative_solution(const LinearSystem &sys) {
    size_t m = sys.rows.size();
    size_t nv = sys.num_vars;
    FeasibilityResult result;
    if (m == 0) {
        result.feasible = true;
        result.x.assign(nv, Rational(0));
        return result;
    }
    // Columns: originals, then one artificial per row, then the right-hand side.
    size_t width = nv + m + 1;
    size_t rhs_col = nv + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
    for (size_t i = 0; i < m; i++) {
        bool flip = sys.rhs[i] < 0;
        for (const auto &[j, v] : sys.rows[i]) {
            t[i][j] += flip ? Rational(-v) : v;
        }
        t[i][nv + i] = 1;
        t[i][rhs_col] = flip ? Rational(-sys.rhs[i]) : sys.rhs[i];
    }
    std::vector<size_t> basis(m);
    std::vector<Rational> cost(width, Rational(0));
    for (size_t i = 0; i < m; i++) {
        basis[i] = nv + i;
        for (size_t j = 0; j < nv; j++) {
            cost[j] -= t[i][j];
        }
        cost[rhs_col] -= t[i][rhs_col];
    }

    while (true) {
        // Bland: lowest-index improving column. Artificials never re-enter.
        size_t enter = nv;
        for (size_t j = 0; j < nv; j++) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == nv) {
            break;
        }
        size_t leave = m;
        Rational best_ratio;
        for (size_t i = 0; i < m; i++) {
            if (t[i][enter] > 0) {
                Rational ratio = t[i][rhs_col] / t[i][enter];
                if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == m) {
            // Cannot happen: the phase-one objective is bounded below by zero.
            throw Error("phase-one simplex reported an unbounded direction");
        }
        Rational piv = t[leave][enter];
        for (size_t j = 0; j < width; j++) {
            if (t[leave][j] != 0) {
                t[leave][j] /= piv;
            }
        }
        for (size_t i = 0; i < m; i++) {
            if (i == leave || t[i][enter] == 0) {
                continue;
            }
            Rational f = t[i][enter];
            for (size_t j = 0; j < width; j++) {
                if (t[leave][j] != 0) {
                    t[i][j] -= f * t[leave][j];
                }
            }
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (size_t j = 0; j < width; j++) {
                if (t[leave][j] != 0) {
                    cost[j] -= f * t[leave][j];
                }
            }
        }
        basis[leave] = enter;
        result.pivots++;
    }

    // Remaining phase-one objective is -cost[rhs].
    if (cost[rhs_col] != 0) {
        return result;
    }
    result.feasible = true;
    result.x.assign(nv, Rational(0));
    for (size_t i = 0; i < m; i++) {
        if (basis[i] < nv) {
            result.x[basis[i]] = t[i][rhs_col];
        }
    }
    return result;
}

}  // namespace qcx
