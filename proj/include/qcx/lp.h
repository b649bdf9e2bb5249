// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_LP_H
#define QCX_LP_H

#include <optional>
#include <utility>
#include <vector>

#include "qcx/rational.h"

namespace qcx {

/// Equality system A x = b over the rationals, rows stored sparsely.
struct LinearSystem {
    size_t num_vars = 0;
    std::vector<std::vector<std::pair<size_t, Rational>>> rows;
    std::vector<Rational> rhs;

    void add_row(std::vector<std::pair<size_t, Rational>> coeffs, Rational b);
};

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> x;  // set when feasible
    size_t pivots = 0;
};

/// Decides whether some x >= 0 satisfies A x = b, by the phase-one simplex
/// method in exact arithmetic with Bland's anti-cycling rule.
FeasibilityResult find_nonnegative_solution(const LinearSystem &sys);

}  // namespace qcx

#endif
