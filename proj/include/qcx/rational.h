// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_RATIONAL_H
#define QCX_RATIONAL_H

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qcx {

/// Exact rational numbers (GMP).
using Rational = mpq_class;

/// "p/q" with q > 0, always including the denominator.
std::string format_rational(const Rational &r);
/// Accepts "p/q" or an integer "p"; throws ParseError otherwise.
Rational parse_rational(const std::string &text);
/// Closest fraction to x with denominator at most max_den (continued fractions).
Rational rationalize(double x, uint64_t max_den);

}  // namespace qcx

#endif
