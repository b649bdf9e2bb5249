// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/rational.h"

#include <cmath>

#include "qcx/errors.h"

namespace qcx {

std::string format_rational(const Rational &r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string &text) {
    auto valid_int = [](const std::string &s) {
        if (s.empty()) {
            return false;
        }
        size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) {
            return false;
        }
        for (size_t i = start; i < s.size(); i++) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    size_t slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) {
        throw ParseError("malformed rational '" + text + "'");
    }
    if (num[0] == '+') {
        num = num.substr(1);
    }
    mpz_class d{den};
    if (d == 0) {
        throw ParseError("zero denominator in '" + text + "'");
    }
    Rational r{mpz_class{num}, d};
    r.canonicalize();
    return r;
}

Rational rationalize(double x, uint64_t max_den) {
    if (!std::isfinite(x)) {
        throw InvalidArgument("cannot rationalize a non-finite value");
    }
    bool neg = x < 0;
    double v = std::fabs(x);
    // Convergents h/k of the continued fraction of v.
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double rem = v;
    Rational best(0);
    for (int iter = 0; iter < 64; iter++) {
        double a_d = std::floor(rem);
        if (a_d > 1e18) {
            break;
        }
        mpz_class a(static_cast<unsigned long>(a_d));
        mpz_class h2 = a * h1 + h0;
        mpz_class k2 = a * k1 + k0;
        if (k2 > mpz_class(std::to_string(max_den))) {
            // Best semiconvergent with bounded denominator.
            mpz_class t = (mpz_class(std::to_string(max_den)) - k0) / k1;
            Rational semi(t * h1 + h0, t * k1 + k0);
            Rational conv(h1, k1);
            semi.canonicalize();
            conv.canonicalize();
            double ds = std::fabs(semi.get_d() - v);
            double dc = std::fabs(conv.get_d() - v);
            best = ds < dc ? semi : conv;
            return neg ? Rational(-best) : best;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        best = Rational(h1, k1);
        best.canonicalize();
        double frac = rem - a_d;
        if (frac < 1e-15) {
            break;
        }
        rem = 1.0 / frac;
    }
    return neg ? Rational(-best) : best;
}

}  // namespace qcx
