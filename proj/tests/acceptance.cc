// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "oracles.h"
#include "qcx/closure.h"
#include "qcx/codes.h"
#include "qcx/dense.h"
#include "qcx/library.h"
#include "qcx/scenario.h"
#include "qcx/switching.h"

namespace qcx {
namespace {

struct Result {
    bool ok = true;
    std::string why;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

using Check = std::function<void(Result &)>;

std::vector<PauliOperator> square() {
    return parse_pauli_list("X0,X1,Z0,Z1", 2);
}

std::vector<PauliOperator> random_observables(size_t n, size_t m, std::mt19937_64 &rng) {
    std::vector<PauliOperator> x;
    while (x.size() < m) {
        PauliOperator p = oracle::random_pauli(n, rng);
        if (std::find(x.begin(), x.end(), p) == x.end()) {
            x.push_back(p);
        }
    }
    return x;
}

void closure_size(Result &r) {
    auto start = std::chrono::steady_clock::now();
    ClosureSet c = partial_closure(square());
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::set<PauliOperator> expected;
    for (const char *s : {"II", "XI", "IX", "ZI", "IZ", "XX", "ZX", "ZZ", "XZ", "YY"}) {
        expected.insert(parse_pauli(s, 2));
        expected.insert(parse_pauli(s, 2).negated());
    }
    r.require(c.elements.size() == 20, "closure has " + std::to_string(c.elements.size()) + " elements");
    r.require(std::set<PauliOperator>(c.elements.begin(), c.elements.end()) == expected, "element set differs");
    r.require(ms < 1.0, "took " + std::to_string(ms) + " ms");
}

void determining_trees(Result &r) {
    ClosureSet c = partial_closure(square());
    auto t = determining_tree_witness(c);
    r.require(t.has_value(), "no -I witness");
    if (!t) {
        return;
    }
    r.require(t->node.is_minus_identity(), "witness root is not -I");
    r.require(validate_tree(*t, c.base).empty(), "witness invalid: " + validate_tree(*t, c.base));
    r.require(determining_set(*t).empty(), "witness determining set is not empty");

    auto leaf = [](const char *s) { return DeterminingTree{parse_pauli(s, 2), {}}; };
    auto node = [](const char *s, std::vector<DeterminingTree> k) { return DeterminingTree{parse_pauli(s, 2), k}; };
    DeterminingTree plus = node("YY", {node("XZ", {leaf("XI"), leaf("IZ")}), node("ZX", {leaf("ZI"), leaf("IX")})});
    DeterminingTree minus = node("-YY", {node("XX", {leaf("XI"), leaf("IX")}), node("ZZ", {leaf("ZI"), leaf("IZ")})});
    r.require(validate_tree(plus, square()).empty(), "+YY tree invalid");
    r.require(validate_tree(minus, square()).empty(), "-YY tree invalid");
    r.require(determining_set(plus) == determining_set(minus), "determining sets differ");
}

void code_parameters(Result &r) {
    struct Row {
        SubsystemCode code;
        size_t k, s, g;
        Classification cls;
    };
    const auto nc = Classification::Noncontextual;
    const auto sc = Classification::StronglyContextualInPartialClosure;
    Row rows[] = {
        {steane7(), 1, 6, 0, nc},
        {rm15(), 1, 14, 0, nc},
        {six_qubit_6113(), 1, 4, 1, nc},
        {bacon_shor_3x3(), 1, 4, 4, sc},
    };
    for (const auto &row : rows) {
        const SubsystemCode &c = row.code;
        std::string tag = c.name + ": ";
        r.require(c.k == row.k && c.s == row.s && c.g == row.g,
                  tag + "(k,s,g) = (" + std::to_string(c.k) + "," + std::to_string(c.s) + "," +
                      std::to_string(c.g) + ")");
        r.require(contextuality_verdict(c).classification == row.cls, tag + "wrong verdict");
        r.require(has_kirby_love(build_graph(check_measurements(c))) == (row.cls == sc), tag + "check graph");
    }
}

void code_switch_parent(Result &r) {
    CodeSwitchProtocol p = protocol_from_codes(extended_steane15(), rm15());
    r.require(p.consistent, "inconsistent: " + p.diagnostic);
    r.require(p.parent.rank == 17, "gauge rank " + std::to_string(p.parent.rank));
    r.require(p.parent.s == 11, "stabilizer rank " + std::to_string(p.parent.s));
    r.require(p.parent.g == 3, "g = " + std::to_string(p.parent.g));
    BinaryMatrix span = symplectic_matrix(p.parent.gauge_generators, 15);
    const Cell z_faces[3][2] = {{Cell::R, Cell::G}, {Cell::R, Cell::B}, {Cell::G, Cell::B}};
    const Cell x_faces[3][2] = {{Cell::B, Cell::Y}, {Cell::G, Cell::Y}, {Cell::R, Cell::Y}};
    for (int i = 0; i < 3; i++) {
        PauliOperator z = PauliOperator::on(15, 'Z', interior_face_support(z_faces[i][0], z_faces[i][1]));
        PauliOperator x = PauliOperator::on(15, 'X', interior_face_support(x_faces[i][0], x_faces[i][1]));
        std::string tag = "pair " + std::to_string(i + 1) + ": ";
        r.require(!commutes(z, x), tag + "commutes");
        r.require(row_space_contains(span, z.symplectic()) && row_space_contains(span, x.symplectic()),
                  tag + "outside the parent gauge span");
    }
}

void doubled_color_counts(Result &r) {
    for (long long t = 1; t <= 5; t++) {
        long long n_basic = 2 * t * t * t + 6 * t * t + 6 * t + 1;
        long long g_basic = (t * t * t + 3 * t * t + 2 * t) / 2;
        GaugeCount expect[3] = {
            {n_basic, g_basic},
            {n_basic + t * t + t - 2, g_basic + t * t + t - 2},
            {n_basic + 2 * t * t - 2, g_basic + 2 * t * t - 2},
        };
        const DoubledColorFamily fam[3] = {DoubledColorFamily::Basic, DoubledColorFamily::Intermediate,
                                           DoubledColorFamily::Final};
        for (int f = 0; f < 3; f++) {
            GaugeCount got = doubled_color_code_gauge_count(fam[f], t);
            std::string tag = "t=" + std::to_string(t) + " family " + std::to_string(f) + ": ";
            r.require(got.n == expect[f].n && got.g == expect[f].g,
                      tag + "(n,g) = (" + std::to_string(got.n) + "," + std::to_string(got.g) + ")");
            r.require(got.g >= 3, tag + "g < 3");
        }
    }
}

void css_identity(Result &r) {
    std::mt19937_64 rng(101);
    int done = 0;
    for (int t = 0; t < 400 && done < 60; t++) {
        size_t n = 7 + 2 * (rng() % 4);
        BinaryMatrix wc = BinaryMatrix::with_cols(n);
        size_t target = rng() % (n / 2 + 1);
        for (int a = 0; a < 400 && wc.num_rows() < target; a++) {
            BitVec v(n);
            for (size_t i = 0; i < n; i++) {
                v.set(i, rng() & 1);
            }
            bool ok = v.any() && v.popcount() % 2 == 0 && !row_space_contains(wc, v);
            for (const auto &row : wc.rows()) {
                ok = ok && !row.dot(v);
            }
            if (ok) {
                wc.append_row(v);
            }
        }
        BinaryMatrix wt = BinaryMatrix::with_cols(n);
        for (const auto &row : wc.rows()) {
            if (rng() & 1) {
                wt.append_row(row);
            }
        }
        CssSubsystem css = css_subsystem_from_subspaces(wt, wc);
        size_t expect = (n - 1) - rank(wc) - rank(wt);
        r.require(css.base.g == expect, "n=" + std::to_string(n) + ": g=" + std::to_string(css.base.g) +
                                            " expected " + std::to_string(expect));
        r.require(oracle::gauge_count(css.base.gauge_generators) == expect, "Gram-rank oracle disagrees");
        done++;
    }
    r.require(done >= 50, "only " + std::to_string(done) + " instances");
}

void battery(Result &r) {
    std::mt19937_64 rng(103);
    BatteryOptions opts;
    opts.closure_cap = 32;
    opts.states = 3;
    std::vector<std::vector<PauliOperator>> sets = {square()};
    while (sets.size() < 121) {
        size_t n = 1 + rng() % 2;
        sets.push_back(random_observables(n, 1 + rng() % 4, rng));
    }
    for (size_t i = 0; i < sets.size(); i++) {
        opts.seed = i;
        BatteryReport rep = equivalence_battery(sets[i], opts);
        r.require(rep.agreement, "set " + std::to_string(i) + ": " + rep.counterexample);
        r.require(rep.properties.size() == 14, "property count");
        if (i == 0) {
            r.require(rep.properties.front().second, "square not contextual");
        }
    }
}

void one_way_implications(Result &r) {
    std::mt19937_64 rng(107);
    for (int t = 0; t < 250; t++) {
        size_t n = 1 + rng() % 2;
        auto x = random_observables(n, 2 + rng() % 5, rng);
        MeasurementScenario sc = scenario_from_observables(x);
        ProbabilisticModel m = model_from_stabilizer_state(sc, random_stabilizer_state(n, 20, rng).state);
        PossibilisticModel pm = possibilistic_of(m);
        bool strong = !global_section_search(pm).has_value();
        bool lp_feasible = lp_noncontextuality(m).feasible;
        bool avn = state_dependent_avn(pm).avn;
        bool kl = has_kirby_love(build_graph(x));
        std::string tag = "model " + std::to_string(t) + ": ";
        r.require(!(strong && lp_feasible), tag + "strong but LP-feasible");
        r.require(!(avn && !strong), tag + "AvN but not strong");
        r.require(!(strong && !kl), tag + "strong on a non-KL graph");
        r.require(!(!lp_feasible && !kl), tag + "LP-infeasible on a non-KL graph");
    }
}

void gluing(Result &r) {
    std::mt19937_64 rng(109);
    int done = 0;
    for (int t = 0; t < 1000 && done < 60; t++) {
        size_t n = 1 + rng() % 3;
        auto x = random_observables(n, 2 + rng() % 5, rng);
        if (has_kirby_love(build_graph(x))) {
            continue;
        }
        MeasurementScenario sc = scenario_from_observables(x);
        ProbabilisticModel m = model_from_stabilizer_state(sc, random_stabilizer_state(n, 20, rng).state);
        GlobalDistribution d = glue_noncontextual(m);
        r.require(marginals_match(m, d), "marginals differ on scenario " + std::to_string(t));
        done++;
    }
    r.require(done >= 50, "only " + std::to_string(done) + " scenarios");
}

void possibilistic_fixtures(Result &r) {
    MeasurementScenario sc = scenario_with_contexts(square(), {{0, 1}, {0, 3}, {2, 3}, {2, 1}});
    PossibilisticModel pm{sc, {}};
    auto eq = std::vector<Outcome>{parse_outcome("00"), parse_outcome("11")};
    std::sort(eq.begin(), eq.end());
    pm.supports = {eq, eq, eq, {parse_outcome("01"), parse_outcome("10")}};
    std::sort(pm.supports[3].begin(), pm.supports[3].end());
    r.require(!global_section_search(pm).has_value(), "square table has a global section");
    pm.supports[3] = {parse_outcome("00"), parse_outcome("01"), parse_outcome("10")};
    std::sort(pm.supports[3].begin(), pm.supports[3].end());
    auto all = enumerate_global_sections(pm, 16);
    r.require(all.size() == 1, std::to_string(all.size()) + " global sections in the augmented table");
    r.require(!all.empty() && all[0].none(), "augmented section is not all zeros");
}

void certificate(Result &r) {
    CodeSwitchProtocol p = protocol_from_codes(extended_steane15(), rm15());
    BoundCertificate c = csst_bound_certificate(p);
    r.require(c.audit.dim_gap == 6, "dim_gap " + std::to_string(c.audit.dim_gap));
    r.require(c.dim_v == 6, "dim V " + std::to_string(c.dim_v));
    r.require(c.bound == 3, "bound " + std::to_string(c.bound));
    r.require(c.actual_g == 3 && c.bound <= c.actual_g, "g " + std::to_string(c.actual_g));
    r.require(c.audit.triorthogonal, "RM15 G_C1 not triorthogonal");
    r.require(c.holds, "certificate does not hold");
}

void dense_agreement(Result &r) {
    auto check_pair = [&](const PauliOperator &a, const PauliOperator &b) {
        DenseMatrix da = dense_matrix(a), db = dense_matrix(b);
        DenseMatrix ab = matmul(da, db), ba = matmul(db, da);
        bool dense_commute = oracle::matrices_equal(ab, ba, 1e-12);
        if (commutes(a, b) != dense_commute) {
            r.require(false, "commutation of " + format_pauli(a) + ", " + format_pauli(b));
            return;
        }
        if (dense_commute) {
            r.require(oracle::matrices_equal(dense_matrix(commuting_product(a, b)), ab, 1e-12),
                      "product of " + format_pauli(a) + ", " + format_pauli(b));
        }
    };
    for (size_t n = 1; n <= 2; n++) {
        std::vector<PauliOperator> all;
        for (uint64_t code = 0; code < (uint64_t{1} << (2 * n + 1)); code++) {
            BitVec xz(2 * n);
            for (size_t i = 0; i < 2 * n; i++) {
                xz.set(i, code >> i & 1);
            }
            all.push_back(PauliOperator::from_symplectic(xz, code >> (2 * n) & 1));
        }
        for (const auto &a : all) {
            for (const auto &b : all) {
                check_pair(a, b);
            }
        }
    }
    std::mt19937_64 rng(113);
    for (int t = 0; t < 10000; t++) {
        size_t n = 1 + rng() % 3;
        check_pair(oracle::random_pauli(n, rng), oracle::random_pauli(n, rng));
    }
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + rng() % 3;
        auto x = random_observables(n, 1 + rng() % 5, rng);
        MeasurementScenario sc = scenario_from_observables(x);
        RandomStabilizerState st = random_stabilizer_state(n, 25, rng);
        ProbabilisticModel m = model_from_stabilizer_state(sc, st.state);
        StateVector v = prepare_statevector(n, st.circuit);
        for (size_t c = 0; c < sc.contexts.size(); c++) {
            const auto &ctx = sc.contexts[c];
            for (Outcome o = 0; o < (Outcome{1} << ctx.size()); o++) {
                StateVector w = v;
                for (size_t k = 0; k < ctx.size(); k++) {
                    w = oracle::project(sc.observables[ctx[k]], static_cast<int>(o >> k & 1), w);
                }
                double exact = m.tables[c].count(o) ? m.tables[c].at(o).get_d() : 0.0;
                r.require(std::abs(exact - norm_squared(w)) <= 1e-9, "state probability mismatch");
            }
        }
    }
}

}  // namespace
}  // namespace qcx

int main() {
    using namespace qcx;
    const std::pair<const char *, Check> criteria[] = {
        {"closure of the two-qubit square has 20 elements", closure_size},
        {"determining trees", determining_trees},
        {"library code parameters and verdicts", code_parameters},
        {"code-switching parent and named gauge pairs", code_switch_parent},
        {"doubled color code gauge counts", doubled_color_counts},
        {"CSS base-code gauge identity", css_identity},
        {"equivalence battery", battery},
        {"one-way implications on raw scenarios", one_way_implications},
        {"constructive gluing for non-KL scenarios", gluing},
        {"possibilistic square fixtures", possibilistic_fixtures},
        {"bound certificate for the 15-qubit switch", certificate},
        {"dense-matrix and statevector oracles", dense_agreement},
    };
    int failures = 0, index = 0;
    for (const auto &[name, check] : criteria) {
        index++;
        Result r;
        try {
            check(r);
        } catch (const std::exception &e) {
            r.ok = false;
            r.why = std::string("exception: ") + e.what();
        }
        std::printf("%s %2d %s%s%s\n", r.ok ? "PASS" : "FAIL", index, name, r.ok ? "" : ": ", r.why.c_str());
        failures += !r.ok;
    }
    return failures ? 1 : 0;
}
