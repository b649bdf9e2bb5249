// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/scenario.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "qcx/errors.h"
#include "qcx/f2.h"
#include "qcx/lp.h"

namespace qcx {

namespace {

void check_observables(const std::vector<PauliOperator> &x) {
    if (x.empty()) {
        throw InvalidArgument("scenario needs at least one observable");
    }
    size_t n = x[0].num_qubits();
    std::set<PauliOperator> seen;
    for (const auto &p : x) {
        if (p.num_qubits() != n) {
            throw DimensionMismatch("observables act on different numbers of qubits");
        }
        if (!seen.insert(p).second) {
            throw InvalidArgument("observable " + format_pauli(p) + " listed twice");
        }
    }
}

void check_context_sizes(const MeasurementScenario &sc) {
    for (const auto &c : sc.contexts) {
        if (c.size() > kMaxContextSize) {
            throw CapExceeded("context with " + std::to_string(c.size()) + " observables exceeds " +
                              std::to_string(kMaxContextSize));
        }
    }
}

// Positions inside `ctx` of the observables listed in `which` (all must be present).
std::vector<size_t> positions_in(const std::vector<size_t> &ctx, const std::vector<size_t> &which) {
    std::vector<size_t> out;
    for (size_t w : which) {
        auto it = std::find(ctx.begin(), ctx.end(), w);
        out.push_back(static_cast<size_t>(it - ctx.begin()));
    }
    return out;
}

std::vector<size_t> intersect_sorted(std::vector<size_t> a, std::vector<size_t> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Outcome restrict_outcome(Outcome o, const std::vector<size_t> &positions) {
    Outcome r = 0;
    for (size_t k = 0; k < positions.size(); k++) {
        r |= ((o >> positions[k]) & 1) << k;
    }
    return r;
}

}  // namespace

MeasurementScenario scenario_from_observables(const std::vector<PauliOperator> &x, size_t max_cliques) {
    check_observables(x);
    MeasurementScenario sc;
    sc.n = x[0].num_qubits();
    sc.observables = x;
    sc.contexts = maximal_cliques(build_graph(x), max_cliques);
    check_context_sizes(sc);
    return sc;
}

MeasurementScenario scenario_with_contexts(const std::vector<PauliOperator> &x,
                                           const std::vector<std::vector<size_t>> &contexts) {
    MeasurementScenario sc = scenario_from_observables(x);
    std::vector<std::vector<size_t>> given;
    for (const auto &c : contexts) {
        for (size_t v : c) {
            if (v >= x.size()) {
                throw InvalidArgument("context index " + std::to_string(v) + " out of range");
            }
        }
        std::vector<size_t> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InvalidArgument("context lists an observable twice");
        }
        given.push_back(sorted);
    }
    std::sort(given.begin(), given.end());
    if (given != sc.contexts) {
        throw InvalidArgument("explicit contexts are not the maximal commuting subsets of the observables");
    }
    sc.contexts = contexts;
    return sc;
}

StabilizerState StabilizerState::zero(size_t n) {
    StabilizerState st;
    st.n = n;
    for (size_t q = 0; q < n; q++) {
        st.generators.push_back(PauliOperator::single(n, q, 'Z'));
    }
    return st;
}

void StabilizerState::validate() const {
    if (generators.size() != n) {
        throw InvalidArgument("a stabilizer state on " + std::to_string(n) + " qubits needs " + std::to_string(n) +
                              " generators");
    }
    for (size_t i = 0; i < n; i++) {
        if (generators[i].num_qubits() != n) {
            throw DimensionMismatch("stabilizer generator has the wrong number of qubits");
        }
        for (size_t j = i + 1; j < n; j++) {
            if (!commutes(generators[i], generators[j])) {
                throw InvalidArgument("stabilizer generators do not commute");
            }
        }
    }
    if (rank(symplectic_matrix(generators, n)) != n) {
        throw InvalidArgument("stabilizer generators are not independent");
    }
}

RandomStabilizerState random_stabilizer_state(size_t n, size_t word_length, std::mt19937_64 &rng) {
    RandomStabilizerState r;
    r.circuit = random_clifford_word(n, word_length, rng);
    r.state = StabilizerState::zero(n);
    for (auto &g : r.state.generators) {
        for (const auto &gate : r.circuit) {
            g = conjugate(gate, g);
        }
    }
    return r;
}

StateVector prepare_statevector(size_t n, const std::vector<CliffordGate> &circuit) {
    StateVector v = zero_state(n);
    for (const auto &g : circuit) {
        apply_gate(g, v);
    }
    return v;
}

ProbabilisticModel model_from_stabilizer_state(const MeasurementScenario &sc, const StabilizerState &st) {
    st.validate();
    if (st.n != sc.n) {
        throw DimensionMismatch("state and scenario have different qubit counts");
    }
    ProbabilisticModel m;
    m.scenario = sc;
    for (const auto &ctx : sc.contexts) {
        size_t k = ctx.size();
        std::vector<PauliOperator> rows;
        for (size_t v : ctx) {
            rows.push_back(sc.observables[v]);
        }
        for (const auto &g : st.generators) {
            rows.push_back(g);
        }
        // Each relation prod_i x_i^{a_i} = +-(stabilizer element) fixes the parity a.s.
        BinaryMatrix eqs = BinaryMatrix::with_cols(k);
        BitVec rhs_bits(0);
        std::vector<bool> rhs;
        for (const auto &rel : nullspace(symplectic_matrix(rows, sc.n).transposed())) {
            GroupElement prod = GroupElement::identity(sc.n);
            BitVec a(k);
            for (size_t i : rel.set_indices()) {
                prod = mul(prod, GroupElement::from_pauli(rows[i]));
                if (i < k) {
                    a.set(i, true);
                }
            }
            eqs.append_row(a);
            rhs.push_back(prod.to_pauli().negative);
        }
        BitVec b(rhs.size());
        for (size_t i = 0; i < rhs.size(); i++) {
            b.set(i, rhs[i]);
        }
        auto particular = solve(eqs, b);
        if (!particular) {
            throw Error("stabilizer state produced inconsistent outcome constraints");
        }
        std::vector<BitVec> free = nullspace(eqs);
        if (free.size() > 24) {
            throw CapExceeded("context support too large to enumerate");
        }
        Distribution d;
        Rational p(1, uint64_t{1} << free.size());
        p.canonicalize();
        BitVec cur = *particular;
        for (uint64_t step = 0; step < (uint64_t{1} << free.size()); step++) {
            if (step) {
                cur ^= free[static_cast<size_t>(std::countr_zero(step))];
            }
            Outcome o = 0;
            for (size_t i : cur.set_indices()) {
                o |= Outcome{1} << i;
            }
            d[o] = p;
        }
        m.tables.push_back(std::move(d));
    }
    return m;
}

std::vector<std::map<Outcome, double>> statevector_probabilities(const MeasurementScenario &sc, const StateVector &v,
                                                                 double tol) {
    if (sc.n > kDenseQubitCap) {
        throw CapExceeded("statevector path limited to " + std::to_string(kDenseQubitCap) + " qubits");
    }
    if (v.size() != (size_t{1} << sc.n)) {
        throw DimensionMismatch("state vector size does not match the scenario");
    }
    if (std::fabs(norm_squared(v) - 1.0) > std::max(tol, 1e-9)) {
        throw InvalidArgument("state vector is not normalized");
    }
    std::vector<std::map<Outcome, double>> out;
    for (const auto &ctx : sc.contexts) {
        std::map<Outcome, double> probs;
        std::function<void(size_t, const StateVector &, Outcome)> rec = [&](size_t pos, const StateVector &w,
                                                                            Outcome o) {
            if (pos == ctx.size()) {
                probs[o] += norm_squared(w);
                return;
            }
            StateVector pw = apply_pauli(sc.observables[ctx[pos]], w);
            for (int b = 0; b < 2; b++) {
                StateVector proj(w.size());
                double s = b ? -1.0 : 1.0;
                for (size_t i = 0; i < w.size(); i++) {
                    proj[i] = 0.5 * (w[i] + s * pw[i]);
                }
                if (norm_squared(proj) < tol) {
                    continue;
                }
                rec(pos + 1, proj, o | (Outcome(b) << pos));
            }
        };
        rec(0, v, 0);
        out.push_back(std::move(probs));
    }
    return out;
}

ProbabilisticModel model_from_statevector(const MeasurementScenario &sc, const StateVector &v, double tol,
                                          uint64_t max_den) {
    ProbabilisticModel m;
    m.scenario = sc;
    for (const auto &probs : statevector_probabilities(sc, v, tol)) {
        double total = 0;
        for (const auto &[o, p] : probs) {
            if (p >= tol) {
                total += p;
            }
        }
        Distribution d;
        Rational sum(0);
        for (const auto &[o, p] : probs) {
            if (p < tol) {
                continue;
            }
            Rational r = rationalize(p / total, max_den);
            if (r > 0) {
                d[o] = r;
                sum += r;
            }
        }
        if (sum != 1 && !d.empty()) {
            // Absorb rounding into the largest entry so the table sums to one exactly.
            auto largest = std::max_element(d.begin(), d.end(),
                                            [](const auto &a, const auto &b) { return a.second < b.second; });
            largest->second += Rational(1) - sum;
        }
        m.tables.push_back(std::move(d));
    }
    return m;
}

PossibilisticModel possibilistic_of(const ProbabilisticModel &m) {
    PossibilisticModel pm;
    pm.scenario = m.scenario;
    for (const auto &d : m.tables) {
        std::vector<Outcome> s;
        for (const auto &[o, p] : d) {
            if (p > 0) {
                s.push_back(o);
            }
        }
        pm.supports.push_back(std::move(s));
    }
    return pm;
}

Distribution marginalize(const Distribution &d, const std::vector<size_t> &positions) {
    Distribution out;
    for (const auto &[o, p] : d) {
        out[restrict_outcome(o, positions)] += p;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

bool check_no_signaling(const ProbabilisticModel &m) {
    const auto &ctxs = m.scenario.contexts;
    for (size_t i = 0; i < ctxs.size(); i++) {
        Rational total(0);
        for (const auto &[o, p] : m.tables[i]) {
            if (p < 0) {
                return false;
            }
            total += p;
        }
        if (total != 1) {
            return false;
        }
        for (size_t j = i + 1; j < ctxs.size(); j++) {
            auto common = intersect_sorted(ctxs[i], ctxs[j]);
            if (marginalize(m.tables[i], positions_in(ctxs[i], common)) !=
                marginalize(m.tables[j], positions_in(ctxs[j], common))) {
                return false;
            }
        }
    }
    return true;
}

bool check_support_consistency(const PossibilisticModel &pm) {
    const auto &ctxs = pm.scenario.contexts;
    auto project = [](const std::vector<Outcome> &s, const std::vector<size_t> &pos) {
        std::set<Outcome> out;
        for (Outcome o : s) {
            out.insert(restrict_outcome(o, pos));
        }
        return out;
    };
    for (size_t i = 0; i < ctxs.size(); i++) {
        if (pm.supports[i].empty()) {
            return false;
        }
        for (size_t j = i + 1; j < ctxs.size(); j++) {
            auto common = intersect_sorted(ctxs[i], ctxs[j]);
            if (project(pm.supports[i], positions_in(ctxs[i], common)) !=
                project(pm.supports[j], positions_in(ctxs[j], common))) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Backtracking over observables; each context keeps the mask of assigned positions.
class SectionSearch {
   public:
    SectionSearch(const PossibilisticModel &pm, size_t cap) : pm_(pm) {
        size_t nx = pm.scenario.observables.size();
        if (nx > cap) {
            throw CapExceeded("global section search limited to " + std::to_string(cap) + " observables, got " +
                              std::to_string(nx));
        }
        membership_.resize(nx);
        for (size_t c = 0; c < pm.scenario.contexts.size(); c++) {
            const auto &ctx = pm.scenario.contexts[c];
            for (size_t k = 0; k < ctx.size(); k++) {
                membership_[ctx[k]].push_back({c, k});
            }
        }
        mask_.assign(pm.scenario.contexts.size(), 0);
        value_.assign(pm.scenario.contexts.size(), 0);
        assignment_ = BitVec(nx);
    }

    void run(size_t limit, std::vector<BitVec> &out) {
        limit_ = limit;
        out_ = &out;
        dfs(0);
    }

   private:
    bool consistent(size_t c) const {
        for (Outcome t : pm_.supports[c]) {
            if ((t & mask_[c]) == value_[c]) {
                return true;
            }
        }
        return false;
    }

    bool dfs(size_t v) {
        if (v == assignment_.size()) {
            if (out_->size() >= limit_) {
                throw CapExceeded("more than " + std::to_string(limit_) + " global sections");
            }
            out_->push_back(assignment_);
            return limit_ == 1;
        }
        for (Outcome b = 0; b < 2; b++) {
            bool ok = true;
            for (auto [c, k] : membership_[v]) {
                mask_[c] |= Outcome{1} << k;
                value_[c] = (value_[c] & ~(Outcome{1} << k)) | (b << k);
            }
            for (auto [c, k] : membership_[v]) {
                if (!consistent(c)) {
                    ok = false;
                    break;
                }
            }
            assignment_.set(v, b);
            if (ok && dfs(v + 1)) {
                return true;
            }
            for (auto [c, k] : membership_[v]) {
                mask_[c] &= ~(Outcome{1} << k);
                value_[c] &= ~(Outcome{1} << k);
            }
        }
        assignment_.set(v, false);
        return false;
    }

    const PossibilisticModel &pm_;
    std::vector<std::vector<std::pair<size_t, size_t>>> membership_;
    std::vector<Outcome> mask_, value_;
    BitVec assignment_;
    size_t limit_ = 0;
    std::vector<BitVec> *out_ = nullptr;
};

}  // namespace

std::optional<BitVec> global_section_search(const PossibilisticModel &pm, size_t cap) {
    std::vector<BitVec> found;
    SectionSearch(pm, cap).run(1, found);
    if (found.empty()) {
        return std::nullopt;
    }
    return found[0];
}

std::vector<BitVec> enumerate_global_sections(const PossibilisticModel &pm, size_t limit, size_t cap) {
    std::vector<BitVec> found;
    SectionSearch(pm, cap).run(limit == 1 ? 2 : limit, found);
    if (limit == 1 && found.size() > 1) {
        throw CapExceeded("more than 1 global section");
    }
    return found;
}

bool check_gluing_axiom(const PossibilisticModel &pm, size_t max_families) {
    // Count families {s_C} agreeing on overlaps; each glues to one assignment of X,
    // which must then be a global section. Distinct families give distinct assignments.
    const auto &ctxs = pm.scenario.contexts;
    size_t nx = pm.scenario.observables.size();
    std::vector<int> val(nx, -1);
    size_t families = 0;
    std::function<void(size_t)> rec = [&](size_t c) {
        if (c == ctxs.size()) {
            if (++families > max_families) {
                throw CapExceeded("too many compatible families");
            }
            return;
        }
        for (Outcome t : pm.supports[c]) {
            std::vector<size_t> newly;
            bool ok = true;
            for (size_t k = 0; k < ctxs[c].size(); k++) {
                int b = static_cast<int>((t >> k) & 1);
                int &slot = val[ctxs[c][k]];
                if (slot == -1) {
                    slot = b;
                    newly.push_back(ctxs[c][k]);
                } else if (slot != b) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                rec(c + 1);
            }
            for (size_t v : newly) {
                val[v] = -1;
            }
        }
    };
    rec(0);
    size_t sections = enumerate_global_sections(pm, max_families + 1, std::max(nx, kSectionSearchCap)).size();
    return sections == families;
}

Distribution context_marginal(const GlobalDistribution &d, const std::vector<size_t> &context) {
    Distribution out;
    for (const auto &[s, p] : d) {
        Outcome o = 0;
        for (size_t k = 0; k < context.size(); k++) {
            o |= Outcome{s.get(context[k])} << k;
        }
        out[o] += p;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

bool marginals_match(const ProbabilisticModel &m, const GlobalDistribution &d) {
    for (const auto &[s, p] : d) {
        if (p < 0) {
            return false;
        }
    }
    for (size_t c = 0; c < m.scenario.contexts.size(); c++) {
        Distribution expect;
        for (const auto &[o, p] : m.tables[c]) {
            if (p != 0) {
                expect[o] = p;
            }
        }
        if (context_marginal(d, m.scenario.contexts[c]) != expect) {
            return false;
        }
    }
    return true;
}

LpResult lp_noncontextuality(const ProbabilisticModel &m, const LpOptions &opts) {
    LpResult r;
    PossibilisticModel pm = possibilistic_of(m);
    // A feasible d is supported on global sections of the support model, so
    // those are the only columns the program needs.
    size_t limit = size_t{1} << opts.lp_cap_log2;
    std::vector<BitVec> cols;
    try {
        cols = enumerate_global_sections(pm, limit, opts.search_cap);
    } catch (const CapExceeded &e) {
        throw CapExceeded(std::string("LP cap: ") + e.what());
    }
    r.columns = cols.size();
    if (cols.empty()) {
        return r;
    }
    LinearSystem sys;
    sys.num_vars = cols.size();
    const auto &ctxs = m.scenario.contexts;
    for (size_t c = 0; c < ctxs.size(); c++) {
        std::map<Outcome, std::vector<std::pair<size_t, Rational>>> rows;
        for (const auto &[o, p] : m.tables[c]) {
            if (p != 0) {
                rows[o];
            }
        }
        for (size_t j = 0; j < cols.size(); j++) {
            Outcome o = 0;
            for (size_t k = 0; k < ctxs[c].size(); k++) {
                o |= Outcome{cols[j].get(ctxs[c][k])} << k;
            }
            rows[o].push_back({j, Rational(1)});
        }
        for (auto &[o, coeffs] : rows) {
            auto it = m.tables[c].find(o);
            sys.add_row(std::move(coeffs), it == m.tables[c].end() ? Rational(0) : it->second);
        }
    }
    FeasibilityResult f = find_nonnegative_solution(sys);
    r.feasible = f.feasible;
    if (f.feasible) {
        for (size_t j = 0; j < cols.size(); j++) {
            if (f.x[j] != 0) {
                r.distribution[cols[j]] = f.x[j];
            }
        }
    }
    return r;
}

GlobalDistribution glue_noncontextual(const ProbabilisticModel &m) {
    const auto &sc = m.scenario;
    CompatibilityGraph g = build_graph(sc.observables);
    if (has_kirby_love(g)) {
        throw KLGraph("compatibility graph has the Kirby-Love property; no explicit gluing");
    }
    std::vector<size_t> u = universal_vertices(g);
    size_t nx = sc.observables.size();
    size_t num_ctx = sc.contexts.size();

    // Positions of U, and of the private part C \ U, inside every context.
    std::vector<std::vector<size_t>> upos(num_ctx), rest_pos(num_ctx), rest_obs(num_ctx);
    for (size_t c = 0; c < num_ctx; c++) {
        upos[c] = positions_in(sc.contexts[c], u);
        for (size_t k = 0; k < sc.contexts[c].size(); k++) {
            size_t v = sc.contexts[c][k];
            if (!std::binary_search(u.begin(), u.end(), v)) {
                rest_pos[c].push_back(k);
                rest_obs[c].push_back(v);
            }
        }
    }
    Distribution du = marginalize(m.tables[0], upos[0]);

    GlobalDistribution out;
    for (const auto &[x, dx] : du) {
        if (dx == 0) {
            continue;
        }
        // Entries of each e_C whose U-part equals x.
        std::vector<std::vector<std::pair<Outcome, Rational>>> slices(num_ctx);
        for (size_t c = 0; c < num_ctx; c++) {
            for (const auto &[o, p] : m.tables[c]) {
                if (p != 0 && restrict_outcome(o, upos[c]) == x) {
                    slices[c].push_back({restrict_outcome(o, rest_pos[c]), p});
                }
            }
        }
        Rational scale(1);
        for (size_t c = 1; c < num_ctx; c++) {
            scale /= dx;
        }
        BitVec s(nx);
        for (size_t k = 0; k < u.size(); k++) {
            s.set(u[k], (x >> k) & 1);
        }
        std::function<void(size_t, Rational)> rec = [&](size_t c, Rational acc) {
            if (c == num_ctx) {
                if (out.size() >= 1000000) {
                    throw CapExceeded("glued distribution has too many entries");
                }
                out[s] += acc * scale;
                return;
            }
            for (const auto &[y, p] : slices[c]) {
                for (size_t k = 0; k < rest_obs[c].size(); k++) {
                    s.set(rest_obs[c][k], (y >> k) & 1);
                }
                rec(c + 1, acc * p);
            }
        };
        rec(0, Rational(1));
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

AvnResult state_dependent_avn(const PossibilisticModel &pm) {
    AvnResult r;
    const auto &sc = pm.scenario;
    size_t nx = sc.observables.size();
    BinaryMatrix a = BinaryMatrix::with_cols(nx);
    std::vector<bool> rhs;
    for (size_t c = 0; c < sc.contexts.size(); c++) {
        const auto &ctx = sc.contexts[c];
        const auto &supp = pm.supports[c];
        if (supp.empty()) {
            // No section at all: record 0 = 1.
            a.append_row(BitVec(nx));
            rhs.push_back(true);
            continue;
        }
        auto to_bits = [&](Outcome o) {
            BitVec v(ctx.size());
            for (size_t k = 0; k < ctx.size(); k++) {
                v.set(k, (o >> k) & 1);
            }
            return v;
        };
        BitVec p0 = to_bits(supp[0]);
        BinaryMatrix diffs = BinaryMatrix::with_cols(ctx.size());
        for (size_t i = 1; i < supp.size(); i++) {
            diffs.append_row(to_bits(supp[i]) ^ p0);
        }
        // Equations a.s = a.p0 for every a orthogonal to the differences.
        for (const auto &eq : nullspace(diffs)) {
            BitVec lifted(nx);
            for (size_t k : eq.set_indices()) {
                lifted.set(ctx[k], true);
            }
            a.append_row(lifted);
            rhs.push_back(eq.dot(p0));
        }
    }
    BitVec b(rhs.size());
    for (size_t i = 0; i < rhs.size(); i++) {
        b.set(i, rhs[i]);
    }
    r.equations = rhs.size();
    r.avn = !solve(a, b).has_value();
    return r;
}

namespace {

bool kl_contextual(const ClosureSet &c) {
    auto t = determining_tree_witness(c);
    return t && validate_tree(*t, c.base).empty() && determining_set(*t).empty() && t->node.is_minus_identity();
}

}  // namespace

BatteryReport equivalence_battery(const std::vector<PauliOperator> &x, const BatteryOptions &opts) {
    BatteryReport rep;
    ClosureSet closure = partial_closure(x, opts.closure_cap);
    rep.base = closure.base;
    rep.closure_size = closure.elements.size();
    ClosureSet closure2 = partial_closure(closure.elements, opts.closure_cap);

    auto &props = rep.properties;
    props.push_back({"kl_graph_x", has_kirby_love(build_graph(closure.base))});
    props.push_back({"kl_graph_closure", has_kirby_love(build_graph(closure.elements))});
    props.push_back({"kl_contextual_x", kl_contextual(closure)});
    props.push_back({"kl_contextual_closure", kl_contextual(closure2)});
    props.push_back({"si_avn_x", si_avn(closure).contextual});
    props.push_back({"si_avn_closure", si_avn(closure2).contextual});
    props.push_back({"ks_contextual_x", !ks_value_assignment(closure).has_value()});
    props.push_back({"ks_contextual_closure", !ks_value_assignment_search(closure2).has_value()});

    MeasurementScenario sc = scenario_from_observables(closure.elements);
    rep.contexts = sc.contexts.size();
    std::mt19937_64 rng(opts.seed);
    bool avn_all = true, avn_some = false, strong_all = true, strong_some = false, ctx_all = true, ctx_some = false;
    for (size_t t = 0; t < opts.states; t++) {
        RandomStabilizerState st = random_stabilizer_state(closure.n, opts.word_length, rng);
        rep.states.push_back(st.state.generators);
        ProbabilisticModel m = model_from_stabilizer_state(sc, st.state);
        PossibilisticModel pm = possibilistic_of(m);
        bool avn = state_dependent_avn(pm).avn;
        bool strong = !global_section_search(pm, opts.lp.search_cap).has_value();
        bool ctx = !lp_noncontextuality(m, opts.lp).feasible;
        avn_all &= avn;
        avn_some |= avn;
        strong_all &= strong;
        strong_some |= strong;
        ctx_all &= ctx;
        ctx_some |= ctx;
    }
    props.push_back({"avn_all_states", avn_all});
    props.push_back({"avn_some_state", avn_some});
    props.push_back({"strong_all_states", strong_all});
    props.push_back({"strong_some_state", strong_some});
    props.push_back({"contextual_all_states", ctx_all});
    props.push_back({"contextual_some_state", ctx_some});

    rep.agreement = true;
    for (const auto &[name, v] : props) {
        if (v != props[0].second) {
            rep.agreement = false;
        }
    }
    if (!rep.agreement) {
        std::ostringstream os;
        os << "X = {";
        for (size_t i = 0; i < closure.base.size(); i++) {
            os << (i ? ", " : "") << format_pauli(closure.base[i]);
        }
        os << "};";
        for (const auto &[name, v] : props) {
            os << " " << name << "=" << (v ? "true" : "false");
        }
        rep.counterexample = os.str();
    }
    return rep;
}

std::string format_outcome(Outcome o, size_t width) {
    std::string s(width, '0');
    for (size_t k = 0; k < width; k++) {
        if ((o >> k) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

Outcome parse_outcome(const std::string &bits) {
    if (bits.size() > kMaxContextSize) {
        throw ParseError("outcome tuple longer than " + std::to_string(kMaxContextSize));
    }
    Outcome o = 0;
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            o |= Outcome{1} << k;
        } else if (bits[k] != '0') {
            throw ParseError("outcome tuple '" + bits + "' contains a character other than 0 or 1");
        }
    }
    return o;
}

}  // namespace qcx
