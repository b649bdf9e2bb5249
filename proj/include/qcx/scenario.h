// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_SCENARIO_H
#define QCX_SCENARIO_H

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcx/closure.h"
#include "qcx/dense.h"
#include "qcx/graph.h"
#include "qcx/pauli.h"
#include "qcx/rational.h"

namespace qcx {

/// Outcome tuple on a context: bit k is the outcome of the k-th observable
/// listed in the context (outcome b means eigenvalue (-1)^b).
using Outcome = uint64_t;
constexpr size_t kMaxContextSize = 64;

struct MeasurementScenario {
    size_t n = 0;
    std::vector<PauliOperator> observables;
    std::vector<std::vector<size_t>> contexts;
};

/// Contexts are the maximal commuting subsets.
MeasurementScenario scenario_from_observables(const std::vector<PauliOperator> &x, size_t max_cliques = 1000000);
/// Explicit contexts (any order within each); they must be exactly the maximal cliques as sets.
MeasurementScenario scenario_with_contexts(const std::vector<PauliOperator> &x,
                                           const std::vector<std::vector<size_t>> &contexts);

using Distribution = std::map<Outcome, Rational>;

struct ProbabilisticModel {
    MeasurementScenario scenario;
    std::vector<Distribution> tables;  // one per context, zero entries omitted
};

struct PossibilisticModel {
    MeasurementScenario scenario;
    std::vector<std::vector<Outcome>> supports;  // sorted
};

/// n independent commuting generators of a stabilizer state.
struct StabilizerState {
    size_t n = 0;
    std::vector<PauliOperator> generators;

    static StabilizerState zero(size_t n);
    /// Throws InvalidArgument when the generators do not define a state.
    void validate() const;
};

struct RandomStabilizerState {
    StabilizerState state;
    std::vector<CliffordGate> circuit;  // applied to |0...0>
};

RandomStabilizerState random_stabilizer_state(size_t n, size_t word_length, std::mt19937_64 &rng);
StateVector prepare_statevector(size_t n, const std::vector<CliffordGate> &circuit);

ProbabilisticModel model_from_stabilizer_state(const MeasurementScenario &sc, const StabilizerState &st);

/// Floating-point joint probabilities per context, by sequential projection.
std::vector<std::map<Outcome, double>> statevector_probabilities(const MeasurementScenario &sc, const StateVector &v,
                                                                 double tol);
/// As above, snapped below tol and rationalised with denominators at most max_den.
ProbabilisticModel model_from_statevector(const MeasurementScenario &sc, const StateVector &v, double tol = 1e-12,
                                          uint64_t max_den = uint64_t{1} << 16);

PossibilisticModel possibilistic_of(const ProbabilisticModel &m);

/// Restriction of a distribution on `context` to the positions listed in `positions`.
Distribution marginalize(const Distribution &d, const std::vector<size_t> &positions);
bool check_no_signaling(const ProbabilisticModel &m);
/// E1 (nonempty) and E2 (supports agree on every pairwise overlap).
bool check_support_consistency(const PossibilisticModel &pm);
/// E3: every compatible family of context sections glues to a global section.
/// Exhaustive; meant for small exact models.
bool check_gluing_axiom(const PossibilisticModel &pm, size_t max_families = 1000000);

constexpr size_t kSectionSearchCap = 32;

/// Global assignment (bit i = outcome of observable i) consistent with every support.
std::optional<BitVec> global_section_search(const PossibilisticModel &pm, size_t cap = kSectionSearchCap);
/// All global sections, in lexicographic order; throws CapExceeded past limit.
std::vector<BitVec> enumerate_global_sections(const PossibilisticModel &pm, size_t limit,
                                              size_t cap = kSectionSearchCap);

using GlobalDistribution = std::map<BitVec, Rational>;

struct LpOptions {
    /// Maximum number of LP columns, as a power of two (columns are the
    /// support-consistent global assignments).
    size_t lp_cap_log2 = 12;
    size_t search_cap = kSectionSearchCap;
};

struct LpResult {
    bool feasible = false;
    GlobalDistribution distribution;  // when feasible
    size_t columns = 0;
};

LpResult lp_noncontextuality(const ProbabilisticModel &m, const LpOptions &opts = {});
/// Restriction of a global distribution to one context.
Distribution context_marginal(const GlobalDistribution &d, const std::vector<size_t> &context);
bool marginals_match(const ProbabilisticModel &m, const GlobalDistribution &d);

/// The explicit gluing for graphs without the Kirby-Love property.
GlobalDistribution glue_noncontextual(const ProbabilisticModel &m);

struct AvnResult {
    bool avn = false;
    size_t equations = 0;
};

AvnResult state_dependent_avn(const PossibilisticModel &pm);

struct BatteryOptions {
    size_t states = 3;
    size_t word_length = 20;
    size_t closure_cap = 0;
    LpOptions lp;
    uint64_t seed = 0;
};

struct BatteryReport {
    std::vector<PauliOperator> base;
    size_t closure_size = 0;
    size_t contexts = 0;
    /// Property names in the order of the equivalence list, with values.
    std::vector<std::pair<std::string, bool>> properties;
    bool agreement = false;
    std::string counterexample;  // empty when agreement
    std::vector<std::vector<PauliOperator>> states;
};

BatteryReport equivalence_battery(const std::vector<PauliOperator> &x, const BatteryOptions &opts = {});

std::string format_outcome(Outcome o, size_t width);
Outcome parse_outcome(const std::string &bits);

}  // namespace qcx

#endif
