// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qcx/closure.h"
#include "qcx/codes.h"
#include "qcx/errors.h"
#include "qcx/graph.h"
#include "qcx/library.h"
#include "qcx/scenario.h"
#include "qcx/switching.h"

namespace qcx {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string format = "json";
    uint64_t seed = 0;
    size_t closure_cap = 0;
    size_t lp_cap = 12;
    std::string dot;
    std::string config;
    bool timing = false;

    // analyze, audit-csst
    std::string code_file;
    std::string library;
    size_t c2_rows = 0;
    // closure, graph, scenario
    std::string paulis;
    size_t n = 0;
    std::string element;
    // scenario
    std::string model_file;
    std::string state;
    bool strong = false, lp = false, avn = false, kl = false, ks = false, battery = false;
    size_t trials = 3;
    size_t word_length = 20;
    // switch
    std::string code_a, code_b, library_a, library_b;
    bool check_logicals = false;
    // library
    bool list = false;
    std::string show;
};

class Digest {
   public:
    void add(const std::string &s) {
        for (unsigned char c : s) {
            h_ ^= c;
            h_ *= 0x100000001b3ULL;
        }
        h_ ^= 0xff;
        h_ *= 0x100000001b3ULL;
    }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
        return buf;
    }

   private:
    uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string read_file(const std::string &path, Digest &digest) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    digest.add(ss.str());
    return ss.str();
}

json parse_json(const std::string &text, const std::string &path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string fmt(const PauliOperator &p) {
    return format_pauli(p);
}

json op_list(const std::vector<PauliOperator> &ops) {
    json a = json::array();
    for (const auto &p : ops) {
        a.push_back(fmt(p));
    }
    return a;
}

const json &field(const json &j, const std::string &key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    return j.at(key);
}

size_t as_count(const json &j, const std::string &where) {
    if (!j.is_number_unsigned()) {
        throw ParseError(where + ": expected a nonnegative integer");
    }
    return j.get<size_t>();
}

std::string as_string(const json &j, const std::string &where) {
    if (!j.is_string()) {
        throw ParseError(where + ": expected a string");
    }
    return j.get<std::string>();
}

PauliOperator parse_op_at(const json &j, size_t n, const std::string &where) {
    try {
        return parse_pauli(as_string(j, where), n);
    } catch (const ParseError &e) {
        throw ParseError(where + ": " + e.what());
    }
}

SubsystemCode code_from_json(const json &j, const std::string &path) {
    size_t n = as_count(field(j, "n", path), path + ": field 'n'");
    const json &gens = field(j, "gauge_generators", path);
    if (!gens.is_array()) {
        throw ParseError(path + ": field 'gauge_generators' must be an array");
    }
    std::vector<PauliOperator> ops;
    for (size_t i = 0; i < gens.size(); i++) {
        ops.push_back(parse_op_at(gens[i], n, path + ": field 'gauge_generators[" + std::to_string(i) + "]'"));
    }
    std::string name = j.contains("name") ? as_string(j["name"], path + ": field 'name'") : "";
    return code_from_gauge_generators(n, ops, name);
}

json code_to_json(const SubsystemCode &c) {
    json j;
    j["name"] = c.name;
    j["n"] = c.n;
    j["gauge_generators"] = op_list(c.gauge_generators);
    return j;
}

SubsystemCode load_code(const std::string &file, const std::string &lib, Digest &digest, const std::string &what) {
    if (file.empty() == lib.empty()) {
        throw InvalidArgument("give exactly one of --" + what + " file or a library name");
    }
    if (!lib.empty()) {
        return library_code(lib);
    }
    return code_from_json(parse_json(read_file(file, digest), file), file);
}

json verdict_json(const Verdict &v) {
    json j;
    j["classification"] = to_string(v.classification);
    j["strongly_contextual"] = v.classification == Classification::StronglyContextualInPartialClosure;
    j["g"] = v.g;
    if (v.kl_witness) {
        j["kl_witness"] = op_list({v.kl_witness->begin(), v.kl_witness->end()});
    } else {
        j["kl_witness"] = nullptr;
    }
    return j;
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream f(path);
    if (!f) {
        throw InvalidArgument("cannot write '" + path + "'");
    }
    f << text;
}

json cmd_analyze(const Options &o, Digest &digest) {
    SubsystemCode c = load_code(o.code_file, o.library, digest, "code");
    Verdict v = contextuality_verdict(c);
    json r;
    r["name"] = c.name;
    r["n"] = c.n;
    r["k"] = c.k;
    r["s"] = c.s;
    r["g"] = c.g;
    r["verdict"] = to_string(v.classification);
    r["kl_witness"] = verdict_json(v)["kl_witness"];
    r["stabilizer_basis"] = op_list(c.stabilizer_basis);
    r["check_measurements"] = op_list(check_measurements(c));
    if (!o.dot.empty()) {
        std::vector<PauliOperator> checks = check_measurements(c);
        CompatibilityGraph g = build_graph(checks);
        std::optional<KlWitness> w;
        if (v.kl_witness) {
            size_t s = c.s;
            w = KlWitness{s, s + 2, s + 3, s + 1};
        }
        write_text(o.dot, graph_to_dot(g, w));
    }
    return r;
}

std::vector<PauliOperator> positional_paulis(const Options &o) {
    if (o.n == 0) {
        throw InvalidArgument("-n must be at least 1");
    }
    if (o.paulis.empty()) {
        throw InvalidArgument("no operators given");
    }
    return parse_pauli_list(o.paulis, o.n);
}

json cmd_closure(const Options &o) {
    ClosureSet c = partial_closure(positional_paulis(o), o.closure_cap);
    json r;
    r["n"] = c.n;
    r["base"] = op_list(c.base);
    r["size"] = c.elements.size();
    r["elements"] = op_list(c.elements);
    r["contains_minus_identity"] = c.contains(PauliOperator::minus_identity(c.n));
    if (!o.dot.empty()) {
        std::optional<DeterminingTree> t;
        if (!o.element.empty()) {
            auto idx = c.index_of(parse_pauli(o.element, c.n));
            if (!idx) {
                throw InvalidArgument("'" + o.element + "' is not in the closure");
            }
            t = c.provenance(*idx);
        } else {
            t = determining_tree_witness(c);
        }
        if (t) {
            write_text(o.dot, tree_to_dot(*t));
        }
        r["dot_written"] = t.has_value();
    }
    return r;
}

json cmd_graph(const Options &o) {
    std::vector<PauliOperator> ops = positional_paulis(o);
    CompatibilityGraph g = build_graph(ops);
    auto w = kirby_love_witness(g);
    json r;
    r["vertices"] = op_list(ops);
    json edges = json::array();
    for (size_t i = 0; i < g.size(); i++) {
        for (size_t j = i + 1; j < g.size(); j++) {
            if (g.edge(i, j)) {
                edges.push_back({i, j});
            }
        }
    }
    r["edges"] = edges;
    r["kirby_love"] = w.has_value();
    r["kl_witness"] = w ? json(op_list({ops[w->a], ops[w->b], ops[w->c], ops[w->d]})) : json(nullptr);
    r["maximal_cliques"] = maximal_cliques(g);
    if (!o.dot.empty()) {
        write_text(o.dot, graph_to_dot(g, w));
    }
    return r;
}

ProbabilisticModel model_from_json(const json &j, const std::string &path, bool &probabilistic) {
    size_t n = as_count(field(j, "n", path), path + ": field 'n'");
    const json &obs = field(j, "observables", path);
    if (!obs.is_array()) {
        throw ParseError(path + ": field 'observables' must be an array");
    }
    std::vector<PauliOperator> x;
    for (size_t i = 0; i < obs.size(); i++) {
        x.push_back(parse_op_at(obs[i], n, path + ": field 'observables[" + std::to_string(i) + "]'"));
    }
    MeasurementScenario sc;
    if (j.contains("contexts")) {
        std::vector<std::vector<size_t>> ctxs;
        const json &cj = j["contexts"];
        if (!cj.is_array()) {
            throw ParseError(path + ": field 'contexts' must be an array");
        }
        for (size_t i = 0; i < cj.size(); i++) {
            std::vector<size_t> c;
            std::string where = path + ": field 'contexts[" + std::to_string(i) + "]'";
            if (!cj[i].is_array()) {
                throw ParseError(where + " must be an array");
            }
            for (const auto &v : cj[i]) {
                c.push_back(as_count(v, where));
            }
            ctxs.push_back(c);
        }
        sc = scenario_with_contexts(x, ctxs);
    } else {
        sc = scenario_from_observables(x);
    }
    probabilistic = j.contains("distributions");
    const std::string key = probabilistic ? "distributions" : "supports";
    const json &tables = field(j, key, path);
    if (!tables.is_array() || tables.size() != sc.contexts.size()) {
        throw ParseError(path + ": field '" + key + "' needs one entry per context (" +
                         std::to_string(sc.contexts.size()) + ")");
    }
    ProbabilisticModel m;
    m.scenario = sc;
    for (size_t c = 0; c < tables.size(); c++) {
        std::string where = path + ": field '" + key + "[" + std::to_string(c) + "]'";
        size_t width = sc.contexts[c].size();
        auto outcome = [&](const std::string &s) {
            if (s.size() != width) {
                throw ParseError(where + ": outcome '" + s + "' should have " + std::to_string(width) + " bits");
            }
            try {
                return parse_outcome(s);
            } catch (const ParseError &e) {
                throw ParseError(where + ": " + e.what());
            }
        };
        Distribution d;
        if (probabilistic) {
            if (!tables[c].is_object()) {
                throw ParseError(where + " must be an object");
            }
            for (const auto &[k, v] : tables[c].items()) {
                try {
                    d[outcome(k)] = parse_rational(as_string(v, where));
                } catch (const ParseError &e) {
                    throw ParseError(where + ": " + e.what());
                }
            }
        } else {
            if (!tables[c].is_array()) {
                throw ParseError(where + " must be an array");
            }
            // Possibilistic input: uniform weights only mark the support.
            for (const auto &v : tables[c]) {
                d[outcome(as_string(v, where))] = 1;
            }
        }
        m.tables.push_back(std::move(d));
    }
    return m;
}

json global_section_json(const BitVec &s) {
    return s.str();
}

json cmd_scenario(const Options &o, Digest &digest) {
    bool all = !(o.strong || o.lp || o.avn || o.kl || o.ks || o.battery);
    json r;
    LpOptions lp;
    lp.lp_cap_log2 = o.lp_cap;

    if (o.battery) {
        BatteryOptions bo;
        bo.states = o.trials;
        bo.word_length = o.word_length;
        bo.closure_cap = o.closure_cap;
        bo.lp = lp;
        bo.seed = o.seed;
        BatteryReport rep = equivalence_battery(positional_paulis(o), bo);
        json b;
        b["base"] = op_list(rep.base);
        b["closure_size"] = rep.closure_size;
        b["contexts"] = rep.contexts;
        b["states"] = rep.states.size();
        json props;
        for (const auto &[k, v] : rep.properties) {
            props[k] = v;
        }
        b["properties"] = props;
        b["agreement"] = rep.agreement;
        b["counterexample"] = rep.counterexample.empty() ? json(nullptr) : json(rep.counterexample);
        r["battery"] = b;
        if (!(o.strong || o.lp || o.avn || o.kl || o.ks)) {
            return r;
        }
    }

    ProbabilisticModel m;
    bool probabilistic = true;
    if (!o.model_file.empty()) {
        m = model_from_json(parse_json(read_file(o.model_file, digest), o.model_file), o.model_file, probabilistic);
        r["source"] = "model";
    } else {
        std::vector<PauliOperator> x = positional_paulis(o);
        MeasurementScenario sc = scenario_from_observables(x);
        StabilizerState st = StabilizerState::zero(o.n);
        if (!o.state.empty()) {
            st.generators = parse_pauli_list(o.state, o.n);
        }
        m = model_from_stabilizer_state(sc, st);
        r["source"] = "stabilizer state";
        r["state"] = op_list(st.generators);
    }
    const MeasurementScenario &sc = m.scenario;
    PossibilisticModel pm = possibilistic_of(m);
    r["observables"] = op_list(sc.observables);
    r["contexts"] = sc.contexts;
    r["support_consistent"] = check_support_consistency(pm);
    if (probabilistic) {
        r["no_signaling"] = check_no_signaling(m);
    }

    if (all || o.strong) {
        auto s = global_section_search(pm, lp.search_cap);
        r["strong"] = !s.has_value();
        r["global_section"] = s ? global_section_json(*s) : json(nullptr);
    }
    if (o.lp || (all && probabilistic)) {
        if (!probabilistic) {
            throw InvalidArgument("--lp needs a model with distributions");
        }
        LpResult res = lp_noncontextuality(m, lp);
        r["lp_contextual"] = !res.feasible;
        r["lp_columns"] = res.columns;
        if (res.feasible) {
            json d = json::object();
            for (const auto &[s, p] : res.distribution) {
                d[s.str()] = format_rational(p);
            }
            r["lp_distribution"] = d;
        }
    }
    if (all || o.avn) {
        AvnResult a = state_dependent_avn(pm);
        r["avn"] = a.avn;
        r["avn_equations"] = a.equations;
    }
    if (all || o.kl) {
        CompatibilityGraph g = build_graph(sc.observables);
        auto w = kirby_love_witness(g);
        r["kl"] = w.has_value();
        r["kl_witness"] = w ? json(op_list({sc.observables[w->a], sc.observables[w->b], sc.observables[w->c],
                                            sc.observables[w->d]}))
                            : json(nullptr);
    }
    if (all || o.ks) {
        ClosureSet c = partial_closure(sc.observables, o.closure_cap);
        SiAvnResult si = si_avn(c);
        r["closure_size"] = c.elements.size();
        r["ks"] = !ks_value_assignment(c).has_value();
        r["si_avn"] = si.contextual;
        r["si_avn_certificate"] = si.certificate ? json(si.certificate->str()) : json(nullptr);
        auto t = determining_tree_witness(c);
        r["determining_tree"] = t.has_value();
        if (t && !o.dot.empty()) {
            write_text(o.dot, tree_to_dot(*t));
        }
    }
    return r;
}

json certificate_json(const BoundCertificate &c) {
    json j;
    json h;
    for (const auto &[k, v] : c.hypotheses) {
        h[k] = v;
    }
    j["hypotheses"] = h;
    j["t_code"] = c.t_code;
    j["dim_c2"] = c.c2_dim;
    j["dim_c1_perp"] = c.c1_perp_dim;
    j["dim_v"] = c.dim_v;
    j["dim_v_cap_w2"] = c.dim_v_cap_w2;
    j["q1"] = c.q1;
    j["q2"] = c.q2;
    j["w1_quotient"] = c.w1_quotient;
    j["w2_quotient"] = c.w2_quotient;
    j["bound"] = c.bound;
    j["actual_g"] = c.actual_g;
    j["holds"] = c.holds;
    return j;
}

json audit_json(const CsstAudit &a) {
    json j;
    j["triorthogonal"] = a.triorthogonal;
    j["pair_violations"] = a.pair_violations;
    j["triple_violations"] = a.triple_violations;
    j["weights_checked"] = a.weights_checked;
    j["weights_mod8_ok"] = a.weights_checked ? json(a.weights_mod8_ok) : json("not checked");
    j["complement_weights_mod8_ok"] = a.weights_checked ? json(a.complement_weights_mod8_ok) : json("not checked");
    j["dim_gap"] = a.dim_gap;
    return j;
}

json code_summary(const SubsystemCode &c) {
    json j;
    j["name"] = c.name;
    j["n"] = c.n;
    j["k"] = c.k;
    j["s"] = c.s;
    j["g"] = c.g;
    return j;
}

json cmd_switch(const Options &o, Digest &digest) {
    SubsystemCode a = load_code(o.code_a, o.library_a, digest, "code-a");
    SubsystemCode b = load_code(o.code_b, o.library_b, digest, "code-b");
    CodeSwitchProtocol p = protocol_from_codes(a, b);
    json r;
    r["code_a"] = code_summary(a);
    r["code_b"] = code_summary(b);
    json parent = code_summary(p.parent);
    parent["gauge_rank"] = p.parent.rank;
    parent["stabilizer_rank"] = p.parent.s;
    r["parent"] = parent;
    r["g"] = p.parent.g;
    r["parent_stabilizer"] = op_list(p.parent_stabilizer);
    r["consistent"] = p.consistent;
    r["diagnostic"] = p.diagnostic.empty() ? json(nullptr) : json(p.diagnostic);
    r["verdict"] = verdict_json(protocol_verdict(p));
    CertificateOptions co;
    co.check_logicals = o.check_logicals;
    BoundCertificate cert = csst_bound_certificate(p, co);
    r["audit"] = audit_json(cert.audit);
    r["certificate"] = certificate_json(cert);
    return r;
}

json cmd_audit(const Options &o, Digest &digest) {
    SubsystemCode c = load_code(o.code_file, o.library, digest, "code");
    BinaryMatrix xs = pure_part(c.stabilizer_basis, c.n, 'X');
    BinaryMatrix g1 = BinaryMatrix::with_cols(c.n);
    g1.append_row(BitVec::ones(c.n));
    for (const auto &row : xs.rows()) {
        g1.append_row(row);
    }
    size_t k = o.c2_rows ? o.c2_rows : xs.num_rows();
    if (k > xs.num_rows()) {
        throw InvalidArgument("--c2-rows " + std::to_string(k) + " exceeds the " + std::to_string(xs.num_rows()) +
                              " pure X stabilizer rows");
    }
    json r = audit_json(triorthogonality_audit(g1, k));
    r["code"] = c.name;
    r["g1_rows"] = g1.num_rows();
    r["eta_invariant"] = eta_invariance(symplectic_matrix(c.stabilizer_basis, c.n));
    return r;
}

json cmd_library(const Options &o) {
    json r;
    if (!o.show.empty()) {
        r["code"] = code_to_json(library_code(o.show));
        return r;
    }
    json list = json::array();
    for (const auto &name : library_names()) {
        SubsystemCode c = library_code(name);
        list.push_back(code_summary(c));
    }
    r["codes"] = list;
    return r;
}

void apply_config(CLI::App &app, Options &o, Digest &digest) {
    if (o.config.empty()) {
        return;
    }
    json cfg = parse_json(read_file(o.config, digest), o.config);
    if (!cfg.is_object()) {
        throw ParseError(o.config + ": config must be an object");
    }
    auto unset = [&](const std::string &flag) { return app.get_option(flag)->count() == 0; };
    for (const auto &[key, value] : cfg.items()) {
        std::string where = o.config + ": field '" + key + "'";
        if (key == "format") {
            if (unset("--format")) {
                o.format = as_string(value, where);
            }
        } else if (key == "seed") {
            if (unset("--seed")) {
                o.seed = as_count(value, where);
            }
        } else if (key == "closure-cap" || key == "closure_cap") {
            if (unset("--closure-cap")) {
                o.closure_cap = as_count(value, where);
            }
        } else if (key == "lp-cap" || key == "lp_cap") {
            if (unset("--lp-cap")) {
                o.lp_cap = as_count(value, where);
            }
        } else {
            throw ParseError(where + ": unknown setting");
        }
    }
    if (o.format != "json" && o.format != "text") {
        throw ParseError(o.config + ": field 'format' must be json or text");
    }
}

void print_text(std::ostream &out, const json &j, const std::string &prefix) {
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            print_text(out, v, prefix.empty() ? k : prefix + "." + k);
        }
        return;
    }
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Contextuality analysis of Pauli measurement sets and subsystem codes", "qcx"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", o.seed, "Random seed");
    app.add_option("--closure-cap", o.closure_cap, "Maximum closure size (0 = 2*4^n)");
    app.add_option("--lp-cap", o.lp_cap, "log2 of the maximum number of LP columns");
    app.add_option("--dot", o.dot, "Write a DOT graph or tree to this path");
    app.add_option("--config", o.config, "JSON file with default settings");
    app.add_flag("--timing", o.timing, "Include wall-clock time in the report");

    auto *analyze = app.add_subcommand("analyze", "Parameters and verdict of a subsystem code");
    analyze->add_option("--code", o.code_file, "Code JSON file");
    analyze->add_option("--library", o.library, "Built-in code name");

    auto *closure = app.add_subcommand("closure", "Partial closure of a set of Pauli operators");
    closure->add_option("paulis", o.paulis, "Comma-separated operators")->required();
    closure->add_option("-n", o.n, "Number of qubits")->required();
    closure->add_option("--element", o.element, "Element whose provenance goes to --dot");

    auto *graph = app.add_subcommand("graph", "Compatibility graph of a set of Pauli operators");
    graph->add_option("paulis", o.paulis, "Comma-separated operators")->required();
    graph->add_option("-n", o.n, "Number of qubits")->required();

    auto *scenario = app.add_subcommand("scenario", "Contextuality checks on an empirical model");
    scenario->add_option("paulis", o.paulis, "Comma-separated observables");
    scenario->add_option("-n", o.n, "Number of qubits");
    scenario->add_option("--model", o.model_file, "Model JSON file");
    scenario->add_option("--state", o.state, "Stabilizer generators of the state (default |0...0>)");
    scenario->add_flag("--strong", o.strong, "Strong contextuality (global section search)");
    scenario->add_flag("--lp", o.lp, "Probabilistic contextuality by exact LP");
    scenario->add_flag("--avn", o.avn, "All-versus-nothing parity argument");
    scenario->add_flag("--kl", o.kl, "Kirby-Love property of the compatibility graph");
    scenario->add_flag("--ks", o.ks, "Kochen-Specker and state-independent AvN on the closure");
    scenario->add_flag("--battery", o.battery, "Compare every notion on the closure");
    scenario->add_option("--trials", o.trials, "Random stabilizer states for --battery");
    scenario->add_option("--word-length", o.word_length, "Clifford word length for random states");

    auto *sw = app.add_subcommand("switch", "Parent code of a code-switching protocol");
    sw->add_option("--code-a", o.code_a, "First code JSON file");
    sw->add_option("--code-b", o.code_b, "Second code JSON file");
    sw->add_option("--library-a", o.library_a, "First built-in code");
    sw->add_option("--library-b", o.library_b, "Second built-in code");
    sw->add_flag("--check-logicals", o.check_logicals, "Verify the all-ones logical operators");

    auto *audit = app.add_subcommand("audit-csst", "Triorthogonality audit of a CSS code");
    audit->add_option("--code", o.code_file, "Code JSON file");
    audit->add_option("--library", o.library, "Built-in code name");
    audit->add_option("--c2-rows", o.c2_rows, "Rows of G_C1 that generate C2 (default: all pure X rows)");

    auto *library = app.add_subcommand("library", "Built-in codes");
    library->add_flag("--list", o.list, "List the built-in codes");
    library->add_option("--show", o.show, "Print one code in code-file format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    Digest digest;
    for (int i = 1; i < argc; i++) {
        digest.add(argv[i]);
    }
    try {
        apply_config(app, o, digest);
        auto start = std::chrono::steady_clock::now();
        json results;
        std::string command;
        if (analyze->parsed()) {
            command = "analyze";
            results = cmd_analyze(o, digest);
        } else if (closure->parsed()) {
            command = "closure";
            results = cmd_closure(o);
        } else if (graph->parsed()) {
            command = "graph";
            results = cmd_graph(o);
        } else if (scenario->parsed()) {
            command = "scenario";
            results = cmd_scenario(o, digest);
        } else if (sw->parsed()) {
            command = "switch";
            results = cmd_switch(o, digest);
        } else if (audit->parsed()) {
            command = "audit-csst";
            results = cmd_audit(o, digest);
        } else {
            command = "library";
            results = cmd_library(o);
        }
        json report;
        report["schema"] = "qcx.report/1";
        json argv_echo = json::array();
        for (int i = 1; i < argc; i++) {
            argv_echo.push_back(argv[i]);
        }
        report["command"] = command;
        report["argv"] = argv_echo;
        report["inputs_digest"] = digest.hex();
        report["seed"] = o.seed;
        report["results"] = results;
        if (o.timing) {
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            report["timing_ms"] = ms;
        }
        if (o.format == "text") {
            print_text(out, report, "");
        } else {
            out << report.dump(2) << "\n";
        }
        return 0;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qcx
