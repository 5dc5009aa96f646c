#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "blowup.hpp"
#include "criterion.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "parser.hpp"
#include "rees_cohomology.hpp"
#include "schema.hpp"
#include "schemas.hpp"
#include "simplicial.hpp"
#include "sr_cohomology.hpp"

namespace gradealg::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_limit = 2;
inline constexpr int exit_negative = 3;

inline constexpr int max_degree_bound = 24;
inline constexpr long max_window_width = 4096;

enum class Command { check_iso, presentation, hilbert, cohomology, gencm, dim };

inline const std::vector<std::pair<std::string, Command>>& command_table() {
    static const std::vector<std::pair<std::string, Command>> table{
        {"check-iso", Command::check_iso}, {"presentation", Command::presentation},
        {"hilbert", Command::hilbert},     {"cohomology", Command::cohomology},
        {"gencm", Command::gencm},         {"dim", Command::dim},
    };
    return table;
}

inline std::optional<Command> parse_command(std::string_view name) {
    for (const auto& [n, c] : command_table())
        if (n == name) return c;
    return std::nullopt;
}

inline std::string to_string(Command c) {
    for (const auto& [n, cmd] : command_table())
        if (cmd == c) return n;
    return "none";
}

enum class Module { A, R };

/// Command-line overrides; each takes precedence over the input file.
struct Options {
    std::optional<std::string> field;
    std::optional<std::pair<long, long>> window;
    bool allow_linear = false;
    Module module = Module::A;
};

/// Parsed problem description. Facets are 0-based indices into `variables`.
struct ProblemSpec {
    std::string field = "Q";
    std::vector<std::string> variables;
    std::optional<std::vector<std::string>> J;
    std::optional<std::vector<std::vector<std::size_t>>> facets;
    std::vector<std::string> I;
    std::optional<std::pair<long, long>> window;
    int level_bound = default_level_bound;
    int degree_bound = default_degree_bound;
    bool allow_linear = false;
};

struct Report {
    json body;
    std::string text;
    int exit_code = exit_ok;
};

inline const SchemaValidator& input_validator() {
    static const SchemaValidator v(json::parse(input_schema_text));
    return v;
}

inline const SchemaValidator& report_validator() {
    static const SchemaValidator v(json::parse(report_schema_text));
    return v;
}

inline long parse_long(std::string_view s, std::string_view what) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InputError("bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

/// "lo:hi" with lo <= hi.
inline std::pair<long, long> parse_window(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw InputError("window must look like lo:hi, got '" + std::string(text) + "'");
    long lo = parse_long(text.substr(0, colon), "window bound");
    long hi = parse_long(text.substr(colon + 1), "window bound");
    if (lo > hi) throw InputError("empty window " + std::string(text));
    return {lo, hi};
}

/// "Q", "GF(p)" or "GFp".
inline std::variant<Rationals, PrimeField> make_field(std::string_view name) {
    if (name == "Q") return Rationals{};
    if (name.rfind("GF", 0) == 0) {
        auto digits = name.substr(2);
        if (digits.size() >= 2 && digits.front() == '(' && digits.back() == ')')
            digits = digits.substr(1, digits.size() - 2);
        long p = parse_long(digits, "characteristic");
        if (p < 2 || p >= (1L << 31)) throw InputError("characteristic out of range: " + std::string(name));
        return PrimeField(static_cast<std::uint32_t>(p));
    }
    throw InputError("unknown field '" + std::string(name) + "' (expected Q or GFp)");
}

inline ProblemSpec parse_spec(const json& doc) {
    auto errs = input_validator().errors(doc);
    if (!errs.empty()) throw InputError("input does not match the schema: " + errs.front());
    ProblemSpec spec;
    if (doc.contains("field")) spec.field = doc["field"];
    spec.variables = doc["variables"].get<std::vector<std::string>>();
    spec.I = doc["I"].get<std::vector<std::string>>();
    if (doc.contains("J")) spec.J = doc["J"].get<std::vector<std::string>>();
    if (doc.contains("facets")) {
        std::vector<std::vector<std::size_t>> facets;
        for (const auto& f : doc["facets"]) {
            std::vector<std::size_t> face;
            for (const auto& v : f) {
                if (v.is_string()) {
                    auto it = std::find(spec.variables.begin(), spec.variables.end(), v.get<std::string>());
                    if (it == spec.variables.end()) throw InputError("facet uses unknown variable " + v.dump());
                    face.push_back(static_cast<std::size_t>(it - spec.variables.begin()));
                } else {
                    long k = v.get<long>();
                    if (k < 1 || k > static_cast<long>(spec.variables.size()))
                        throw InputError("facet vertex " + std::to_string(k) + " is not a 1-based variable index");
                    face.push_back(static_cast<std::size_t>(k - 1));
                }
            }
            facets.push_back(std::move(face));
        }
        spec.facets = std::move(facets);
    }
    if (doc.contains("options")) {
        const auto& o = doc["options"];
        if (o.contains("window")) {
            if (o["window"].size() != 2) throw InputError("options.window needs exactly [lo, hi]");
            spec.window = std::pair<long, long>{o["window"][0].get<long>(), o["window"][1].get<long>()};
            if (spec.window->first > spec.window->second) throw InputError("options.window is empty");
        }
        if (o.contains("level_bound")) spec.level_bound = o["level_bound"];
        if (o.contains("degree_bound")) spec.degree_bound = o["degree_bound"];
        if (o.contains("allow_linear")) spec.allow_linear = o["allow_linear"];
    }
    if (spec.degree_bound > max_degree_bound)
        throw LimitExceeded("degree bound " + std::to_string(spec.degree_bound) + " exceeds " +
                            std::to_string(max_degree_bound));
    return spec;
}

inline ProblemSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return parse_spec(doc);
}

template <class F>
struct Problem {
    RingPtr<F> ring;
    Ideal<F> J;
    std::vector<Polynomial<F>> I;
    std::optional<SimplicialComplex> complex;  ///< when given by facets
};

template <class F>
Problem<F> build_problem(const ProblemSpec& spec, const F& field) {
    Problem<F> p;
    p.ring = make_ring(field, spec.variables);
    if (spec.J) {
        std::vector<Polynomial<F>> gens;
        for (const auto& s : *spec.J) gens.push_back(parse_poly(s, p.ring));
        p.J = Ideal<F>(p.ring, gens);
    } else {
        const auto n = spec.variables.size();
        if (n > max_sr_vertices)
            throw LimitExceeded(std::to_string(n) + " vertices exceed the bound " + std::to_string(max_sr_vertices));
        std::vector<std::size_t> verts(n);
        for (std::size_t i = 0; i < n; ++i) verts[i] = i;
        p.complex = SimplicialComplex(verts, *spec.facets);
        p.J = stanley_reisner_ideal(*p.complex, p.ring);
    }
    for (const auto& s : spec.I) p.I.push_back(parse_poly(s, p.ring));
    return p;
}

namespace detail {

template <class F>
json poly_strings(const std::vector<Polynomial<F>>& polys) {
    json out = json::array();
    for (const auto& g : polys) out.push_back(to_string(g));
    return out;
}

template <class F>
json ideal_strings(const Ideal<F>& I) {
    return I.is_zero() ? json::array() : poly_strings(canonical(I).generators());
}

inline json names_of(const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
    json out = json::array();
    for (auto i : idx) out.push_back(names.at(i));
    return out;
}

inline json complex_json(const SimplicialComplex& delta, const std::vector<std::string>& names) {
    json facets = json::array();
    for (const auto& f : delta.facets()) facets.push_back(names_of(names, f));
    return json{{"vertices", names_of(names, delta.vertices())}, {"facets", facets}};
}

inline json index_json(const CohomologyIndex& idx, int i) {
    json points = json::array();
    for (auto p : idx.support.points()) points.push_back(p);
    json ray = idx.support.ray_top() ? json(*idx.support.ray_top()) : json(nullptr);
    return json{{"index", i},
                {"support", {{"points", points}, {"ray_top", ray}}},
                {"zero", idx.is_zero()},
                {"finite_length", idx.finite_length()},
                {"vanishes_below_minus_one", idx.vanishes_below_minus_one()},
                {"dims", idx.dims}};
}

inline json indices_json(const CohomologyWindow& w) {
    json out = json::array();
    for (int i = 0; i <= w.max_index(); ++i) out.push_back(index_json(w.indices[i], i));
    return out;
}

template <class F>
json presentation_json(const ReesPresentation<F>& p) {
    json vars = json::array();
    for (std::size_t i = 0; i < p.ring->nvars(); ++i)
        vars.push_back({{"name", p.ring->names[i]}, {"degree", p.internal_degree[i]}, {"level", p.level[i]}});
    json gens = json::array();
    for (const auto& g : p.defining_ideal.generators()) {
        auto bg = p.bigrading_of(g);
        if (!bg) throw std::logic_error("presentation generator is not bihomogeneous: " + to_string(g));
        gens.push_back({{"poly", to_string(g)}, {"degree", bg->first}, {"level", bg->second}});
    }
    return json{{"ring", p.ring->names}, {"variables", vars}, {"generators", gens}};
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

inline std::string list_text(const json& a) {
    if (a.is_null()) return "-";
    std::vector<std::string> parts;
    for (const auto& x : a) parts.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    return "[" + join(parts) + "]";
}

inline std::string maybe_int_text(const std::optional<long>& v) { return v ? std::to_string(*v) : "-inf"; }

inline std::string window_text(const json& indices, long lo, long hi) {
    std::ostringstream out;
    out << "  degrees " << lo << ".." << hi << "\n";
    for (const auto& idx : indices) {
        out << "  H^" << idx["index"].get<int>() << ":";
        for (const auto& d : idx["dims"]) out << " " << d.get<std::int64_t>();
        out << (idx["finite_length"].get<bool>() ? "" : "  (infinite length)") << "\n";
    }
    return out.str();
}

template <class F>
json header(Command c, const Problem<F>& p) {
    return json{{"command", to_string(c)}, {"status", "ok"}, {"field", p.ring->field.name()},
                {"variables", p.ring->names}};
}

template <class F>
SimplicialComplex squarefree_complex(const Problem<F>& p) {
    return p.complex ? *p.complex : complex_from_ideal(p.J);
}

inline std::pair<long, long> pick_window(const ProblemSpec& spec, const Options& opts) {
    auto w = opts.window ? *opts.window
                         : spec.window.value_or(std::pair<long, long>{default_window_lo, default_window_hi});
    if (w.second - w.first + 1 > max_window_width)
        throw LimitExceeded("window wider than " + std::to_string(max_window_width) + " degrees");
    return w;
}

inline CriterionOptions criterion_options(const ProblemSpec& spec, const Options& opts) {
    return CriterionOptions{spec.allow_linear || opts.allow_linear};
}

}  // namespace detail

template <class F>
Report cmd_check_iso(const Problem<F>& p, const ProblemSpec& spec, const Options& opts) {
    auto d = decide_and_verify(p.J, p.I, detail::criterion_options(spec, opts));
    const auto& names = p.ring->names;
    const int D = spec.degree_bound;

    auto A = hilbert_function(p.J, D).dims;
    std::vector<Polynomial<F>> f;
    for (const auto& g : p.I)
        if (!ideal_member(g, p.J)) f.push_back(g);
    auto bigraded = bigraded_hilbert_G(p.J, f, D, D);
    std::vector<std::int64_t> G(D + 1, 0);
    for (const auto& row : bigraded.dims)
        for (int k = 0; k <= D; ++k) G[k] += row[k];

    json B = nullptr, C = nullptr, JB = nullptr, JC = nullptr;
    if (d.B) {
        B = detail::names_of(names, *d.B);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (std::find(d.B->begin(), d.B->end(), i) == d.B->end()) rest.push_back(i);
        C = detail::names_of(names, rest);
    }
    if (d.witness) {
        JB = detail::ideal_strings(d.witness->JB);
        JC = detail::ideal_strings(d.witness->JC);
    }
    json reason = d.failure_reason ? json(to_string(*d.failure_reason)) : json(nullptr);

    Report r;
    r.body = detail::header(Command::check_iso, p);
    r.body["J"] = detail::ideal_strings(p.J);
    r.body["I"] = detail::poly_strings(p.I);
    r.body["isomorphic"] = d.isomorphic;
    r.body["verified"] = d.verified;
    r.body["reason"] = reason;
    r.body["B"] = B;
    r.body["C"] = C;
    r.body["JB"] = JB;
    r.body["JC"] = JC;
    r.body["hilbert_evidence"] = {{"degree_bound", D}, {"A", A}, {"G", G}, {"equal", A == G}};
    r.body["warnings"] = d.warnings;
    r.exit_code = d.isomorphic && d.verified ? exit_ok : exit_negative;

    std::ostringstream t;
    t << "isomorphic: " << (d.isomorphic ? "yes" : "no");
    if (d.isomorphic) t << (d.verified ? " (verified)" : " (verification FAILED)");
    if (d.failure_reason) t << " (" << to_string(*d.failure_reason) << ")";
    t << "\nB = " << detail::list_text(B) << "\nC = " << detail::list_text(C) << "\n";
    if (d.witness) t << "JB = " << detail::list_text(JB) << "\nJC = " << detail::list_text(JC) << "\n";
    t << "dim A_d  (d <= " << D << "): " << detail::list_text(json(A)) << "\n";
    t << "dim G_d  (d <= " << D << "): " << detail::list_text(json(G)) << "\n";
    r.text = t.str();
    return r;
}

template <class F>
Report cmd_presentation(const Problem<F>& p, const ProblemSpec&, const Options&) {
    auto rees = rees_presentation(p.J, p.I);
    auto gr = assoc_graded_presentation(p.J, p.I);
    bool passed = true;
    for (const auto& g : gr.defining_ideal.generators()) passed = passed && lemma1_membership_check(g, gr);

    Report r;
    r.body = detail::header(Command::presentation, p);
    r.body["J"] = detail::ideal_strings(p.J);
    r.body["I"] = detail::poly_strings(p.I);
    r.body["rees"] = detail::presentation_json(rees);
    r.body["assoc_graded"] = detail::presentation_json(gr);
    r.body["lemma_check"] = {{"checked", gr.defining_ideal.generators().size()}, {"passed", passed}};
    r.body["warnings"] = json::array();

    std::ostringstream t;
    t << "ring: " << detail::join(rees.ring->names) << "\n";
    t << "Rees ideal: " << detail::list_text(detail::ideal_strings(rees.defining_ideal)) << "\n";
    t << "Ker psi:    " << detail::list_text(detail::ideal_strings(gr.defining_ideal)) << "\n";
    t << "lemma check: " << (passed ? "passed" : "FAILED") << "\n";
    r.text = t.str();
    return r;
}

template <class F>
Report cmd_hilbert(const Problem<F>& p, const ProblemSpec& spec, const Options&) {
    const int D = spec.degree_bound, N = spec.level_bound;
    auto A = hilbert_function(p.J, D).dims;
    auto G = bigraded_hilbert_G(p.J, p.I, N, D);
    std::vector<std::int64_t> total(D + 1, 0);
    for (const auto& row : G.dims)
        for (int k = 0; k <= D; ++k) total[k] += row[k];
    bool telescoping = true;
    for (int k = 0; k <= std::min(D, N); ++k) telescoping = telescoping && total[k] == A[k];

    Report r;
    r.body = detail::header(Command::hilbert, p);
    r.body["J"] = detail::ideal_strings(p.J);
    r.body["I"] = detail::poly_strings(p.I);
    r.body["degree_bound"] = D;
    r.body["level_bound"] = N;
    r.body["A"] = A;
    r.body["G"] = G.dims;
    r.body["G_total"] = total;
    r.body["telescoping"] = telescoping;
    r.body["warnings"] = json::array();

    std::ostringstream t;
    t << "dim A_d: " << detail::list_text(json(A)) << "\n";
    for (int n = 0; n <= N; ++n) t << "dim (I^" << n << "/I^" << n + 1 << ")_d: " << detail::list_text(json(G.dims[n])) << "\n";
    t << "telescoping: " << (telescoping ? "holds" : "FAILS") << "\n";
    r.text = t.str();
    return r;
}

template <class F>
Report cmd_cohomology(const Problem<F>& p, const ProblemSpec& spec, const Options& opts) {
    auto delta = detail::squarefree_complex(p);
    auto [lo, hi] = detail::pick_window(spec, opts);
    const auto& names = p.ring->names;
    const auto& field = p.ring->field;

    Report r;
    r.body = detail::header(Command::cohomology, p);
    r.body["complex"] = detail::complex_json(delta, names);
    CohomologyWindow w;
    if (opts.module == Module::A) {
        HochsterData h(delta, field);
        w = h.window(lo, hi);
        r.body["module"] = "A";
        r.body["B"] = nullptr;
        r.body["C"] = nullptr;
        r.body["dim"] = h.dim();
    } else {
        auto data = split_sr_data(p.J, p.I, detail::criterion_options(spec, opts));
        w = rees_cohomology_window(data, lo, hi);
        r.body["module"] = "R";
        r.body["B"] = detail::names_of(names, data.B);
        r.body["C"] = detail::names_of(names, data.C);
        r.body["dim"] = dim_rees(delta, data.B);
    }
    r.body["window"] = {lo, hi};
    r.body["indices"] = detail::indices_json(w);
    r.body["warnings"] = json::array();

    std::ostringstream t;
    t << "local cohomology of " << (opts.module == Module::A ? "A" : "R = A[It]") << ", dim "
      << r.body["dim"].get<int>() << "\n"
      << detail::window_text(r.body["indices"], lo, hi);
    r.text = t.str();
    return r;
}

template <class F>
Report cmd_gencm(const Problem<F>& p, const ProblemSpec& spec, const Options& opts) {
    auto delta = detail::squarefree_complex(p);
    auto [lo, hi] = detail::pick_window(spec, opts);
    const auto& names = p.ring->names;
    auto data = split_sr_data(p.J, p.I, detail::criterion_options(spec, opts));
    auto v = gencm_decide(data);
    auto wA = HochsterData(delta, p.ring->field).window(lo, hi);
    auto wR = rees_cohomology_window(data, lo, hi);
    const auto& e = v.evidence;

    Report r;
    r.body = detail::header(Command::gencm, p);
    r.body["complex"] = detail::complex_json(delta, names);
    r.body["B"] = detail::names_of(names, data.B);
    r.body["C"] = detail::names_of(names, data.C);
    r.body["gencm"] = v.gencm;
    r.body["case"] = to_string(v.gencm_case);
    r.body["scope"] = v.precondition_A_gencm ? "in-theorem-scope" : "out-of-theorem-scope";
    r.body["dim_R"] = v.dim_R;
    r.body["cm_R"] = v.cm_R;
    r.body["cm_A"] = v.cm_A;
    r.body["a_A"] = v.a_A ? json(*v.a_A) : json(nullptr);
    r.body["precondition_A_gencm"] = v.precondition_A_gencm;
    r.body["factors_gencm"] = v.factors_gencm;
    r.body["lemma_consistent"] = !v.precondition_A_gencm || v.factors_gencm;
    r.body["assembled_gencm"] = v.assembled_gencm;
    r.body["d1"] = v.d1;
    r.body["d2"] = v.d2;
    r.body["a_A1"] = v.a_A1 ? json(*v.a_A1) : json(nullptr);
    r.body["evidence"] = {{"I_in_all_top_primes", e.I_in_all_top_primes},
                          {"dimA2_zero", e.dimA2_zero},
                          {"a_A1_negative", e.a_A1_negative},
                          {"H_d1m1_A1_below_minus_two_zero", e.H_d1m1_A1_below_minus_two_zero},
                          {"H_d2m1_A2_zero", e.H_d2m1_A2_zero}};
    r.body["windows"] = {{"window", {lo, hi}}, {"A", detail::indices_json(wA)}, {"R", detail::indices_json(wR)}};
    r.body["warnings"] = json::array();
    r.exit_code = v.gencm ? exit_ok : exit_negative;

    std::ostringstream t;
    t << "generalized Cohen-Macaulay: " << (v.gencm ? "yes" : "no") << " (" << to_string(v.gencm_case) << ")";
    if (!v.precondition_A_gencm) t << " [A is not generalized CM: out of theorem scope]";
    t << "\nCohen-Macaulay: " << (v.cm_R ? "yes" : "no") << "\ndim R = " << v.dim_R << ", d1 = " << v.d1
      << ", d2 = " << v.d2 << ", a(A) = " << detail::maybe_int_text(v.a_A)
      << ", a(A1) = " << detail::maybe_int_text(v.a_A1) << "\n";
    t << "assembled local cohomology of R agrees: " << (v.assembled_gencm == v.gencm ? "yes" : "no") << "\n";
    r.text = t.str();
    return r;
}

template <class F>
Report cmd_dim(const Problem<F>& p, const ProblemSpec&, const Options&) {
    auto delta = detail::squarefree_complex(p);
    auto inv = sr_invariants(delta, p.ring->field);
    int dim_R;
    if (auto B = variable_subset_basis(p.I, p.J)) dim_R = dim_rees(delta, *B);
    else dim_R = krull_dim(rees_presentation(p.J, p.I).defining_ideal);

    Report r;
    r.body = detail::header(Command::dim, p);
    r.body["complex"] = detail::complex_json(delta, p.ring->names);
    r.body["dim_A"] = inv.dim_A;
    r.body["dim_R"] = dim_R;
    r.body["depth_A"] = inv.depth_A;
    r.body["a_invariant"] = inv.a_invariant ? json(*inv.a_invariant) : json(nullptr);
    r.body["warnings"] = json::array();

    std::ostringstream t;
    t << "dim A = " << inv.dim_A << ", depth A = " << inv.depth_A << ", a(A) = " << detail::maybe_int_text(inv.a_invariant)
      << ", dim R = " << dim_R << "\n";
    r.text = t.str();
    return r;
}

template <class F>
Report dispatch(Command c, const Problem<F>& p, const ProblemSpec& spec, const Options& opts) {
    switch (c) {
        case Command::check_iso: return cmd_check_iso(p, spec, opts);
        case Command::presentation: return cmd_presentation(p, spec, opts);
        case Command::hilbert: return cmd_hilbert(p, spec, opts);
        case Command::cohomology: return cmd_cohomology(p, spec, opts);
        case Command::gencm: return cmd_gencm(p, spec, opts);
        case Command::dim: return cmd_dim(p, spec, opts);
    }
    throw std::logic_error("unknown command");
}

inline Report error_report(Command c, const std::string& kind, const std::string& message, int code) {
    Report r;
    r.body = json{{"command", to_string(c)}, {"status", "error"}, {"error", kind}, {"message", message},
                  {"exit_code", code}};
    r.text = "error: " + message + "\n";
    r.exit_code = code;
    return r;
}

/// Throws std::logic_error when a report does not match the published schema.
inline void validate_report(const json& body) {
    auto errs = report_validator().errors(body);
    if (!errs.empty()) throw std::logic_error("report violates the schema: " + errs.front());
}

template <class Body>
Report guarded(Command c, Body&& body) {
    Report r;
    try {
        r = body();
    } catch (const LimitExceeded& e) {
        r = error_report(c, "limit", e.what(), exit_limit);
    } catch (const InputError& e) {
        r = error_report(c, "input", e.what(), exit_input);
    }
    validate_report(r.body);
    return r;
}

inline Report run(Command c, const ProblemSpec& spec, const Options& opts = {}) {
    return guarded(c, [&] {
        auto field = make_field(opts.field.value_or(spec.field));
        return std::visit([&](const auto& fld) { return dispatch(c, build_problem(spec, fld), spec, opts); }, field);
    });
}

inline Report run_file(Command c, const std::string& path, const Options& opts = {}) {
    return guarded(c, [&] {
        auto spec = load_spec(path);
        auto field = make_field(opts.field.value_or(spec.field));
        return std::visit([&](const auto& fld) { return dispatch(c, build_problem(spec, fld), spec, opts); }, field);
    });
}

/// Two-space indented JSON with a trailing newline.
inline std::string dump(const json& body) { return body.dump(2) + "\n"; }

}  // namespace gradealg::cli
