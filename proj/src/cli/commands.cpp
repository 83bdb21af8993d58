#include "ldef/cli/commands.hpp"

#include "ldef/algebra/primes.hpp"
#include "ldef/cli/document.hpp"
#include "ldef/graded/filiation.hpp"
#include "ldef/reduction/semidirect.hpp"
#include "ldef/versal/rigidity.hpp"
#include "ldef/versal/solver.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

namespace ldef {

namespace {

/// Raised for bad flag values; mapped to kExitUsage.
constexpr size_t kMaxFiliation = 32;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonFlags {
    bool json = false;
    bool no_torus = false;
    std::optional<unsigned> expand;
    std::optional<unsigned> cap;

    unsigned degree_cap() const { return cap.value_or(default_degree_cap()); }
};

struct Report {
    json inputs = json::object();
    json metadata = json::object();
    json results = json::object();
    int code = kExitOk;
};

struct Loaded {
    AlgebraDocument doc;
    GradedAlgebra g;
};

AlgebraDocument obtain_document(const std::string& spec) {
    const std::string prefix = "catalog:";
    if (spec.rfind(prefix, 0) == 0) {
        try {
            return catalog_generate(spec.substr(prefix.size()));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return read_document(spec);
}

Loaded load(const std::string& spec, const CommonFlags& flags, Report& rep, bool require_jacobi = true) {
    Loaded l{obtain_document(spec), {}};
    rep.inputs["documents"].push_back(to_json(l.doc));
    l.g = load_algebra(l.doc, require_jacobi);
    if (flags.no_torus) l.g.weights.clear();
    return l;
}

std::optional<DerivationSet> torus_of(const GradedAlgebra& g) {
    if (g.weights.empty()) return std::nullopt;
    return g.torus();
}

DeformationContext context_of(const GradedAlgebra& g) { return DeformationContext::make(g.algebra, torus_of(g)); }

bool simple_weights(const GradedAlgebra& g) {
    if (g.weights.empty()) return false;
    std::set<Weight> seen(g.weights.begin(), g.weights.end());
    return seen.size() == g.weights.size();
}

/// "X{i}_{j}" naming of a C^2 coordinate when the target is determined by the weights.
std::optional<std::string> graded_alias(const GradedAlgebra& g, size_t idx) {
    if (!simple_weights(g)) return std::nullopt;
    const size_t m = g.algebra.dim();
    auto [t, k] = CochainSpace(m, 2, m).at(idx);
    return "X" + std::to_string(t[0] + 1) + "_" + std::to_string(t[1] + 1);
}

std::vector<size_t> parse_coordinates(const std::string& list, const GradedAlgebra& g) {
    const size_t m = g.algebra.dim();
    CochainSpace s2(m, 2, m);
    std::vector<size_t> out;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        std::vector<size_t> parts;
        std::stringstream ns(name.substr(name[0] == 'X' ? 1 : 0));
        std::string p;
        try {
            while (std::getline(ns, p, '_')) parts.push_back(std::stoul(p));
        } catch (const std::exception&) {
            throw UsageError("bad coordinate name '" + name + "'");
        }
        if (parts.size() == 2 && simple_weights(g)) {
            if (parts[0] < 1 || parts[1] > m) throw UsageError("coordinate '" + name + "' out of range");
            Weight w = g.weights[parts[0] - 1];
            for (size_t r = 0; r < w.size(); ++r) w[r] += g.weights[parts[1] - 1][r];
            auto it = std::find(g.weights.begin(), g.weights.end(), w);
            if (it == g.weights.end()) throw UsageError("coordinate '" + name + "' has no target of matching weight");
            parts.push_back(static_cast<size_t>(it - g.weights.begin()) + 1);
        }
        if (parts.size() != 3 || parts[0] < 1 || parts[0] >= parts[1] || parts[1] > m || parts[2] < 1 || parts[2] > m)
            throw UsageError("bad coordinate name '" + name + "'");
        out.push_back(s2.index({parts[0] - 1, parts[1] - 1}, parts[2] - 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> parse_rationals(const std::string& list) {
    std::vector<Rational> out;
    std::stringstream ss(list);
    std::string x;
    try {
        while (std::getline(ss, x, ',')) out.push_back(parse_rational(x));
    } catch (const std::exception&) {
        throw UsageError("bad rational list '" + list + "'");
    }
    return out;
}

std::pair<size_t, size_t> parse_pair(const std::string& text) {
    auto v = parse_rationals(text);
    if (v.size() != 2 || sgn(v[0]) <= 0 || sgn(v[1]) <= 0 || v[0].get_den() != 1 || v[1].get_den() != 1)
        throw UsageError("expected a pair p,q of positive integers");
    return {v[0].get_num().get_ui() - 1, v[1].get_num().get_ui() - 1};
}

json names_of(const DeformationContext& ctx, const std::vector<size_t>& idx) {
    json a = json::array();
    for (size_t i : idx) a.push_back(ctx.coordinate_name(i));
    return a;
}

json cochain_json(const CochainSpace& s, const SparseVec& v) {
    json o = json::object();
    for (auto& [idx, c] : v) o[s.coordinate_name(idx)] = to_string(c);
    return o;
}

json polys_json(const std::vector<Poly>& ps) {
    json a = json::array();
    for (auto& p : ps) a.push_back(p.to_string());
    return a;
}

json fraction_json(const LocalFraction& f, const CommonFlags& flags) {
    if (!flags.expand) return f.to_string();
    return {{"fraction", f.to_string()}, {"series", series_expand(f, *flags.expand).to_string()}};
}

json kdim_json(const KDimension& k) {
    const char* kind = k.kind == DimKind::Finite ? "finite" : k.kind == DimKind::Infinite ? "infinite" : "unknown";
    json o = {{"kind", kind}, {"complete", k.complete}};
    if (k.finite()) o["value"] = k.value;
    return o;
}

json elimination_json(const LinearElimination& E, const CommonFlags& flags) {
    json values = json::object();
    for (auto& [name, f] : E.values) values[name] = fraction_json(f, flags);
    return {{"variables", E.ring->names()},
            {"generators", polys_json(E.generators)},
            {"eliminated", E.eliminated},
            {"values", values}};
}

json matrix_json(const Matrix& M) {
    json a = json::array();
    for (size_t r = 0; r < M.size(); ++r)
        for (size_t c = 0; c < M[r].size(); ++c)
            if (!is_zero(M[r][c])) a.push_back({{"row", r + 1}, {"col", c + 1}, {"value", to_string(M[r][c])}});
    return a;
}

json rigidity_json(const RigidityReport& r) {
    return {{"verdict", to_string(r.verdict)},
            {"k_dimension", kdim_json(r.k_dimension)},
            {"krull_zero", r.krull_zero},
            {"local_generators", polys_json(r.local.ideal.generators())}};
}

int rigidity_code(const RigidityReport& r) {
    return r.verdict == Verdict::Unknown || !r.k_dimension.complete ? kExitCap : kExitOk;
}

SlicePresentation make_slice(const GradedAlgebra& g, const std::string& admissible, Report& rep) {
    DeformationContext ctx = context_of(g);
    std::optional<SlicePresentation> S;
    if (admissible.empty()) {
        S = slice_presentation(ctx);
    } else {
        auto idx = parse_coordinates(admissible, g);
        AdmissibilityCheck c = check_admissible(ctx, idx);
        if (!c.admissible) throw DocumentError("admissible set rejected", {c.reason});
        S = slice_presentation(ctx, AdmissibleSet{idx, idx.size(), true});
    }
    rep.metadata["admissible"] = names_of(ctx, S->A.indices);
    rep.metadata["admissible_supplied"] = S->A.supplied;
    rep.metadata["invariance"] = ctx.complex->invariance_tag();
    rep.metadata["order_tag"] = S->ring->order_tag();
    return *S;
}

json family_json(const GradedFamily& F, const CommonFlags& flags) {
    json values = json::array();
    for (size_t p = 0; p < F.index.pairs.size(); ++p) {
        if (F.values[p].is_zero()) continue;
        values.push_back({{"name", F.index.name(F.index.pairs[p])}, {"value", fraction_json(F.values[p], flags)}});
    }
    json adm = json::array();
    for (auto& p : F.admissible) adm.push_back(F.index.name(p));
    return {{"dim", F.dim()},
            {"parameters", F.parameters()},
            {"generators", polys_json(F.generators)},
            {"admissible", adm},
            {"values", values}};
}

json step_json(const ExtensionFiberReport& s, bool simple) {
    json pairs = json::array(), rel = json::array();
    GradedIndexSet idx;
    idx.simple = simple;
    for (auto& p : s.new_pairs) pairs.push_back(idx.name(p));
    for (auto& t : s.relations)
        rel.push_back("J" + std::to_string(t.i + 1) + "_" + std::to_string(t.j + 1) + "_" + std::to_string(t.k + 1));
    json beta = json::array();
    for (auto& x : s.beta) beta.push_back(to_string(x));
    json o = {{"n", s.n},
              {"beta", beta},
              {"nu", s.nu},
              {"fiber_dim", s.fiber_dim},
              {"case", to_string(s.kind)},
              {"new_coordinates", pairs},
              {"relations", rel},
              {"solved", s.solved},
              {"new_parameters", s.new_parameters},
              {"eliminated", s.eliminated},
              {"leftover", s.leftover}};
    if (s.pivot) o["pivot"] = {s.pivot->i + 1, s.pivot->j + 1};
    return o;
}

void write_document(const AlgebraDocument& doc, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << to_json(doc).dump(2) << "\n";
}

// ---------------------------------------------------------------- text rendering

void render(const json& v, std::ostream& os, int indent);

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const json& v, std::ostream& os, int indent) {
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        for (auto& [k, x] : v.items()) {
            if (is_scalar(x)) {
                os << pad << k << ": " << scalar_text(x) << "\n";
            } else if (x.empty()) {
                os << pad << k << ": " << (x.is_array() ? "[]" : "{}") << "\n";
            } else if (x.is_array() && std::all_of(x.begin(), x.end(), is_scalar)) {
                os << pad << k << ": ";
                for (size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar_text(x[i]);
                os << "\n";
            } else {
                os << pad << k << ":\n";
                render(x, os, indent + 2);
            }
        }
    } else if (v.is_array()) {
        for (auto& x : v) {
            if (is_scalar(x)) {
                os << pad << "- " << scalar_text(x) << "\n";
            } else if (x.is_object() && std::all_of(x.begin(), x.end(), is_scalar)) {
                os << pad << "-";
                for (auto& [k, y] : x.items()) os << " " << k << "=" << scalar_text(y);
                os << "\n";
            } else {
                os << pad << "-\n";
                render(x, os, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(v) << "\n";
    }
}

// ---------------------------------------------------------------- subcommands

void cmd_check(const std::string& path, const CommonFlags& flags, Report& rep) {
    Loaded l = load(path, flags, rep, false);
    auto violations = check_jacobi(l.g.algebra);
    json vs = json::array();
    for (auto& v : violations) vs.push_back(describe(v));
    rep.results["dim"] = l.doc.dim;
    rep.results["brackets"] = l.doc.brackets.size();
    rep.results["jacobi"] = violations.empty() ? "holds" : "fails";
    rep.results["violations"] = vs;
    if (!violations.empty()) {
        rep.code = kExitInvalid;
        return;
    }
    rep.results["lower_central_series"] = lower_central_series(l.g.algebra);
    rep.results["nilpotent"] = is_nilpotent(l.g.algebra);
    if (!l.g.weights.empty()) {
        rep.results["torus_rank"] = l.g.weights.front().size();
        try {
            load_algebra(l.doc, true);
            rep.results["grading"] = "holds";
        } catch (const DocumentError& e) {
            rep.results["grading"] = "fails";
            rep.results["grading_problems"] = e.problems();
            rep.code = kExitInvalid;
        }
    }
}

void cmd_cohomology(const std::string& path, unsigned degree, const CommonFlags& flags, Report& rep) {
    Loaded l = load(path, flags, rep);
    CEComplex C = CEComplex::adjoint(l.g.algebra, torus_of(l.g));
    rep.metadata["invariance"] = C.invariance_tag();
    CohomologyReport h = C.cohomology(degree);
    const size_t m = l.g.algebra.dim();
    CochainSpace s(m, degree, m);
    json basis = json::array();
    for (auto& v : h.H_basis) basis.push_back(cochain_json(s, v));
    rep.results = {{"degree", degree}, {"dim_C", h.dim_C}, {"dim_Z", h.dim_Z},
                   {"dim_B", h.dim_B}, {"dim_H", h.dim_H}, {"H_basis", basis}};
}

void cmd_derivations(const std::string& path, const CommonFlags& flags, Report& rep) {
    Loaded l = load(path, flags, rep);
    std::optional<DerivationSet> T = torus_of(l.g);
    DerivationSet D = derivations(l.g.algebra, T ? &*T : nullptr);
    std::vector<Matrix> ad;
    for (size_t i = 0; i < l.g.algebra.dim(); ++i) ad.push_back(ad_matrix(l.g.algebra, i));
    json basis = json::array();
    for (auto& M : D.matrices) basis.push_back(matrix_json(M));
    rep.metadata["commuting_with_torus"] = T.has_value();
    rep.results = {{"dim_Der", D.size()},
                   {"dim_inner", span_dimension(ad)},
                   {"diagonal_rank", diagonal_derivations(l.g.algebra).size()},
                   {"basis", basis}};
}

void cmd_admissible(const std::string& path, const std::string& set, const CommonFlags& flags, Report& rep) {
    Loaded l = load(path, flags, rep);
    DeformationContext ctx = context_of(l.g);
    rep.metadata["invariance"] = ctx.complex->invariance_tag();
    AdmissibleSet A = admissible_set(ctx);
    rep.results["default"] = names_of(ctx, A.indices);
    rep.results["dim_B2"] = A.dim_B2;
    if (!set.empty()) {
        auto idx = parse_coordinates(set, l.g);
        AdmissibilityCheck c = check_admissible(ctx, idx);
        rep.results["candidate"] = names_of(ctx, idx);
        rep.results["admissible"] = c.admissible;
        if (!c.admissible) {
            rep.results["reason"] = c.reason;
            rep.code = kExitInvalid;
        }
    }
}

void cmd_slice(const std::string& path, const std::string& adm, const CommonFlags& flags, Report& rep) {
    Loaded l = load(path, flags, rep);
    SlicePresentation S = make_slice(l.g, adm, rep);
    LinearElimination E = eliminate_slice(S);
    rep.results = {{"free", names_of(S.ctx, S.free)},
                   {"tangent_dim", S.tangent_dim},
                   {"essential", S.essential_names()},
                   {"generators", polys_json(S.generator_list())},
                   {"elimination", elimination_json(E, flags)}};
}

void cmd_versal(const std::string& path, unsigned order, const std::string& adm, const CommonFlags& flags,
                Report& rep) {
    Loaded l = load(path, flags, rep);
    SlicePresentation S = make_slice(l.g, adm, rep);
    MaurerCartanSolution sol = solve_versal(S, order);
    rep.metadata["equation_rows"] = sol.equation_rows.size();
    rep.metadata["obstruction_rows"] = sol.obstruction_rows.size();
    json coords = json::array();
    for (size_t idx : S.free) {
        TruncatedSeries x = sol.coordinate(S, idx);
        if (x.is_zero()) continue;
        json e = {{"coordinate", S.ctx.coordinate_name(idx)}, {"series", x.to_string()}};
        if (auto a = graded_alias(l.g, idx)) e["graded"] = *a;
        coords.push_back(e);
    }
    json obs = json::array();
    for (size_t r = 0; r < sol.obstruction.size(); ++r)
        if (!sol.obstruction[r].is_zero())
            obs.push_back({{"row", CochainSpace(S.ctx.algebra.dim(), 3, S.ctx.algebra.dim())
                                       .coordinate_name(sol.obstruction_rows[r])},
                           {"series", sol.obstruction[r].to_string()}});
    rep.results = {{"order", order},
                   {"params", sol.params},
                   {"coordinates", coords},
                   {"obstruction", obs},
                   {"terminated", sol.terminated},
                   {"exact", sol.exact},
                   {"deformation", to_json(sol.deformation(S))}};
}

void cmd_normalize(const std::string& path, const std::string& def_path, const std::string& adm,
                   const CommonFlags& flags, Report& rep) {
    Loaded l = load(path, flags, rep);
    std::ifstream in(def_path);
    if (!in) throw DocumentError("cannot read " + def_path);
    json dj = json::parse(in, nullptr, false);
    if (dj.is_discarded()) throw DocumentError(def_path + " is not valid JSON");
    DeformationSeries phi = parse_deformation(dj, l.g.algebra);
    rep.inputs["deformation"] = to_json(phi);
    SlicePresentation S = make_slice(l.g, adm, rep);
    json w1 = json::array();
    const size_t m = l.g.algebra.dim();
    for (size_t c : gauge_complement(S)) w1.push_back(CochainSpace(m, 1, m).coordinate_name(c));
    rep.metadata["gauge_complement"] = w1;
    NormalizedDeformation N = normalize_to_slice(phi, S);
    bool on_slice = true;
    for (size_t a : S.A.indices) on_slice = on_slice && N.output.perturbation(a).is_zero();
    json gauge = json::array();
    for (size_t r = 0; r < N.gauge.dim; ++r)
        for (size_t c = 0; c < N.gauge.dim; ++c) {
            TruncatedSeries x = N.gauge.entries[r][c];
            if (r == c) x -= TruncatedSeries::constant(x.params(), x.order(), 1);
            if (!x.is_zero()) gauge.push_back({{"row", r + 1}, {"col", c + 1}, {"series", x.to_string()}});
        }
    rep.results = {{"on_slice", on_slice},
                   {"verified", gauge_act(N.gauge, phi) == N.output},
                   {"gauge_minus_identity", gauge},
                   {"output", to_json(N.output)}};
    if (!on_slice) rep.code = kExitInvalid;
}

void cmd_rigidity(const std::string& path, const std::string& adm, const std::string& at, const CommonFlags& flags,
                  Report& rep) {
    Loaded l = load(path, flags, rep);
    SlicePresentation S = make_slice(l.g, adm, rep);
    rep.metadata["degree_cap"] = flags.degree_cap();
    RigidityReport r = rigidity_test(S, flags.degree_cap());
    rep.results["tangent_dim"] = S.tangent_dim;
    rep.results["elimination"] = elimination_json(r.elimination, flags);
    rep.results["origin"] = rigidity_json(r);
    rep.code = rigidity_code(r);
    if (!at.empty()) {
        RationalVector p = parse_rationals(at);
        if (p.size() != r.elimination.ring->nvars())
            throw UsageError("--at expects " + std::to_string(r.elimination.ring->nvars()) + " values");
        RigidityReport q;
        try {
            q = rigidity_at(r.elimination, p, flags.degree_cap());
        } catch (const std::invalid_argument& e) {
            throw DocumentError("point rejected", {e.what()});
        }
        json pj = json::array();
        for (auto& x : p) pj.push_back(to_string(x));
        rep.results["point"] = pj;
        rep.results["at_point"] = rigidity_json(q);
        rep.code = std::max(rep.code, rigidity_code(q));
    }
}

RationalAssignment parse_pins(const std::vector<std::string>& pins) {
    RationalAssignment out;
    for (auto& p : pins) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw UsageError("pin '" + p + "' must read NAME=VALUE");
        try {
            out[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("pin '" + p + "' has a bad value");
        }
    }
    return out;
}

void cmd_extend(const std::string& path, const std::string& beta, const std::string& pivot,
                const std::vector<std::string>& pins, const std::string& output, const CommonFlags& flags,
                Report& rep) {
    Loaded l = load(path, flags, rep);
    if (l.g.weights.empty()) throw DocumentError("extend requires a torus");
    Weight b = parse_rationals(beta);
    if (b.size() != l.g.weights.front().size()) throw UsageError("--beta has the wrong rank");
    ExtensionOptions opt;
    if (!pivot.empty()) opt.pivot = parse_pair(pivot);
    opt.pins = parse_pins(pins);
    GradedFamily F = initial_family(l.g.algebra, l.g.weights);
    ExtensionFiberReport s = central_extension_step(F, b, opt);
    rep.results["step"] = step_json(s, F.index.simple);
    if (s.kind == FiberCase::NoFiber) {
        rep.code = kExitInvalid;
        return;
    }
    rep.results["family"] = family_json(s.family, flags);
    if (s.pivot) rep.metadata["pivot"] = {s.pivot->i + 1, s.pivot->j + 1};
    if (!output.empty()) write_document(document_of(GradedAlgebra{s.family.base(), s.family.weights}), output);
}

void cmd_filiate(const std::string& path_spec, size_t target, const std::string& from, const std::string& output,
                 const CommonFlags& flags, Report& rep) {
    WeightPath path;
    FiliationOptions opt;
    LieAlgebra initial;
    if (path_spec == "f") {
        if (target > kMaxFiliation) throw UsageError("--target must lie in 5.." + std::to_string(kMaxFiliation));
        path = f_family_path(std::max<size_t>(target, 5));
        initial = f_family(5).algebra;
    } else if (path_spec == "example52") {
        path = example52_path();
        initial = LieAlgebra(4);
        opt = example52_options();
    } else {
        std::ifstream in(path_spec);
        if (!in) throw DocumentError("cannot read " + path_spec);
        json pj = json::parse(in, nullptr, false);
        if (pj.is_discarded()) throw DocumentError(path_spec + " is not valid JSON");
        path = parse_weight_path(pj);
        initial = LieAlgebra(path.n0);
    }
    rep.inputs["path"] = to_json(path);
    if (!from.empty()) {
        Loaded l = load(from, flags, rep);
        initial = l.g.algebra;
    }
    if (initial.dim() != path.n0)
        throw DocumentError("initial law has dimension " + std::to_string(initial.dim()) + ", expected " +
                            std::to_string(path.n0));
    if (target < path.n0 || target > path.length())
        throw UsageError("--target must lie in " + std::to_string(path.n0) + ".." + std::to_string(path.length()));
    PathValidation pv = validate_weight_path(path);
    rep.metadata["path_valid"] = pv.valid();
    json pins = json::object(), pivots = json::object();
    for (auto& [n, pq] : opt.pivots) pivots[std::to_string(n)] = {pq.first + 1, pq.second + 1};
    for (auto& [n, a] : opt.pins) {
        json o = json::object();
        for (auto& [name, v] : a) o[name] = to_string(v);
        pins[std::to_string(n)] = o;
    }
    rep.metadata["pivots"] = pivots;
    rep.metadata["pins"] = pins;
    rep.metadata["normalization"] = "pivot coordinate set to 1";

    FiliationRun run = filiation_run(initial, path, target, opt);
    json steps = json::array();
    for (auto& s : run.steps) steps.push_back(step_json(s, path.simple));
    rep.results["steps"] = steps;
    rep.results["halted"] = run.halted;
    if (run.halted) rep.results["message"] = run.message;
    if (run.families.empty()) return;
    const GradedFamily& F = run.families.back();
    rep.results["family"] = family_json(F, flags);
    LinearElimination E = F.presentation();
    RigidityReport r = rigidity_at(E, RationalVector(E.ring->nvars(), 0), flags.degree_cap());
    rep.results["rigidity"] = rigidity_json(r);
    rep.metadata["degree_cap"] = flags.degree_cap();
    rep.code = rigidity_code(r);
    if (!output.empty()) write_document(document_of(GradedAlgebra{F.base(), F.weights}), output);
}

json induced_json(const InducedMap& m) {
    json o = {{"degree", m.degree}, {"source_dim", m.source_dim}, {"rank", m.rank}, {"injective", m.injective}};
    if (m.target_dim) o["target_dim"] = *m.target_dim;
    if (m.surjective) o["surjective"] = *m.surjective;
    return o;
}

void cmd_reduce(const std::string& path, bool full_h3, const CommonFlags& flags, Report& rep) {
    Loaded l = load(path, flags, rep);
    SemidirectData S;
    try {
        S = torus_semidirect(l.g);
    } catch (const std::invalid_argument& e) {
        throw DocumentError("semidirect product rejected", {e.what()});
    }
    rep.metadata["full_h3"] = full_h3;
    rep.metadata["reductive_dim"] = S.r();
    HypothesisReport h = check_reduction_hypotheses(S, {full_h3});
    rep.results = {{"dim_g", S.assembled.dim()},
                   {"i1", induced_json(h.i1)},
                   {"i2", induced_json(h.i2)},
                   {"i3", induced_json(h.i3)},
                   {"h1_epi", h.h1_epi},
                   {"h2_iso", h.h2_iso},
                   {"h3_mono", h.h3_mono},
                   {"hypotheses", h.hypotheses()},
                   {"h1_quotient", h.h1_quotient},
                   {"h2_quotient", h.h2_quotient},
                   {"torus_part", h.torus_part},
                   {"complete", h.complete},
                   {"case", to_string(h.prop32)}};
}

void cmd_stratum(const std::string& path, const CommonFlags& flags, Report& rep) {
    Loaded l = load(path, flags, rep);
    if (l.g.weights.empty()) throw DocumentError("stratum requires a torus");
    StratumReport s = stratum_check(l.g.algebra, l.g.weights);
    rep.results = {{"in_open_stratum", s.in_open_stratum}, {"der_T_dim", s.der_T_dim}, {"torus_dim", s.torus_dim}};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Versal deformations and graded filiations of Lie algebras", "ldef"};
    app.require_subcommand(1, 1);
    CommonFlags flags;
    auto common = [&](CLI::App* c) {
        c->add_flag("--json", flags.json, "Print the report as JSON");
        c->add_flag("--no-torus", flags.no_torus, "Ignore the torus of the document");
        c->add_option("--expand", flags.expand, "Also show fractions as series to this order");
        c->add_option("--cap", flags.cap, "Groebner degree cap (default from LDEF_DEGREE_CAP)");
    };
    std::string doc, second, adm, at, beta, pivot, output, from, name;
    std::vector<std::string> pins;
    unsigned degree = 2, order = 4;
    size_t target = 0;
    std::optional<size_t> size;
    bool full_h3 = false;

    auto add = [&](const char* cmd, const char* help) {
        CLI::App* c = app.add_subcommand(cmd, help);
        common(c);
        return c;
    };
    CLI::App* check = add("check", "Validate a document and the Jacobi identity");
    check->add_option("doc", doc, "Algebra document")->required();
    CLI::App* coh = add("cohomology", "Adjoint cohomology in one degree");
    coh->add_option("doc", doc)->required();
    coh->add_option("--degree", degree, "Cochain degree")->check(CLI::Range(0, 6));
    CLI::App* der = add("derivations", "Derivations, commuting with the torus when present");
    der->add_option("doc", doc)->required();
    CLI::App* admc = add("admissible", "Default admissible set, or check a candidate");
    admc->add_option("doc", doc)->required();
    admc->add_option("--set", adm, "Comma-separated coordinates such as X1_2_3");
    CLI::App* slice = add("slice", "Slice presentation and its local elimination");
    slice->add_option("doc", doc)->required();
    slice->add_option("--admissible", adm, "Comma-separated coordinates");
    CLI::App* ver = add("versal", "Versal deformation series");
    ver->add_option("doc", doc)->required();
    ver->add_option("--order", order, "Truncation order")->check(CLI::Range(1, 40));
    ver->add_option("--admissible", adm, "Comma-separated coordinates");
    CLI::App* norm = add("normalize", "Gauge a deformation onto the slice");
    norm->add_option("doc", doc)->required();
    norm->add_option("deformation", second, "Deformation document")->required();
    norm->add_option("--admissible", adm, "Comma-separated coordinates");
    CLI::App* rig = add("rigidity", "Formal rigidity from the local slice ring");
    rig->add_option("doc", doc)->required();
    rig->add_option("--admissible", adm, "Comma-separated coordinates");
    rig->add_option("--at", at, "Point of the eliminated presentation, comma-separated");
    CLI::App* ext = add("extend", "One central extension step of the graded family");
    ext->add_option("doc", doc)->required();
    ext->add_option("--beta", beta, "Weight of the new basis vector, comma-separated")->required();
    ext->add_option("--pivot", pivot, "Pivot pair p,q (1-based)");
    ext->add_option("--pin", pins, "NAME=VALUE for a new coordinate kept free");
    ext->add_option("--output", output, "Write the extended base law");
    CLI::App* fil = add("filiate", "Successive central extensions along a weight path");
    fil->add_option("--path", second, "f, example52 or a weight path file")->required();
    fil->add_option("--target", target, "Final dimension")->required();
    fil->add_option("--from", from, "Initial law (default: the path's standard start)");
    fil->add_option("--output", output, "Write the final base law");
    CLI::App* red = add("reduce-check", "Reduction hypotheses for the torus semidirect product");
    red->add_option("doc", doc)->required();
    red->add_flag("--full-h3", full_h3, "Also compute H^3 of the semidirect product");
    CLI::App* str = add("stratum", "Open stratum test for the torus");
    str->add_option("doc", doc)->required();
    CLI::App* cat = add("catalog", "Generate a catalog document");
    cat->add_option("name", name, "f, witt, abelian, example52, heisenberg, sl2 (optionally with _SIZE)")->required();
    cat->add_option("size", size, "Size");
    cat->add_option("--output", output, "Write the document to a file");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();

    Report rep;
    rep.inputs["args"] = args;
    rep.inputs["documents"] = json::array();
    try {
        if (cmd == "check") cmd_check(doc, flags, rep);
        else if (cmd == "cohomology") cmd_cohomology(doc, degree, flags, rep);
        else if (cmd == "derivations") cmd_derivations(doc, flags, rep);
        else if (cmd == "admissible") cmd_admissible(doc, adm, flags, rep);
        else if (cmd == "slice") cmd_slice(doc, adm, flags, rep);
        else if (cmd == "versal") cmd_versal(doc, order, adm, flags, rep);
        else if (cmd == "normalize") cmd_normalize(doc, second, adm, flags, rep);
        else if (cmd == "rigidity") cmd_rigidity(doc, adm, at, flags, rep);
        else if (cmd == "extend") cmd_extend(doc, beta, pivot, pins, output, flags, rep);
        else if (cmd == "filiate") cmd_filiate(second, target, from, output, flags, rep);
        else if (cmd == "reduce-check") cmd_reduce(doc, full_h3, flags, rep);
        else if (cmd == "stratum") cmd_stratum(doc, flags, rep);
        else if (cmd == "catalog") {
            AlgebraDocument d;
            try {
                d = catalog_generate(name, size);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (!output.empty()) write_document(d, output);
            if (!flags.json) {
                if (output.empty()) out << to_json(d).dump(2) << "\n";
                return kExitOk;
            }
            rep.results["document"] = to_json(d);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << "\n";
        for (auto& p : e.problems()) err << "  " << p << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    json report = {{"command", args},
                   {"inputs_digest", digest(rep.inputs)},
                   {"metadata", rep.metadata},
                   {"results", rep.results},
                   {"exact", true},
                   {"exit_code", rep.code}};
    if (flags.json) {
        out << report.dump(2) << "\n";
    } else {
        std::string echo;
        for (auto& a : args) echo += (echo.empty() ? "" : " ") + a;
        out << "command: " << echo << "\n";
        out << "inputs_digest: " << report["inputs_digest"].get<std::string>() << "\n";
        out << "exact: true\n";
        if (!rep.metadata.empty()) {
            out << "metadata:\n";
            render(rep.metadata, out, 2);
        }
        out << "results:\n";
        render(rep.results, out, 2);
    }
    return rep.code;
}

}  // namespace ldef
