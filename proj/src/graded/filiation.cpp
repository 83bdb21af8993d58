#include "ldef/graded/filiation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldef {

namespace {

Weight add(const Weight& a, const Weight& b) {
    Weight s(a.size());
    for (size_t r = 0; r < a.size(); ++r) s[r] = a[r] + b[r];
    return s;
}

RationalVector origin(const RingPtr& ring) { return RationalVector(ring->nvars(), 0); }

LocalFraction lift(const LocalFraction& f, const RingPtr& ring) {
    return LocalFraction(f.num().to_ring(ring), f.den().to_ring(ring), origin(ring));
}

LocalFraction constant(const RingPtr& ring, const Rational& c) {
    return LocalFraction::from_poly(Poly::constant(ring, c), origin(ring));
}

// Same exponents in a ring of the same arity with other names.
Poly rename(const Poly& p, const RingPtr& ring) { return Poly::from_terms(ring, p.terms()); }

}  // namespace

const LocalFraction& GradedFamily::value(size_t i, size_t j) const {
    for (size_t a = 0; a < index.pairs.size(); ++a)
        if (index.pairs[a].i == i && index.pairs[a].j == j) return values[a];
    throw std::out_of_range("no graded coordinate for this pair");
}

std::optional<LocalFraction> GradedFamily::value(const std::string& name) const {
    for (size_t a = 0; a < index.pairs.size(); ++a)
        if (index.name(index.pairs[a]) == name) return values[a];
    return std::nullopt;
}

LieAlgebra GradedFamily::law_at(const RationalVector& point) const {
    LieAlgebra L(dim());
    for (size_t a = 0; a < index.pairs.size(); ++a) {
        Rational v = values[a].evaluate(point);
        if (!is_zero(v)) L.set(index.pairs[a].i, index.pairs[a].j, index.pairs[a].k, v);
    }
    return L;
}

LinearElimination GradedFamily::presentation() const {
    LinearElimination E;
    E.ring = ring;
    E.generators = generators;
    return E;
}

QuotientPresentation GradedFamily::quotient() const { return make_quotient(ring, generators, origin(ring)); }

GradedFamily initial_family(const LieAlgebra& L, const std::vector<Weight>& weights) {
    if (weights.size() != L.dim()) throw std::invalid_argument("one weight per basis vector expected");
    auto ctx = DeformationContext::make(L, DerivationSet::torus(weights));
    auto S = slice_presentation(ctx);
    auto E = eliminate_slice(S);
    GradedFamily F;
    F.weights = weights;
    F.index = graded_index_set(weights);
    const size_t n = L.dim();
    CochainSpace s2(n, 2, n);
    std::map<std::string, GradedPair> by_coord;
    for (auto& p : F.index.pairs) by_coord.emplace(ctx.coordinate_name(s2.index({p.i, p.j}, p.k)), p);
    std::vector<std::string> names;
    for (auto& v : E.ring->names()) names.push_back(F.index.name(by_coord.at(v)));
    F.ring = make_ring(names);
    for (auto& p : F.index.pairs) {
        std::string c = ctx.coordinate_name(s2.index({p.i, p.j}, p.k));
        LocalFraction v = constant(F.ring, L.get(p.i, p.j, p.k));
        if (auto it = E.values.find(c); it != E.values.end()) {
            const LocalFraction& f = it->second;
            v = v + LocalFraction(rename(f.num(), F.ring), rename(f.den(), F.ring), origin(F.ring));
        } else if (auto idx = E.ring->index_of(c)) {
            v = v + LocalFraction::from_poly(Poly::variable(F.ring, *idx), origin(F.ring));
        }
        F.values.push_back(std::move(v));
    }
    for (size_t a : S.A.indices) F.admissible.push_back(by_coord.at(ctx.coordinate_name(a)));
    for (auto& g : E.generators) F.generators.push_back(rename(g, F.ring));
    return F;
}

SlicePresentation family_slice(const GradedFamily& F) {
    auto ctx = DeformationContext::make(F.base(), F.torus());
    CochainSpace s2(F.dim(), 2, F.dim());
    std::vector<size_t> idx;
    for (auto& p : F.admissible) idx.push_back(s2.index({p.i, p.j}, p.k));
    std::sort(idx.begin(), idx.end());
    return slice_presentation(ctx, AdmissibleSet{idx, idx.size(), true});
}

std::string to_string(FiberCase c) {
    switch (c) {
        case FiberCase::NoFiber: return "no-fiber";
        case FiberCase::Unique: return "unique";
        default: return "parametric";
    }
}

ExtensionFiberReport central_extension_step(const GradedFamily& F, const Weight& beta, const ExtensionOptions& opt) {
    const size_t n = F.dim();
    ExtensionFiberReport rep;
    rep.n = n;
    rep.beta = beta;
    LieAlgebra base = F.base();
    rep.nu = h2_weight_space(base, F.weights, beta).dim;

    std::vector<Weight> next = F.weights;
    next.push_back(beta);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (add(F.weights[i], F.weights[j]) == beta) rep.new_pairs.push_back({i, j, n});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                if (add(add(F.weights[i], F.weights[j]), F.weights[k]) == beta) rep.relations.push_back({i, j, k, n});
    GradedIndexSet next_index = graded_index_set(next);
    auto name = [&](const GradedPair& p) { return next_index.name(p); };
    const size_t m = rep.new_pairs.size();
    auto column = [&](size_t a, size_t b) -> std::optional<size_t> {
        GradedPair key{std::min(a, b), std::max(a, b), n};
        auto it = std::find(rep.new_pairs.begin(), rep.new_pairs.end(), key);
        if (it == rep.new_pairs.end()) return std::nullopt;
        return static_cast<size_t>(it - rep.new_pairs.begin());
    };

    // J_{ijk}^{n+1} = sum over cyclic (a, b, c) and l of Y_{ab}^l X_{lc}, linear in the new X.
    const LocalFraction zero = constant(F.ring, 0);
    std::vector<std::vector<LocalFraction>> A(rep.relations.size(), std::vector<LocalFraction>(m, zero));
    for (size_t r = 0; r < rep.relations.size(); ++r) {
        auto& t = rep.relations[r];
        const size_t cyc[3][3] = {{t.i, t.j, t.k}, {t.j, t.k, t.i}, {t.k, t.i, t.j}};
        for (auto& c : cyc) {
            int sab = c[0] < c[1] ? 1 : -1;
            for (size_t a = 0; a < F.index.pairs.size(); ++a) {
                auto& p = F.index.pairs[a];
                if (p.i != std::min(c[0], c[1]) || p.j != std::max(c[0], c[1]) || p.k == c[2]) continue;
                if (F.values[a].is_zero()) continue;
                auto col = column(p.k, c[2]);
                if (!col) continue;
                int slc = p.k < c[2] ? 1 : -1;
                A[r][*col] = A[r][*col] + F.values[a] * Rational(sab * slc);
            }
        }
    }
    Echelon rows0;
    for (size_t r = 0; r < A.size(); ++r) {
        std::map<size_t, Rational> v;
        for (size_t c = 0; c < m; ++c) v[c] = A[r][c].value_at_base();
        rows0.insert(sparse_from_map(v), r);
    }
    rep.fiber_dim = m - rows0.rank();
    if (m == 0 || rep.nu == 0 || rep.fiber_dim == 0) {
        rep.kind = FiberCase::NoFiber;
        return rep;
    }
    rep.kind = rep.nu == 1 ? FiberCase::Unique : FiberCase::Parametric;

    // A pivot must be nonzero on some cocycle, i.e. its unit vector is not a combination of the relations.
    std::optional<size_t> piv;
    if (opt.pivot) {
        piv = column(opt.pivot->first, opt.pivot->second);
        if (!piv) throw std::invalid_argument("pivot is not a coordinate of the extension");
        if (rows0.contains(sparse_unit(*piv)))
            throw std::invalid_argument("pivot coordinate " + name(rep.new_pairs[*piv]) + " vanishes at the base point");
    } else {
        for (size_t c = 0; c < m && !piv; ++c)
            if (!rows0.contains(sparse_unit(c))) piv = c;
    }
    rep.pivot = rep.new_pairs[*piv];

    // Gauss-Jordan with pivots that are units at the base; pinned coordinates are tried last.
    struct Row {
        std::vector<LocalFraction> coef;
        LocalFraction constant;
    };
    std::vector<Row> rows;
    for (auto& a : A) {
        Row row{a, a[*piv]};
        row.coef[*piv] = zero;
        rows.push_back(std::move(row));
    }
    std::vector<size_t> order, pinned;
    for (size_t c = 0; c < m; ++c) {
        if (c == *piv) continue;
        (opt.pins.count(name(rep.new_pairs[c])) ? pinned : order).push_back(c);
    }
    order.insert(order.end(), pinned.begin(), pinned.end());
    std::vector<bool> used(rows.size(), false);
    std::map<size_t, size_t> row_of;
    for (size_t c : order) {
        size_t r = 0;
        while (r < rows.size() && (used[r] || is_zero(rows[r].coef[c].value_at_base()))) ++r;
        if (r == rows.size()) continue;
        if (opt.pins.count(name(rep.new_pairs[c])))
            throw std::invalid_argument("pinned coordinate " + name(rep.new_pairs[c]) + " is fixed by the relations");
        used[r] = true;
        row_of[c] = r;
        LocalFraction u = rows[r].coef[c];
        for (auto& x : rows[r].coef) x = x / u;
        rows[r].constant = rows[r].constant / u;
        for (size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == r || rows[r2].coef[c].is_zero()) continue;
            LocalFraction f = rows[r2].coef[c];
            for (size_t c2 = 0; c2 < m; ++c2)
                if (!rows[r].coef[c2].is_zero()) rows[r2].coef[c2] = rows[r2].coef[c2] - f * rows[r].coef[c2];
            rows[r2].constant = rows[r2].constant - f * rows[r].constant;
        }
    }
    std::vector<size_t> free;
    for (size_t c : order)
        if (!row_of.count(c)) free.push_back(c);

    std::vector<std::string> names = F.ring->names();
    for (size_t c : free) {
        names.push_back(name(rep.new_pairs[c]));
        rep.new_parameters.push_back(names.back());
    }
    RingPtr ring = make_ring(names);
    std::vector<LocalFraction> X(m, constant(ring, 0));
    X[*piv] = constant(ring, 1);
    for (size_t f = 0; f < free.size(); ++f) {
        Rational b = 0;
        if (auto it = opt.pins.find(rep.new_parameters[f]); it != opt.pins.end()) b = it->second;
        X[free[f]] = constant(ring, b) + LocalFraction::from_poly(Poly::variable(ring, F.ring->nvars() + f), origin(ring));
    }
    auto evaluate_row = [&](const Row& row) {
        LocalFraction acc = lift(row.constant, ring);
        for (size_t c : free)
            if (!row.coef[c].is_zero()) acc = acc + lift(row.coef[c], ring) * X[c];
        return acc;
    };
    for (auto& [c, r] : row_of) {
        X[c] = -evaluate_row(rows[r]);
        rep.solved.push_back(name(rep.new_pairs[c]));
    }
    std::sort(rep.solved.begin(), rep.solved.end());

    GradedFamily G;
    G.weights = next;
    G.index = next_index;
    G.ring = ring;
    G.admissible = F.admissible;
    G.admissible.push_back(*rep.pivot);
    for (auto& g : F.generators) G.generators.push_back(g.to_ring(ring));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        LocalFraction e = evaluate_row(rows[r]);
        if (e.is_zero()) continue;
        if (!is_zero(e.value_at_base())) throw std::logic_error("inconsistent extension relations at the base point");
        G.generators.push_back(e.num().primitive());
        ++rep.leftover;
    }
    for (auto& p : G.index.pairs) {
        if (p.k == n) {
            G.values.push_back(X[*column(p.i, p.j)]);
        } else if (p.i < n && p.j < n && p.k < n) {
            auto a = F.index.find(p.i, p.j, p.k);
            G.values.push_back(a ? lift(F.values[*a], ring) : constant(ring, 0));
        } else {
            G.values.push_back(constant(ring, 0));
        }
    }

    if (opt.simplify && !G.generators.empty()) {
        LinearElimination E = local_linear_elimination(G.ring, G.generators);
        if (!E.eliminated.empty()) {
            std::map<size_t, LocalFraction> vals;
            for (auto& [v, f] : E.values) vals.emplace(*G.ring->index_of(v), lift(f, G.ring));
            RationalVector o = origin(G.ring);
            for (auto& v : G.values) {
                LocalFraction s = substitute_fractions(v.num(), vals, o) / substitute_fractions(v.den(), vals, o);
                v = lift(s, E.ring);
            }
            rep.eliminated = E.eliminated;
        }
        G.ring = E.ring;
        G.generators = E.generators;
    }
    rep.family = std::move(G);
    return rep;
}

FiliationRun filiation_run(const LieAlgebra& initial, const WeightPath& path, size_t target, const FiliationOptions& opt) {
    if (initial.dim() != path.n0) throw std::invalid_argument("initial algebra must have the path's initialization dimension");
    if (target > path.length()) throw std::invalid_argument("target exceeds the path length");
    FiliationRun run;
    run.families.push_back(initial_family(initial, path.prefix(path.n0)));
    for (size_t n = path.n0; n < target; ++n) {
        ExtensionOptions eo;
        eo.simplify = opt.simplify;
        if (auto it = opt.pivots.find(n + 1); it != opt.pivots.end()) eo.pivot = it->second;
        if (auto it = opt.pins.find(n + 1); it != opt.pins.end()) eo.pins = it->second;
        auto step = central_extension_step(run.families.back(), path.weights[n], eo);
        bool stop = step.kind == FiberCase::NoFiber;
        if (!stop) run.families.push_back(step.family);
        run.steps.push_back(std::move(step));
        if (stop) {
            run.halted = true;
            run.message = "no central extension of dimension " + std::to_string(n + 1);
            break;
        }
    }
    return run;
}

FiliationOptions example52_options() {
    FiliationOptions o;
    o.pivots = {{10, {2, 4}}, {11, {3, 4}}, {12, {3, 5}}, {13, {1, 11}}};
    o.pins[10]["X1_7"] = 0;
    o.pins[13]["X4_10"] = 0;
    return o;
}

FiliationRun example52_run(size_t target) { return filiation_run(LieAlgebra(4), example52_path(), target, example52_options()); }

}  // namespace ldef
