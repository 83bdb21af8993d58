#include "ldef/lie/derivation.hpp"

#include <stdexcept>

namespace ldef {

Matrix zero_matrix(size_t n) { return Matrix(n, std::vector<Rational>(n, 0)); }

Matrix identity_matrix(size_t n) {
    Matrix m = zero_matrix(n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix diagonal_matrix(const std::vector<Rational>& d) {
    Matrix m = zero_matrix(d.size());
    for (size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix c = zero_matrix(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (is_zero(a[i][k])) continue;
            for (size_t j = 0; j < n; ++j)
                if (!is_zero(b[k][j])) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    Matrix x = matmul(a, b), y = matmul(b, a);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) x[i][j] -= y[i][j];
    return x;
}

bool is_diagonal(const Matrix& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (i != j && !is_zero(a[i][j])) return false;
    return true;
}

Matrix ad_matrix(const LieAlgebra& L, size_t i) {
    Matrix m = zero_matrix(L.dim());
    for (size_t j = 0; j < L.dim(); ++j)
        for (auto& [k, c] : L.bracket(i, j)) m[k][j] = c;
    return m;
}

bool DerivationSet::is_diagonal() const {
    for (auto& m : matrices)
        if (!ldef::is_diagonal(m)) return false;
    return true;
}

std::vector<Weight> DerivationSet::weights() const {
    if (!is_diagonal()) throw std::logic_error("weights need a diagonal derivation set");
    std::vector<Weight> w(dim, Weight(matrices.size()));
    for (size_t r = 0; r < matrices.size(); ++r)
        for (size_t i = 0; i < dim; ++i) w[i][r] = matrices[r][i][i];
    return w;
}

DerivationSet DerivationSet::torus(const std::vector<Weight>& weights) {
    DerivationSet t;
    t.dim = weights.size();
    size_t rank = weights.empty() ? 0 : weights.front().size();
    for (size_t r = 0; r < rank; ++r) {
        std::vector<Rational> d(t.dim);
        for (size_t i = 0; i < t.dim; ++i) d[i] = weights[i].at(r);
        t.matrices.push_back(diagonal_matrix(d));
    }
    return t;
}

bool is_derivation(const LieAlgebra& L, const Matrix& D) {
    const size_t m = L.dim();
    auto apply = [&](const SparseVec& x) {
        std::map<size_t, Rational> acc;
        for (auto& [i, c] : x)
            for (size_t k = 0; k < m; ++k)
                if (!is_zero(D[k][i])) acc[k] += c * D[k][i];
        return sparse_from_map(acc);
    };
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            SparseVec lhs = apply(L.bracket(i, j));
            SparseVec rhs = sparse_axpy(L.bracket(apply(sparse_unit(i)), sparse_unit(j)), 1,
                                        L.bracket(sparse_unit(i), apply(sparse_unit(j))));
            if (lhs != rhs) return false;
        }
    return true;
}

namespace {

// Solves a homogeneous system given as equation rows over unknowns D[k][i] (index k*m + i).
std::vector<Matrix> solve_matrices(size_t m, const std::vector<std::map<size_t, Rational>>& rows) {
    std::vector<std::map<size_t, Rational>> cols(m * m);
    for (size_t r = 0; r < rows.size(); ++r)
        for (auto& [u, c] : rows[r])
            if (!is_zero(c)) cols[u][r] += c;
    std::vector<SparseVec> columns;
    for (auto& c : cols) columns.push_back(sparse_from_map(c));
    ColumnResult res = analyze_columns(columns);
    std::vector<Matrix> out;
    for (auto& v : res.kernel) {
        Matrix D = zero_matrix(m);
        for (auto& [u, c] : v) D[u / m][u % m] = c;
        out.push_back(std::move(D));
    }
    return out;
}

}  // namespace

DerivationSet derivations(const LieAlgebra& L, const DerivationSet* commuting_with) {
    const size_t m = L.dim();
    std::vector<std::map<size_t, Rational>> rows;
    auto u = [m](size_t k, size_t i) { return k * m + i; };
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = 0; k < m; ++k) {
                // D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j], component k.
                std::map<size_t, Rational> row;
                for (auto& [l, c] : L.bracket(i, j)) row[u(k, l)] += c;
                for (size_t l = 0; l < m; ++l) {
                    Rational a = L.get(l, j, k);
                    if (!is_zero(a)) row[u(l, i)] -= a;
                    Rational b = L.get(i, l, k);
                    if (!is_zero(b)) row[u(l, j)] -= b;
                }
                bool nonzero = false;
                for (auto& [x, c] : row)
                    if (!is_zero(c)) nonzero = true;
                if (nonzero) rows.push_back(std::move(row));
            }
    if (commuting_with) {
        for (auto& T : commuting_with->matrices)
            for (size_t a = 0; a < m; ++a)
                for (size_t b = 0; b < m; ++b) {
                    // (D T - T D)[a][b]
                    std::map<size_t, Rational> row;
                    for (size_t c = 0; c < m; ++c) {
                        if (!is_zero(T[c][b])) row[u(a, c)] += T[c][b];
                        if (!is_zero(T[a][c])) row[u(c, b)] -= T[a][c];
                    }
                    bool nonzero = false;
                    for (auto& [x, c] : row)
                        if (!is_zero(c)) nonzero = true;
                    if (nonzero) rows.push_back(std::move(row));
                }
    }
    return {m, solve_matrices(m, rows)};
}

DerivationSet diagonal_derivations(const LieAlgebra& L) {
    const size_t m = L.dim();
    // Unknowns are the diagonal entries lambda_i; each nonzero constant (i,j,k) forces
    // lambda_i + lambda_j - lambda_k = 0.
    std::vector<std::map<size_t, Rational>> eqs;
    for (auto& [key, c] : L.constants()) {
        std::map<size_t, Rational> row;
        row[key[0]] += 1;
        row[key[1]] += 1;
        row[key[2]] -= 1;
        eqs.push_back(std::move(row));
    }
    std::vector<std::map<size_t, Rational>> cols(m);
    for (size_t r = 0; r < eqs.size(); ++r)
        for (auto& [v, c] : eqs[r])
            if (!is_zero(c)) cols[v][r] += c;
    std::vector<SparseVec> columns;
    for (auto& c : cols) columns.push_back(sparse_from_map(c));
    ColumnResult res = analyze_columns(columns);
    DerivationSet out{m, {}};
    for (auto& v : res.kernel) {
        std::vector<Rational> d(m, 0);
        for (auto& [i, c] : v) d[i] = c;
        out.matrices.push_back(diagonal_matrix(d));
    }
    return out;
}

size_t span_dimension(const std::vector<Matrix>& ms) {
    Echelon e;
    size_t tag = 0;
    for (auto& M : ms) {
        std::map<size_t, Rational> v;
        size_t n = M.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!is_zero(M[i][j])) v[i * n + j] = M[i][j];
        e.insert(sparse_from_map(v), tag++);
    }
    return e.rank();
}

}  // namespace ldef
