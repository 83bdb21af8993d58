#pragma once

#include "ldef/algebra/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ldef {

/// Sorted (index, nonzero value) pairs.
using SparseVec = std::vector<std::pair<size_t, Rational>>;

SparseVec sparse_unit(size_t index, const Rational& c = 1);
SparseVec sparse_from_map(const std::map<size_t, Rational>& m);
/// a + c * b.
SparseVec sparse_axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Rational& c);
Rational sparse_get(const SparseVec& a, size_t index);
Rational sparse_dot(const SparseVec& a, const SparseVec& b);

enum class PivotRule { Lowest, Highest };

/// Incremental row echelon form over Q with optional bookkeeping of how each stored row
/// combines the inserted vectors (by their tags).
class Echelon {
public:
    explicit Echelon(PivotRule rule = PivotRule::Lowest) : rule_(rule) {}

    /// Remainder of v after elimination; when `combo` is given it receives c with
    /// v = remainder + sum_t c_t * inserted(t).
    SparseVec reduce(const SparseVec& v, SparseVec* combo = nullptr) const;

    /// Inserts v under `tag`. Returns true when v was independent of the stored rows.
    /// On dependence and when `relation` is given, stores c with v = sum_t c_t * inserted(t).
    bool insert(const SparseVec& v, size_t tag, SparseVec* relation = nullptr);

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    size_t rank() const { return rows_.size(); }
    /// Pivot indices in increasing order.
    std::vector<size_t> pivots() const;
    /// Stored row with the given pivot (pivot coefficient 1).
    const SparseVec& row(size_t pivot) const { return rows_.at(pivot).v; }
    /// Fully reduced basis: every row has zeros at all other pivots. Ordered by pivot.
    std::vector<SparseVec> reduced_rows() const;

private:
    struct Row {
        SparseVec v;
        SparseVec combo;
    };
    PivotRule rule_;
    std::map<size_t, Row> rows_;
};

/// Column-oriented view of a linear map: columns[j] is the image of basis vector j.
struct ColumnResult {
    std::vector<size_t> independent;  ///< columns kept, in order (greedy)
    std::vector<SparseVec> kernel;    ///< one vector per dependent column, in column coordinates
    size_t rank = 0;
};
ColumnResult analyze_columns(const std::vector<SparseVec>& columns, PivotRule rule = PivotRule::Lowest);

/// Dense exact rank by fraction-free (Bareiss) elimination; used as an independent oracle.
size_t dense_rank(std::vector<std::vector<Rational>> rows);
/// Inverse of a square matrix by Gauss-Jordan; absent when singular.
std::optional<std::vector<std::vector<Rational>>> dense_inverse(std::vector<std::vector<Rational>> a);

}  // namespace ldef
