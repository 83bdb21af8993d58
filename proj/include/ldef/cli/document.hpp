#pragma once

#include "ldef/graded/weight_path.hpp"
#include "ldef/lie/catalog.hpp"
#include "ldef/lie/deformation.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldef {

using json = nlohmann::json;

/// A malformed or invalid input document; `problems` lists every violation found.
class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string what, std::vector<std::string> problems = {})
        : std::runtime_error(std::move(what)), problems_(std::move(problems)) {}
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

/// Brackets [e_i, e_j] = coeff e_k with 1-based i < j; the torus is given by one weight per basis vector.
struct AlgebraDocument {
    struct Bracket {
        size_t i, j, k;
        Rational coeff;
    };
    std::string name;
    size_t dim = 0;
    std::vector<Bracket> brackets;  ///< sorted by (i, j, k), nonzero coefficients
    std::optional<std::vector<Weight>> weights;
    std::vector<std::string> labels;

    bool operator==(const AlgebraDocument& o) const;
};

json to_json(const AlgebraDocument& doc);
/// Structural parsing; throws DocumentError. Coefficients are brought to lowest terms, brackets sorted.
AlgebraDocument parse_document(const json& j);
AlgebraDocument read_document(const std::string& path);

AlgebraDocument document_of(const GradedAlgebra& g, std::string name = {});
/// The algebra of a document; with `require_jacobi` the Jacobi violations are reported as a DocumentError.
GradedAlgebra load_algebra(const AlgebraDocument& doc, bool require_jacobi = true);
std::string describe(const JacobiViolation& v);

/// f (n >= 5), witt (n >= 2), abelian (m >= 1), example52 (4 <= n <= 13), heisenberg, sl2; sizes up to 32.
/// `name` may carry the size as a suffix, as in "f_8".
AlgebraDocument catalog_generate(const std::string& name, std::optional<size_t> size = std::nullopt);
std::vector<std::string> catalog_names();

/// {"rank": r, "n0": n0, "weights": [[...], ...]}.
WeightPath parse_weight_path(const json& j);
json to_json(const WeightPath& path);

/// {"params": [...], "order": N, "perturbation": [{"i", "j", "k", "series"}]} over the document's algebra.
DeformationSeries parse_deformation(const json& j, const LieAlgebra& base);
json to_json(const DeformationSeries& phi);

/// Hex SHA-256 of the canonical JSON text.
std::string digest(const json& j);

}  // namespace ldef
