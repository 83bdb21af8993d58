#include "ldef/lie/catalog.hpp"

#include <stdexcept>

namespace ldef {

namespace {

std::vector<Weight> linear_weights(size_t n) {
    std::vector<Weight> w;
    for (size_t i = 1; i <= n; ++i) w.push_back({Rational(static_cast<long>(i))});
    return w;
}

}  // namespace

GradedAlgebra f_family(size_t n) {
    if (n < 3) throw std::invalid_argument("f_n needs n >= 3");
    LieAlgebra L(n);
    for (size_t i = 2; i <= n - 1; ++i) L.set(0, i - 1, i, 1);
    for (size_t i = 3; i + 1 < n; ++i) L.set(1, i - 1, i + 1, 1);
    return {L, linear_weights(n)};
}

GradedAlgebra witt(size_t n) {
    if (n < 2) throw std::invalid_argument("w_n needs n >= 2");
    LieAlgebra L(n);
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = i + 1; i + j <= n; ++j)
            L.set(i - 1, j - 1, i + j - 1, Rational(static_cast<long>(j) - static_cast<long>(i)));
    return {L, linear_weights(n)};
}

GradedAlgebra heisenberg() {
    LieAlgebra L(3);
    L.set(0, 1, 2, 1);
    auto w = [](long a, long b) { return Weight{Rational(a), Rational(b)}; };
    return {L, {w(1, 0), w(0, 1), w(1, 1)}};
}

GradedAlgebra abelian(size_t m) { return {LieAlgebra(m), {}}; }

GradedAlgebra sl2() {
    LieAlgebra L(3, {"h", "e", "f"});
    L.set(0, 1, 1, 2);
    L.set(0, 2, 2, -2);
    L.set(1, 2, 0, 1);
    return {L, {Weight{Rational(0)}, Weight{Rational(2)}, Weight{Rational(-2)}}};
}

}  // namespace ldef
