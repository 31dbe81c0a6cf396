#ifndef OPERADIC_TEST_UTIL_HPP
#define OPERADIC_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "operadic/canonical.hpp"
#include "operadic/presentation.hpp"

namespace testutil {

// splitmix64, seeded deterministic source for every randomized test
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    // small rational with numerator in [-3, 3] and denominator 1 or 2
    operadic::Scalar small_scalar() {
        std::int64_t num = static_cast<std::int64_t>(below(7)) - 3;
        std::int64_t den = 1 + static_cast<std::int64_t>(below(2));
        return operadic::Scalar(num, den);
    }

private:
    std::uint64_t state_;
};

inline operadic::Vec random_vec(Rng& rng, std::size_t dim) {
    operadic::Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rng.small_scalar();
    return v;
}

inline operadic::Mat random_mat(Rng& rng, std::size_t rows, std::size_t cols) {
    operadic::Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.small_scalar();
    return m;
}

inline operadic::Mat random_invertible(Rng& rng, std::size_t n) {
    for (;;) {
        operadic::Mat m = random_mat(rng, n, n);
        if (operadic::rref(m).pivots.size() == n) return m;
    }
}

// Valid presentation on n generators with ★ = (1,...,1): the splitting
// element plus `extra` random relation pairs, row-reduced to a basis.
inline operadic::OperadPresentation random_presentation(Rng& rng, std::size_t n,
                                                        std::size_t extra) {
    using namespace operadic;
    Vec star(n);
    for (std::size_t i = 0; i < n; ++i) star[i] = Scalar(1);
    Mat rows(0, 2 * n * n);
    rows.append_row(splitting_element(star));
    for (std::size_t k = 0; k < extra; ++k)
        rows.append_row(flatten(RelPair{random_mat(rng, n, n), random_mat(rng, n, n)}));
    Subspace span = Subspace::from_rows(2 * n * n, rows);
    OperadPresentation p;
    p.name = "random";
    for (std::size_t i = 0; i < n; ++i) p.gens.push_back("g" + std::to_string(i));
    p.star = star;
    for (std::size_t i = 0; i < span.dim(); ++i)
        p.relations.push_back(unflatten(span.basis().row(i), n));
    return p;
}

// Random subspace of a canonical space containing the splitting element,
// presented in the standard basis. `picks` random combinations of the
// canonical basis are added to the splitting element.
inline operadic::OperadPresentation random_canonical_sub(Rng& rng, operadic::CanonicalKind kind,
                                                         std::size_t n, std::size_t picks) {
    using namespace operadic;
    auto basis = canonical_basis(kind, n);
    Vec star(n);
    for (std::size_t i = 0; i < n; ++i) star[i] = Scalar(1);
    Mat rows(0, 2 * n * n);
    rows.append_row(splitting_element(star));
    for (std::size_t k = 0; k < picks; ++k) {
        Vec combo(2 * n * n);
        for (const auto& b : basis) {
            Scalar c = rng.small_scalar();
            if (!c.is_zero()) combo = combo + c * flatten(b);
        }
        rows.append_row(combo);
    }
    Subspace span = Subspace::from_rows(2 * n * n, rows);
    OperadPresentation p;
    p.name = "canonical-sub";
    for (std::size_t i = 0; i < n; ++i) p.gens.push_back("g" + std::to_string(i));
    p.star = star;
    for (std::size_t i = 0; i < span.dim(); ++i)
        p.relations.push_back(unflatten(span.basis().row(i), n));
    return p;
}

}  // namespace testutil

#endif
