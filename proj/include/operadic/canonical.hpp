#ifndef OPERADIC_CANONICAL_HPP
#define OPERADIC_CANONICAL_HPP

#include <stdexcept>
#include <vector>

#include "operadic/presentation.hpp"

namespace operadic {

// The four canonical relation spaces of the classification, built in the
// standard basis op_1..op_n with ★ = Σ op_i. A presentation class is
// certified by containment of its relation span in one of these, after a
// change of basis adapted to a witness action.
enum class CanonicalKind { CohNeq, CohEq, CompNeq, CompEq };

inline const char* to_string(CanonicalKind k) {
    switch (k) {
        case CanonicalKind::CohNeq: return "coh_neq";
        case CanonicalKind::CohEq: return "coh_eq";
        case CanonicalKind::CompNeq: return "comp_neq";
        case CanonicalKind::CompEq: return "comp_eq";
    }
    return "?";
}

// Basis elements, with the usual 1-based op indexing shifted down: op_1 ↦ 0.
inline std::vector<RelPair> canonical_basis(CanonicalKind kind, std::size_t n) {
    bool neq = (kind == CanonicalKind::CohNeq || kind == CanonicalKind::CompNeq);
    if (n < 1 || (neq && n < 2))
        throw std::invalid_argument("canonical_basis: n too small for kind");
    Scalar one(1);
    auto E = [&](std::size_t s, std::size_t t) {
        Mat m(n, n);
        m.at(s, t) = one;
        return m;
    };
    auto Z = [&] { return Mat(n, n); };
    std::vector<RelPair> b;

    switch (kind) {
        case CanonicalKind::CohNeq: {
            Mat star_op2(n, n);  // ★ ⊗ op_2
            for (std::size_t s = 0; s < n; ++s) star_op2.at(s, 1) = one;
            b.push_back({star_op2, E(1, 1)});
            Mat op1_star(n, n);  // op_1 ⊗ ★
            for (std::size_t t = 0; t < n; ++t) op1_star.at(0, t) = one;
            b.push_back({E(0, 0), op1_star});
            for (std::size_t i = 1; i < n; ++i) b.push_back({E(i, 0), E(i, 0)});
            for (std::size_t j = 2; j < n; ++j) b.push_back({E(1, j), E(1, j)});
            for (std::size_t i = 2; i < n; ++i) b.push_back({E(0, i), E(i, 1)});
            for (std::size_t i = 2; i < n; ++i)
                for (std::size_t j = 2; j < n; ++j) {
                    b.push_back({E(i, j), Z()});
                    b.push_back({Z(), E(i, j)});
                }
            break;
        }
        case CanonicalKind::CohEq: {
            // (op_1⊗★, op_1⊗★) + (★⊗op_1, ★⊗op_1) − (op_1⊗op_1, op_1⊗op_1)
            Mat m(n, n);
            for (std::size_t t = 0; t < n; ++t) m.at(0, t) = m.at(t, 0) = one;
            b.push_back({m, m});
            for (std::size_t i = 1; i < n; ++i)
                for (std::size_t j = 1; j < n; ++j) {
                    b.push_back({E(i, j), Z()});
                    b.push_back({Z(), E(i, j)});
                }
            break;
        }
        case CanonicalKind::CompNeq: {
            Mat l1 = E(0, 1) + E(1, 1);  // (op_1+op_2) ⊗ op_2
            b.push_back({l1, E(1, 1)});
            Mat r2 = E(0, 0) + E(0, 1);  // op_1 ⊗ (op_1+op_2)
            b.push_back({E(0, 0), r2});
            for (std::size_t i = 1; i < n; ++i) b.push_back({E(i, 0), E(i, 0)});
            for (std::size_t j = 2; j < n; ++j) b.push_back({E(1, j), E(1, j)});
            for (std::size_t i = 2; i < n; ++i) b.push_back({E(0, i), E(i, 1)});
            for (std::size_t i = 2; i < n; ++i) {
                b.push_back({E(i, 1), Z()});
                b.push_back({Z(), E(0, i)});
            }
            for (std::size_t i = 2; i < n; ++i)
                for (std::size_t j = 2; j < n; ++j) {
                    b.push_back({E(i, j), Z()});
                    b.push_back({Z(), E(i, j)});
                }
            break;
        }
        case CanonicalKind::CompEq: {
            b.push_back({E(0, 0), E(0, 0)});
            for (std::size_t i = 1; i < n; ++i) {
                Mat m = E(0, i) + E(i, 0);
                b.push_back({m, m});
            }
            for (std::size_t i = 1; i < n; ++i)
                for (std::size_t j = 1; j < n; ++j) {
                    b.push_back({E(i, j), Z()});
                    b.push_back({Z(), E(i, j)});
                }
            break;
        }
    }
    return b;
}

inline Subspace canonical_space(CanonicalKind kind, std::size_t n) {
    Mat rows(0, 2 * n * n);
    for (const auto& r : canonical_basis(kind, n)) rows.append_row(flatten(r));
    return Subspace::from_rows(2 * n * n, rows);
}

}  // namespace operadic

#endif
