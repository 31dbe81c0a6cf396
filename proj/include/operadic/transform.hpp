#ifndef OPERADIC_TRANSFORM_HPP
#define OPERADIC_TRANSFORM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadic/presentation.hpp"
#include "operadic/unit_action.hpp"

namespace operadic {

// Black-square product: generators are pairs "l|r" ordered lexicographically
// in (index1, index2), relations are the slot-wise Kronecker products of the
// two relation bases, and ★ = ★₁ ⊗ ★₂.
inline OperadPresentation black_square(const OperadPresentation& p1,
                                       const OperadPresentation& p2) {
    if (!is_valid(p1) || !is_valid(p2))
        throw std::invalid_argument("black_square: invalid input presentation");
    OperadPresentation q;
    q.name = p1.name + "⊠" + p2.name;
    for (const auto& g1 : p1.gens)
        for (const auto& g2 : p2.gens) q.gens.push_back(g1 + "|" + g2);
    q.star = Vec(p1.n() * p2.n());
    for (std::size_t i = 0; i < p1.n(); ++i)
        for (std::size_t j = 0; j < p2.n(); ++j)
            q.star[i * p2.n() + j] = p1.star[i] * p2.star[j];
    for (const auto& r1 : p1.relations)
        for (const auto& r2 : p2.relations)
            q.relations.push_back(RelPair{kron(r1.left, r2.left), kron(r1.right, r2.right)});
    return q;
}

// α ⊗ α' and β ⊗ β' on the product generators, in black_square index order.
inline UnitAction product_action(const UnitAction& u1, const UnitAction& u2) {
    std::size_t n1 = u1.alpha.dim(), n2 = u2.alpha.dim();
    Vec a(n1 * n2), b(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            a[i * n2 + j] = u1.alpha[i] * u2.alpha[j];
            b[i * n2 + j] = u1.beta[i] * u2.beta[j];
        }
    return {std::move(a), std::move(b)};
}

// The signed pairing of the duality construction on G⊗² ⊕ G⊗²:
// ⟨(L,R),(Γ,Δ)⟩ = Σ L_st Γ_st − Σ R_st Δ_st.
inline Mat dual_pairing(std::size_t n) {
    Mat p(2 * n * n, 2 * n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        p.at(i, i) = Scalar(1);
        p.at(n * n + i, n * n + i) = Scalar(-1);
    }
    return p;
}

// Koszul dual: relations are the annihilator R⊥ of the relation span under
// the signed pairing. The dual presentation carries no ★ of its own; every
// diagonal element (ě_i⊗ě_i, ě_i⊗ě_i) found inside R⊥ is returned as an
// associative candidate and the caller picks one.
struct DualResult {
    OperadPresentation presentation;  // star left zero
    std::vector<std::size_t> associative_candidates;
};

inline DualResult dual(const OperadPresentation& p) {
    std::size_t n = p.n();
    Subspace ann = relation_subspace(p).annihilator(dual_pairing(n));
    DualResult out;
    out.presentation.name = p.name + "!";
    for (const auto& g : p.gens) out.presentation.gens.push_back("!" + g);
    out.presentation.star = Vec(n);
    for (std::size_t i = 0; i < ann.dim(); ++i)
        out.presentation.relations.push_back(unflatten(ann.basis().row(i), n));
    for (std::size_t i = 0; i < n; ++i) {
        Vec diag(n);
        diag[i] = Scalar(1);
        if (ann.member(splitting_element(diag))) out.associative_candidates.push_back(i);
    }
    return out;
}

inline OperadPresentation with_star(const DualResult& d, std::size_t gen_index) {
    OperadPresentation p = d.presentation;
    p.star = Vec(p.n());
    p.star[gen_index] = Scalar(1);
    return p;
}

// Exact parameters t for which x0 + t·d is an associative operation. The
// membership condition reduced modulo the relation span gives one polynomial
// of degree ≤ 2 per residual coordinate.
struct LineSearchResult {
    bool all_t = false;
    std::vector<Scalar> roots;
};

inline LineSearchResult find_associative_on_line(const OperadPresentation& p, const Vec& x0,
                                                 const Vec& d) {
    if (d.dim() != p.n() || x0.dim() != p.n())
        throw std::invalid_argument("find_associative_on_line: dim mismatch");
    if (d.is_zero()) throw std::invalid_argument("find_associative_on_line: zero direction");
    Subspace rel = relation_subspace(p);
    Mat xx = outer(x0, x0);
    Mat xd = outer(x0, d) + outer(d, x0);
    Mat dd = outer(d, d);
    Vec r0 = rel.reduce(flatten(RelPair{xx, xx}));
    Vec r1 = rel.reduce(flatten(RelPair{xd, xd}));
    Vec r2 = rel.reduce(flatten(RelPair{dd, dd}));

    LineSearchResult out;
    if (r0.is_zero() && r1.is_zero() && r2.is_zero()) {
        out.all_t = true;
        return out;
    }
    std::size_t first = 0;
    while (r0[first].is_zero() && r1[first].is_zero() && r2[first].is_zero()) ++first;
    auto cand = detail::rational_roots(r0[first], r1[first], r2[first]);
    for (const auto& t : cand.roots) {
        bool ok = true;
        for (std::size_t j = 0; j < r0.dim() && ok; ++j)
            if (!(r0[j] + t * r1[j] + t * t * r2[j]).is_zero()) ok = false;
        if (ok) out.roots.push_back(t);
    }
    return out;
}

}  // namespace operadic

#endif
