#ifndef OPERADIC_PRESENTATION_HPP
#define OPERADIC_PRESENTATION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadic/linalg.hpp"

namespace operadic {

// One element of G⊗² ⊕ G⊗², stored as the pair of n×n coefficient matrices
// (left slot, right slot). Entry (s,t) is the coefficient of e_s ⊗ e_t.
struct RelPair {
    Mat left, right;

    std::size_t n() const { return left.rows(); }
};

// Global flattening convention shared by every module: coordinate index of
// (slot, s, t) is slot·n² + s·n + t with slot 0 = left, slot 1 = right.
inline std::size_t flat_index(std::size_t slot, std::size_t s, std::size_t t, std::size_t n) {
    return slot * n * n + s * n + t;
}

inline Vec flatten(const RelPair& r) {
    std::size_t n = r.n();
    Vec v(2 * n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            v[flat_index(0, s, t, n)] = r.left.at(s, t);
            v[flat_index(1, s, t, n)] = r.right.at(s, t);
        }
    return v;
}

inline RelPair unflatten(const Vec& v, std::size_t n) {
    if (v.dim() != 2 * n * n) throw std::invalid_argument("unflatten: dimension mismatch");
    RelPair r{Mat(n, n), Mat(n, n)};
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            r.left.at(s, t) = v[flat_index(0, s, t, n)];
            r.right.at(s, t) = v[flat_index(1, s, t, n)];
        }
    return r;
}

// Outer product u v^T as a coefficient matrix; (star·star^T, star·star^T)
// flattened is the associativity element of the distinguished operation.
inline Mat outer(const Vec& u, const Vec& v) {
    Mat m(u.dim(), v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.dim(); ++j) m.at(i, j) = u[i] * v[j];
    }
    return m;
}

inline Vec splitting_element(const Vec& star) {
    Mat sq = outer(star, star);
    return flatten(RelPair{sq, sq});
}

// Presentation of a binary quadratic regular operad with a distinguished
// associative operation: generator labels, a basis of the relation space,
// and the coordinates of the associative vector.
struct OperadPresentation {
    std::string name;
    std::vector<std::string> gens;
    std::vector<RelPair> relations;
    Vec star;

    std::size_t n() const { return gens.size(); }
    bool has_star() const { return star.dim() == n() && !star.is_zero(); }
};

inline Mat relation_rows(const OperadPresentation& p) {
    Mat rows(0, 2 * p.n() * p.n());
    for (const auto& r : p.relations) rows.append_row(flatten(r));
    return rows;
}

inline Subspace relation_subspace(const OperadPresentation& p) {
    return Subspace::from_rows(2 * p.n() * p.n(), relation_rows(p));
}

// All violations of the presentation invariants: well-formed shapes, unique
// labels, linearly independent relation basis, and the splitting condition
// that (star⊗star, star⊗star) lies in the relation span.
inline std::vector<std::string> validate(const OperadPresentation& p) {
    std::vector<std::string> bad;
    std::size_t n = p.n();
    if (n == 0) {
        bad.push_back("no generators");
        return bad;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.gens[i] == p.gens[j]) bad.push_back("duplicate generator label " + p.gens[i]);
    for (std::size_t k = 0; k < p.relations.size(); ++k)
        if (p.relations[k].left.rows() != n || p.relations[k].left.cols() != n ||
            p.relations[k].right.rows() != n || p.relations[k].right.cols() != n)
            bad.push_back("relation " + std::to_string(k) + " has wrong shape");
    if (!bad.empty()) return bad;

    Subspace span = relation_subspace(p);
    if (span.dim() != p.relations.size())
        bad.push_back("relation basis is linearly dependent");
    if (p.star.dim() != n) {
        bad.push_back("star has wrong dimension");
        return bad;
    }
    if (p.star.is_zero()) {
        bad.push_back("star is zero");
        return bad;
    }
    if (!span.member(splitting_element(p.star)))
        bad.push_back("(star⊗star, star⊗star) is not in the relation span");
    return bad;
}

inline bool is_valid(const OperadPresentation& p) { return validate(p).empty(); }

inline Mat inverse(const Mat& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("inverse: not square");
    std::size_t n = t.rows();
    Mat wide(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) wide.at(i, j) = t.at(i, j);
        wide.at(i, n + i) = Scalar(1);
    }
    RrefResult rr = rref(std::move(wide));
    if (rr.pivots.size() != n || rr.pivots[n - 1] != n - 1)
        throw std::invalid_argument("inverse: singular matrix");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.m.at(i, n + j);
    return inv;
}

// Re-express the presentation in the basis whose vectors are the columns of
// t (in old coordinates): coefficient matrices map by L ↦ t⁻¹ L t⁻ᵀ per slot
// and star by u ↦ t⁻¹ u.
inline OperadPresentation change_basis(const OperadPresentation& p, const Mat& t) {
    std::size_t n = p.n();
    if (t.rows() != n || t.cols() != n)
        throw std::invalid_argument("change_basis: size mismatch");
    Mat ti = inverse(t);
    Mat tit = ti.transpose();
    OperadPresentation q;
    q.name = p.name;
    q.gens = p.gens;
    q.star = ti * p.star;
    for (const auto& r : p.relations)
        q.relations.push_back(RelPair{ti * r.left * tit, ti * r.right * tit});
    return q;
}

// A linear map of generator spaces is a morphism when it sends star to star
// and the induced slot-wise map on G⊗² ⊕ G⊗² sends relations into relations.
// Columns of m are the images of the source generators.
inline bool is_morphism(const OperadPresentation& src, const OperadPresentation& dst,
                        const Mat& m) {
    if (m.cols() != src.n() || m.rows() != dst.n()) return false;
    if (m * src.star != dst.star) return false;
    Subspace target = relation_subspace(dst);
    Mat mt = m.transpose();
    for (const auto& r : src.relations) {
        RelPair img{m * r.left * mt, m * r.right * mt};
        if (!target.member(flatten(img))) return false;
    }
    return true;
}

// True iff (x·x^T, x·x^T) lies in the relation span, i.e. the operation with
// coordinate vector x is associative in the presented operad.
inline bool check_associative(const OperadPresentation& p, const Vec& x) {
    if (x.dim() != p.n()) throw std::invalid_argument("check_associative: dim mismatch");
    return relation_subspace(p).member(splitting_element(x));
}

}  // namespace operadic

#endif
