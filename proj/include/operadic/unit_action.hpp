#ifndef OPERADIC_UNIT_ACTION_HPP
#define OPERADIC_UNIT_ACTION_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "operadic/canonical.hpp"
#include "operadic/presentation.hpp"

namespace operadic {

// A unit action (α, β): two linear functionals on the generator space with
// α(★) = β(★) = 1, stored as coordinate vectors a_s = α(e_s), b_s = β(e_s).
struct UnitAction {
    Vec alpha, beta;

    friend bool operator==(const UnitAction& x, const UnitAction& y) {
        return x.alpha == y.alpha && x.beta == y.beta;
    }
    friend bool operator!=(const UnitAction& x, const UnitAction& y) { return !(x == y); }
};

inline bool is_normalized(const OperadPresentation& p, const UnitAction& u) {
    return u.alpha.dim() == p.n() && u.beta.dim() == p.n() &&
           dot(u.alpha, p.star) == Scalar(1) && dot(u.beta, p.star) == Scalar(1);
}

enum class Mode { Compatible, Coherent };

struct EquationFailure {
    std::size_t relation;
    std::string equation;  // "C1".."C5"
    Vec residual;
};

struct Verdict {
    bool coherent = false;
    bool compatible = false;
    std::vector<EquationFailure> failures;

    bool passed(Mode m) const { return m == Mode::Coherent ? coherent : compatible; }
};

// The coherence equations for one relation (L, R), in matrix form:
//   C1: b·L = b·R          C2: Lᵀa = R·b        C3: L·a = R·a
//   C4: L·b = (bᵀR b)·★    C5: (aᵀL a)·★ = Rᵀa
// Compatibility is C1–C3 on every basis relation; coherence is C1–C5.
inline Verdict check(const OperadPresentation& p, const UnitAction& u, Mode mode) {
    if (!is_valid(p)) throw std::invalid_argument("check: invalid presentation");
    if (!is_normalized(p, u))
        throw std::invalid_argument("check: action not normalized (α(★)=β(★)=1 required)");
    const Vec& a = u.alpha;
    const Vec& b = u.beta;
    Verdict v;
    v.coherent = v.compatible = true;
    for (std::size_t k = 0; k < p.relations.size(); ++k) {
        const Mat& L = p.relations[k].left;
        const Mat& R = p.relations[k].right;
        Vec c1 = b * L - b * R;
        Vec c2 = a * L - R * b;
        Vec c3 = L * a - R * a;
        Vec c4 = L * b - dot(b, R * b) * p.star;
        Vec c5 = dot(a, L * a) * p.star - a * R;
        auto record = [&](const Vec& res, const char* tag, bool coherent_only) {
            if (res.is_zero()) return;
            if (coherent_only)
                v.coherent = false;
            else
                v.coherent = v.compatible = false;
            if (!coherent_only || mode == Mode::Coherent)
                v.failures.push_back({k, tag, res});
        };
        record(c1, "C1", false);
        record(c2, "C2", false);
        record(c3, "C3", false);
        record(c4, "C4", true);
        record(c5, "C5", true);
    }
    if (!v.compatible) v.coherent = false;
    return v;
}

enum class SolStatus { Empty, Points, Family };

// Exact solution set of the requested equations. Every point reported has
// been re-verified against check before being returned.
struct ActionSolutionSet {
    SolStatus status = SolStatus::Empty;
    std::vector<UnitAction> points;
    std::optional<UnitAction> particular;  // Family
    std::optional<Subspace> directions;    // Family, in the 2n coordinates (a|b)
    std::string residual_constraints;      // unresolved constraints / root notes
};

namespace detail {

inline UnitAction split_action(const Vec& z, std::size_t n) {
    Vec a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = z[i];
        b[i] = z[n + i];
    }
    return {std::move(a), std::move(b)};
}

// Rows of the compatibility system in the unknowns z = (a | b):
// C1 and C3 per relation (linear in b resp. a), C2 (joint), and the two
// normalization rows a·★ = 1, b·★ = 1.
inline void compat_system(const OperadPresentation& p, Mat& rows, Vec& rhs) {
    std::size_t n = p.n();
    rows = Mat(0, 2 * n);
    std::vector<Scalar> rhs_entries;
    auto push = [&](const Vec& row, Scalar r) {
        rows.append_row(row);
        rhs_entries.push_back(std::move(r));
    };
    {
        Vec r1(2 * n), r2(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            r1[i] = p.star[i];
            r2[n + i] = p.star[i];
        }
        push(r1, Scalar(1));
        push(r2, Scalar(1));
    }
    for (const auto& rel : p.relations) {
        Mat d = rel.left - rel.right;
        for (std::size_t t = 0; t < n; ++t) {  // C1, column t
            Vec row(2 * n);
            for (std::size_t s = 0; s < n; ++s) row[n + s] = d.at(s, t);
            push(row, Scalar(0));
        }
        for (std::size_t s = 0; s < n; ++s) {  // C3, row s
            Vec row(2 * n);
            for (std::size_t t = 0; t < n; ++t) row[t] = d.at(s, t);
            push(row, Scalar(0));
        }
        for (std::size_t g = 0; g < n; ++g) {  // C2, component g
            Vec row(2 * n);
            for (std::size_t s = 0; s < n; ++s) row[s] = rel.left.at(s, g);
            for (std::size_t t = 0; t < n; ++t) row[n + t] = row[n + t] - rel.right.at(g, t);
            push(row, Scalar(0));
        }
    }
    rhs = Vec(std::move(rhs_entries));
}

// Linear part of C4/C5: L·b must be proportional to ★ and Rᵀa likewise.
// k is a coordinate with ★_k ≠ 0.
inline void coherent_parallel_rows(const OperadPresentation& p, std::size_t k, Mat& rows,
                                   Vec& rhs) {
    std::size_t n = p.n();
    std::vector<Scalar> rhs_entries;
    for (const auto& rel : p.relations) {
        const Mat& L = rel.left;
        const Mat& R = rel.right;
        for (std::size_t s = 0; s < n; ++s) {
            if (s == k) continue;
            Vec row(2 * n);  // ★_k (Lb)_s − ★_s (Lb)_k = 0
            for (std::size_t t = 0; t < n; ++t)
                row[n + t] = p.star[k] * L.at(s, t) - p.star[s] * L.at(k, t);
            rows.append_row(row);
            rhs_entries.push_back(Scalar(0));
        }
        for (std::size_t s = 0; s < n; ++s) {
            if (s == k) continue;
            Vec row(2 * n);  // ★_k (Rᵀa)_s − ★_s (Rᵀa)_k = 0
            for (std::size_t u = 0; u < n; ++u)
                row[u] = p.star[k] * R.at(u, s) - p.star[s] * R.at(u, k);
            rows.append_row(row);
            rhs_entries.push_back(Scalar(0));
        }
    }
    Vec merged(rhs.dim() + rhs_entries.size());
    for (std::size_t i = 0; i < rhs.dim(); ++i) merged[i] = rhs[i];
    for (std::size_t i = 0; i < rhs_entries.size(); ++i) merged[rhs.dim() + i] = rhs_entries[i];
    rhs = std::move(merged);
}

// Quadratic polynomial in the family parameters c: value = c0 + Σ lin_i c_i
// + Σ_{i<=j} quad_{ij} c_i c_j.
struct ParamQuadratic {
    Scalar c0;
    std::vector<Scalar> lin;
    std::vector<std::vector<Scalar>> quad;  // upper triangle, quad[i][j-i]

    bool is_zero() const {
        if (!c0.is_zero()) return false;
        for (const auto& l : lin)
            if (!l.is_zero()) return false;
        for (const auto& row : quad)
            for (const auto& q : row)
                if (!q.is_zero()) return false;
        return true;
    }
    Scalar eval(const std::vector<Scalar>& c) const {
        Scalar v = c0;
        for (std::size_t i = 0; i < lin.size(); ++i) v += lin[i] * c[i];
        for (std::size_t i = 0; i < lin.size(); ++i)
            for (std::size_t j = i; j < lin.size(); ++j) v += quad[i][j - i] * c[i] * c[j];
        return v;
    }
};

// Substitute the affine family point(c) = z0 + Σ c_i dir_i into the scalar
// quadratic  z ↦ ★_k · (yᵀ M y) − (row_k of N) · y  where y is the a- or
// b-half of z.
inline ParamQuadratic substitute_quadratic(const Vec& z0, const Mat& dirs, std::size_t n,
                                           bool use_beta_half, const Mat& m_quad,
                                           const Mat& m_lin, std::size_t k,
                                           const Scalar& star_k) {
    std::size_t d = dirs.rows();
    std::size_t off = use_beta_half ? n : 0;
    auto half = [&](const Vec& z) {
        Vec y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = z[off + i];
        return y;
    };
    Vec y0 = half(z0);
    std::vector<Vec> yd;
    for (std::size_t i = 0; i < d; ++i) yd.push_back(half(dirs.row(i)));

    auto quad_part = [&](const Vec& x, const Vec& y) { return dot(x, m_quad * y); };
    auto lin_part = [&](const Vec& y) { return (m_lin * y)[k]; };

    ParamQuadratic q;
    q.c0 = star_k * quad_part(y0, y0) - lin_part(y0);
    q.lin.resize(d);
    q.quad.assign(d, {});
    for (std::size_t i = 0; i < d; ++i) {
        q.lin[i] = star_k * (quad_part(yd[i], y0) + quad_part(y0, yd[i])) - lin_part(yd[i]);
        q.quad[i].resize(d - i);
        for (std::size_t j = i; j < d; ++j) {
            Scalar v = star_k * quad_part(yd[i], yd[j]);
            if (i != j) v += star_k * quad_part(yd[j], yd[i]);
            q.quad[i][j - i] = v;
        }
    }
    return q;
}

// Rational roots of c0 + c1 t + c2 t², with a textual note when irrational
// roots exist. Returns nullopt when the polynomial vanishes identically.
struct UnivariateRoots {
    bool identically_zero = false;
    bool no_roots = false;
    std::vector<Scalar> roots;
    std::string note;
};

inline UnivariateRoots rational_roots(const Scalar& c0, const Scalar& c1, const Scalar& c2) {
    UnivariateRoots out;
    if (c2.is_zero() && c1.is_zero() && c0.is_zero()) {
        out.identically_zero = true;
        return out;
    }
    if (c2.is_zero() && c1.is_zero()) {
        out.no_roots = true;
        return out;
    }
    if (c2.is_zero()) {
        out.roots.push_back(Scalar(0) - c0 / c1);
        return out;
    }
    Scalar disc = c1 * c1 - Scalar(4) * c2 * c0;
    if (disc.sign() < 0) {
        out.no_roots = true;
        out.note = "negative discriminant " + disc.to_string();
        return out;
    }
    auto root = sqrt_exact(disc);
    if (!root) {
        out.no_roots = true;
        out.note = "discriminant " + disc.to_string() + " is not a rational square";
        return out;
    }
    Scalar two_c2 = Scalar(2) * c2;
    out.roots.push_back((Scalar(0) - c1 + *root) / two_c2);
    if (!root->is_zero()) out.roots.push_back((Scalar(0) - c1 - *root) / two_c2);
    return out;
}

}  // namespace detail

// Exact solver for unit actions. Compatible mode is a linear problem and is
// solved completely. Coherent mode additionally imposes the proportionality
// of L·b and Rᵀa to ★ (the linear content of C4/C5) and then treats the
// per-relation scalar residuals ★_k(bᵀRb) − (Lb)_k and ★_k(aᵀLa) − (Rᵀa)_k
// symbolically on the solution family. On that family the residuals vanish
// identically: C1 turns bᵀRb into bᵀLb, proportionality turns it into
// (Lb)_k/★_k times bᵀ★, and normalization closes the loop (same for C5 via
// C3). The coherent solution set is therefore itself an affine space; the
// quadratic fallbacks below (exact rational roots on a line, unresolved
// constraints on larger families) are kept as guards and would only trigger
// on an internally inconsistent system.
inline ActionSolutionSet solve(const OperadPresentation& p, Mode mode) {
    if (!is_valid(p)) throw std::invalid_argument("solve: invalid presentation");
    std::size_t n = p.n();
    Mat rows;
    Vec rhs;
    detail::compat_system(p, rows, rhs);

    ActionSolutionSet out;
    auto base = solve_affine(rows, rhs);
    if (!base) return out;  // Empty

    if (mode == Mode::Compatible) {
        if (base->homogeneous.dim() == 0) {
            out.status = SolStatus::Points;
            out.points.push_back(detail::split_action(base->particular, n));
        } else {
            out.status = SolStatus::Family;
            out.particular = detail::split_action(base->particular, n);
            out.directions = base->homogeneous;
        }
        return out;
    }

    std::size_t k = 0;
    while (p.star[k].is_zero()) ++k;
    detail::coherent_parallel_rows(p, k, rows, rhs);
    auto lin = solve_affine(rows, rhs);
    if (!lin) return out;  // Empty: C4/C5 proportionality unsatisfiable

    const Vec& z0 = lin->particular;
    const Mat& dirs = lin->homogeneous.basis();
    std::size_t d = dirs.rows();

    std::vector<detail::ParamQuadratic> residuals;
    for (const auto& rel : p.relations) {
        // C4 scalar: ★_k (bᵀR b) − (L b)_k;  C5 scalar: ★_k (aᵀL a) − (Rᵀa)_k
        residuals.push_back(detail::substitute_quadratic(z0, dirs, n, true, rel.right,
                                                         rel.left, k, p.star[k]));
        residuals.push_back(detail::substitute_quadratic(z0, dirs, n, false, rel.left,
                                                         rel.right.transpose(), k, p.star[k]));
    }
    residuals.erase(std::remove_if(residuals.begin(), residuals.end(),
                                   [](const detail::ParamQuadratic& q) { return q.is_zero(); }),
                    residuals.end());

    auto verified_point = [&](const Vec& z) -> std::optional<UnitAction> {
        UnitAction u = detail::split_action(z, n);
        if (check(p, u, Mode::Coherent).coherent) return u;
        return std::nullopt;
    };

    if (residuals.empty()) {
        if (d == 0) {
            auto u = verified_point(z0);
            if (!u) throw std::logic_error("solve: point failed re-verification");
            out.status = SolStatus::Points;
            out.points.push_back(*u);
        } else {
            out.status = SolStatus::Family;
            out.particular = detail::split_action(z0, n);
            out.directions = lin->homogeneous;
        }
        return out;
    }

    if (d == 0) {
        out.residual_constraints = "C4/C5 residual nonzero at the unique compatible point";
        return out;  // Empty: some residual is a nonzero constant
    }

    if (d == 1) {
        const auto& first = residuals.front();
        auto roots = detail::rational_roots(first.c0, first.lin[0], first.quad[0][0]);
        out.residual_constraints = roots.note;
        std::vector<UnitAction> pts;
        for (const auto& t : roots.roots) {
            bool all = true;
            for (const auto& q : residuals)
                if (!q.eval({t}).is_zero()) {
                    all = false;
                    break;
                }
            if (!all) continue;
            Vec z = z0 + t * dirs.row(0);
            auto u = verified_point(z);
            if (!u) throw std::logic_error("solve: root failed re-verification");
            pts.push_back(*u);
        }
        if (pts.empty()) return out;  // Empty, note kept
        out.status = SolStatus::Points;
        out.points = std::move(pts);
        return out;
    }

    out.status = SolStatus::Family;
    out.particular = detail::split_action(z0, n);
    out.directions = lin->homogeneous;
    out.residual_constraints = std::to_string(residuals.size()) +
                               " unresolved quadratic C4/C5 constraints on a " +
                               std::to_string(d) + "-parameter compatible family";
    return out;
}

// Change of basis adapted to a compatible action, following the
// classification proof: a basis op_1..op_n with ★ = Σ op_i on which α, β
// take the values δ_1i, δ_2i (or both δ_1i when α = β). Columns of the
// returned matrix are the new basis vectors in the old coordinates.
struct AdaptedBasis {
    Mat t;
    bool alpha_eq_beta;
};

inline AdaptedBasis adapted_basis(const OperadPresentation& p, const UnitAction& u) {
    if (!check(p, u, Mode::Compatible).compatible)
        throw std::invalid_argument("adapted_basis: action is not compatible");
    std::size_t n = p.n();
    const Vec& a = u.alpha;
    const Vec& b = u.beta;

    Mat t(n, n);
    auto set_col = [&](std::size_t j, const Vec& v) {
        for (std::size_t i = 0; i < n; ++i) t.at(i, j) = v[i];
    };

    if (a == b) {
        Mat arow(0, n);
        arow.append_row(a);
        Mat ker = kernel(arow);  // n-1 rows
        Vec op1 = p.star;
        for (std::size_t i = 0; i < ker.rows(); ++i) op1 = op1 - ker.row(i);
        set_col(0, op1);
        for (std::size_t i = 0; i < ker.rows(); ++i) set_col(i + 1, ker.row(i));
        inverse(t);  // throws if the construction degenerated
        return {t, true};
    }

    Mat ba(0, n), ab(0, n);
    ba.append_row(b);
    ba.append_row(a);
    ab.append_row(a);
    ab.append_row(b);
    Vec rhs{Scalar(0), Scalar(1)};
    Vec op1 = solve_affine(ba, rhs)->particular;  // β(op1)=0, α(op1)=1
    Vec op2 = solve_affine(ab, rhs)->particular;  // α(op2)=0, β(op2)=1
    Vec v = p.star - op1 - op2;                   // lies in ker α ∩ ker β

    if (n == 2) {
        set_col(0, op1);
        set_col(1, op2);
        inverse(t);
        return {t, false};
    }

    Mat inter = kernel(ab);  // basis of ker α ∩ ker β, n-2 rows
    if (v.is_zero()) {
        // Shift op1 by the first intersection vector so that v ≠ 0.
        op1 = op1 + inter.row(0);
        v = p.star - op1 - op2;
    }
    // Extend v to a basis of the intersection, v first.
    Mat picked(0, n);
    picked.append_row(v);
    Subspace span = Subspace::from_rows(n, picked);
    for (std::size_t i = 0; i < inter.rows() && picked.rows() < n - 2; ++i) {
        if (span.member(inter.row(i))) continue;
        picked.append_row(inter.row(i));
        span = Subspace::from_rows(n, picked);
    }
    Vec op3 = v;
    for (std::size_t i = 1; i < picked.rows(); ++i) op3 = op3 - picked.row(i);
    set_col(0, op1);
    set_col(1, op2);
    set_col(2, op3);
    for (std::size_t i = 1; i < picked.rows(); ++i) set_col(2 + i, picked.row(i));
    inverse(t);
    return {t, false};
}

enum class OperadClass { CoherentNeq, CoherentEq, CompatibleNeqOnly, CompatibleEqOnly, None };

inline const char* to_string(OperadClass c) {
    switch (c) {
        case OperadClass::CoherentNeq: return "CoherentNeq";
        case OperadClass::CoherentEq: return "CoherentEq";
        case OperadClass::CompatibleNeqOnly: return "CompatibleNeqOnly";
        case OperadClass::CompatibleEqOnly: return "CompatibleEqOnly";
        case OperadClass::None: return "None";
    }
    return "?";
}

struct ClassReport {
    OperadClass best = OperadClass::None;
    std::optional<UnitAction> witness;
    std::optional<Mat> basis;
    bool containment = false;
};

namespace detail {

inline void add_candidate(std::vector<UnitAction>& cands, const OperadPresentation& p,
                          UnitAction u) {
    if (!is_normalized(p, u)) return;
    for (const auto& c : cands)
        if (c == u) return;
    cands.push_back(std::move(u));
}

}  // namespace detail

// Classification per the canonical-space theorem: find witness actions via
// the solver (plus δ-vector probes on families the quadratic step leaves
// unresolved), build the adapted basis for each, and certify the strongest
// class whose canonical containment holds. None iff no compatible action
// exists for the presentation's ★.
inline ClassReport classify(const OperadPresentation& p) {
    ClassReport report;
    std::size_t n = p.n();
    auto compat = solve(p, Mode::Compatible);
    if (compat.status == SolStatus::Empty) return report;

    std::vector<UnitAction> cands;
    auto harvest = [&](const ActionSolutionSet& s) {
        for (const auto& u : s.points) detail::add_candidate(cands, p, u);
        if (s.particular) {
            detail::add_candidate(cands, p, *s.particular);
            const Mat& dirs = s.directions->basis();
            for (std::size_t i = 0; i < dirs.rows(); ++i) {
                UnitAction u = *s.particular;
                UnitAction v = *s.particular;
                Vec du = detail::split_action(dirs.row(i), n).alpha;
                Vec dv = detail::split_action(dirs.row(i), n).beta;
                u.alpha = u.alpha + du;
                u.beta = u.beta + dv;
                v.alpha = v.alpha - du;
                v.beta = v.beta - dv;
                detail::add_candidate(cands, p, u);
                detail::add_candidate(cands, p, v);
            }
        }
    };
    harvest(solve(p, Mode::Coherent));
    harvest(compat);
    for (std::size_t i = 0; i < n; ++i) {
        if (p.star[i] != Scalar(1)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (p.star[j] != Scalar(1)) continue;
            Vec a(n), b(n);
            a[i] = Scalar(1);
            b[j] = Scalar(1);
            detail::add_candidate(cands, p, {a, b});
        }
    }
    // An α = β compatible witness, if any exists: intersect the compatible
    // family with the subspace a = b.
    {
        Mat rows;
        Vec rhs;
        detail::compat_system(p, rows, rhs);
        Vec merged(rhs.dim() + n);
        for (std::size_t i = 0; i < rhs.dim(); ++i) merged[i] = rhs[i];
        for (std::size_t i = 0; i < n; ++i) {
            Vec row(2 * n);
            row[i] = Scalar(1);
            row[n + i] = Scalar(-1);
            rows.append_row(row);
        }
        if (auto eq = solve_affine(rows, merged))
            detail::add_candidate(cands, p, detail::split_action(eq->particular, n));
    }

    std::vector<UnitAction> coh_neq, coh_eq, comp_neq, comp_eq;
    for (const auto& u : cands) {
        Verdict v = check(p, u, Mode::Coherent);
        if (!v.compatible) continue;
        bool eq = (u.alpha == u.beta);
        if (v.coherent) (eq ? coh_eq : coh_neq).push_back(u);
        (eq ? comp_eq : comp_neq).push_back(u);
    }

    Subspace rel = relation_subspace(p);
    auto attempt = [&](OperadClass cls, CanonicalKind kind,
                       const std::vector<UnitAction>& list) -> bool {
        for (const auto& u : list) {
            AdaptedBasis ab = adapted_basis(p, u);
            OperadPresentation q = change_basis(p, ab.t);
            if (canonical_space(kind, n).contains(relation_subspace(q))) {
                report.best = cls;
                report.witness = u;
                report.basis = ab.t;
                report.containment = true;
                return true;
            }
        }
        return false;
    };
    if (n >= 2 && attempt(OperadClass::CoherentNeq, CanonicalKind::CohNeq, coh_neq))
        return report;
    if (attempt(OperadClass::CoherentEq, CanonicalKind::CohEq, coh_eq)) return report;
    if (n >= 2 && attempt(OperadClass::CompatibleNeqOnly, CanonicalKind::CompNeq, comp_neq))
        return report;
    if (attempt(OperadClass::CompatibleEqOnly, CanonicalKind::CompEq, comp_eq)) return report;

    // A compatible action exists but no certificate went through; report the
    // compatible class without a containment certificate.
    if (!comp_neq.empty()) {
        report.best = OperadClass::CompatibleNeqOnly;
        report.witness = comp_neq.front();
    } else if (!comp_eq.empty()) {
        report.best = OperadClass::CompatibleEqOnly;
        report.witness = comp_eq.front();
    }
    return report;
}

}  // namespace operadic

#endif
