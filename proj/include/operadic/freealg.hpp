#ifndef OPERADIC_FREEALG_HPP
#define OPERADIC_FREEALG_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "operadic/presentation.hpp"
#include "operadic/unit_action.hpp"

namespace operadic {

enum class MulStatus { Ok, Undefined, TruncationExceeded };

// Element of the unitized truncated free algebra on one generator x:
// k·1 ⊕ k·x ⊕ G ⊕ P₃ with P₃ = (G⊗²⊕G⊗²)/R modelled by the non-pivot
// coordinates of the RREF of R.
struct FreeElement {
    Scalar unit, x;
    Vec deg2, deg3;

    bool is_zero() const {
        return unit.is_zero() && x.is_zero() && deg2.is_zero() && deg3.is_zero();
    }
    friend bool operator==(const FreeElement& a, const FreeElement& b) {
        return a.unit == b.unit && a.x == b.x && a.deg2 == b.deg2 && a.deg3 == b.deg3;
    }
};

// Operation applied in a product: a basis generator or the distinguished ★.
struct OpRef {
    bool is_star;
    std::size_t idx;

    static OpRef star() { return {true, 0}; }
    static OpRef gen(std::size_t i) { return {false, i}; }
};

template <typename T>
struct MulResult {
    MulStatus status = MulStatus::Ok;
    T value{};
};

class TruncatedFree {
public:
    explicit TruncatedFree(OperadPresentation pres)
        : p_(std::move(pres)), rel_(relation_subspace(p_)) {
        if (!is_valid(p_)) throw std::invalid_argument("TruncatedFree: invalid presentation");
        std::size_t n = p_.n();
        std::size_t ambient = 2 * n * n;
        std::vector<bool> is_pivot(ambient, false);
        for (std::size_t c : rel_.pivots()) is_pivot[c] = true;
        for (std::size_t c = 0; c < ambient; ++c)
            if (!is_pivot[c]) coset_.push_back(c);
        // Triple products of basis elements. The right-parenthesized product
        // x∘(y∘z) carries a minus sign in the mod-R embedding; with that
        // convention every relation of R holds verbatim between the two
        // parenthesizations, and only relations do.
        left_.resize(n * n);
        right_.resize(n * n);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) {
                Vec e(ambient);
                e[flat_index(0, s, t, n)] = Scalar(1);
                left_[s * n + t] = project(e);
                Vec f(ambient);
                f[flat_index(1, s, t, n)] = Scalar(-1);
                right_[s * n + t] = project(f);
            }
        star_left_.assign(n, Vec(dim_deg3()));
        star_right_.assign(n, Vec(dim_deg3()));
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) {
                if (!p_.star[t].is_zero())
                    star_left_[s] = star_left_[s] + p_.star[t] * left_class(s, t);
                if (!p_.star[s].is_zero())
                    star_right_[t] = star_right_[t] + p_.star[s] * right_class(s, t);
            }
        star_gen_ = p_.n();
        for (std::size_t i = 0; i < n; ++i) {
            Vec e(n);
            e[i] = Scalar(1);
            if (p_.star == e) {
                star_gen_ = i;
                break;
            }
        }
    }

    const OperadPresentation& presentation() const { return p_; }
    std::size_t n() const { return p_.n(); }
    std::size_t dim_deg3() const { return coset_.size(); }

    // Projection of a full (G⊗²⊕G⊗²)-coordinate vector onto the coset
    // coordinates; the relation span is exactly the kernel.
    Vec project(const Vec& full) const {
        Vec r = rel_.reduce(full);
        Vec out(coset_.size());
        for (std::size_t i = 0; i < coset_.size(); ++i) out[i] = r[coset_[i]];
        return out;
    }

    const Vec& left_class(std::size_t s, std::size_t t) const { return left_[s * n() + t]; }
    const Vec& right_class(std::size_t s, std::size_t t) const { return right_[s * n() + t]; }

    FreeElement zero() const {
        return {Scalar(0), Scalar(0), Vec(n()), Vec(dim_deg3())};
    }
    FreeElement one() const {
        FreeElement e = zero();
        e.unit = Scalar(1);
        return e;
    }
    FreeElement x() const {
        FreeElement e = zero();
        e.x = Scalar(1);
        return e;
    }
    FreeElement gen(std::size_t s) const {
        FreeElement e = zero();
        e.deg2[s] = Scalar(1);
        return e;
    }

    // The operation as a vector equals ★ precisely when 1 ∘ 1 is defined.
    bool op_is_star(OpRef op) const { return op.is_star || op.idx == star_gen_; }

    Scalar alpha_of(OpRef op, const UnitAction& u) const {
        return op.is_star ? Scalar(1) : u.alpha[op.idx];
    }
    Scalar beta_of(OpRef op, const UnitAction& u) const {
        return op.is_star ? Scalar(1) : u.beta[op.idx];
    }

    // Restricted product on the unitization: unit factors scale by α/β,
    // 1 ∘ 1 is the unit for ∘ = ★ and undefined otherwise, x·x lands in
    // degree 2, degree-2 times x lands in the degree-3 cosets, and anything
    // beyond total degree 3 exceeds the modelled range.
    MulResult<FreeElement> mul(const FreeElement& u, OpRef op, const FreeElement& v,
                               const UnitAction& act) const {
        bool u_high = !u.deg2.is_zero() || !u.deg3.is_zero();
        bool v_high = !v.deg2.is_zero() || !v.deg3.is_zero();
        if ((!u.deg3.is_zero() && (!v.x.is_zero() || v_high)) ||
            (!v.deg3.is_zero() && (!u.x.is_zero() || u_high)) ||
            (!u.deg2.is_zero() && !v.deg2.is_zero()))
            return {MulStatus::TruncationExceeded, {}};
        if (!u.unit.is_zero() && !v.unit.is_zero() && !op_is_star(op))
            return {MulStatus::Undefined, {}};

        FreeElement r = zero();
        std::size_t nn = n();
        if (!u.unit.is_zero() && !v.unit.is_zero()) r.unit = u.unit * v.unit;
        if (!u.unit.is_zero()) {  // 1 ∘ w = β(∘) w
            Scalar c = u.unit * beta_of(op, act);
            if (!c.is_zero()) {
                r.x += c * v.x;
                r.deg2 = r.deg2 + c * v.deg2;
                r.deg3 = r.deg3 + c * v.deg3;
            }
        }
        if (!v.unit.is_zero()) {  // w ∘ 1 = α(∘) w
            Scalar c = v.unit * alpha_of(op, act);
            if (!c.is_zero()) {
                r.x += c * u.x;
                r.deg2 = r.deg2 + c * u.deg2;
                r.deg3 = r.deg3 + c * u.deg3;
            }
        }
        Scalar cxx = u.x * v.x;
        if (!cxx.is_zero()) {  // x ∘ x = e_∘
            if (op.is_star)
                r.deg2 = r.deg2 + cxx * p_.star;
            else
                r.deg2[op.idx] += cxx;
        }
        if (!u.x.is_zero()) {  // x ∘ e_s
            for (std::size_t s = 0; s < nn; ++s) {
                Scalar c = u.x * v.deg2[s];
                if (c.is_zero()) continue;
                r.deg3 = r.deg3 + c * (op.is_star ? star_right_[s] : right_class(op.idx, s));
            }
        }
        if (!v.x.is_zero()) {  // e_s ∘ x
            for (std::size_t s = 0; s < nn; ++s) {
                Scalar c = u.deg2[s] * v.x;
                if (c.is_zero()) continue;
                r.deg3 = r.deg3 + c * (op.is_star ? star_left_[s] : left_class(s, op.idx));
            }
        }
        return {MulStatus::Ok, std::move(r)};
    }

    // Factor-basis indexing used by the box algebra: 0 = 1, 1 = x,
    // 2..2+n-1 = degree 2, then the degree-3 cosets.
    std::size_t basis_count() const { return 2 + n() + dim_deg3(); }

    FreeElement basis_element(std::size_t i) const {
        FreeElement e = zero();
        if (i == 0)
            e.unit = Scalar(1);
        else if (i == 1)
            e.x = Scalar(1);
        else if (i < 2 + n())
            e.deg2[i - 2] = Scalar(1);
        else
            e.deg3[i - 2 - n()] = Scalar(1);
        return e;
    }

    // Sparse (basis index, coefficient) view of an element.
    std::vector<std::pair<std::size_t, Scalar>> expand(const FreeElement& e) const {
        std::vector<std::pair<std::size_t, Scalar>> v;
        if (!e.unit.is_zero()) v.emplace_back(0, e.unit);
        if (!e.x.is_zero()) v.emplace_back(1, e.x);
        for (std::size_t s = 0; s < n(); ++s)
            if (!e.deg2[s].is_zero()) v.emplace_back(2 + s, e.deg2[s]);
        for (std::size_t c = 0; c < dim_deg3(); ++c)
            if (!e.deg3[c].is_zero()) v.emplace_back(2 + n() + c, e.deg3[c]);
        return v;
    }

    std::string basis_label(std::size_t i) const {
        if (i == 0) return "1";
        if (i == 1) return "x";
        if (i < 2 + n()) return p_.gens[i - 2];
        std::size_t flat = coset_[i - 2 - n()];
        std::size_t nn = n();
        std::size_t slot = flat / (nn * nn);
        std::size_t s = (flat % (nn * nn)) / nn;
        std::size_t t = flat % nn;
        return (slot == 0 ? "L:" : "R:") + p_.gens[s] + "," + p_.gens[t];
    }

private:
    OperadPresentation p_;
    Subspace rel_;
    std::vector<std::size_t> coset_;
    std::vector<Vec> left_, right_;        // class of e_s ∘_t x resp. x ∘_t e_s
    std::vector<Vec> star_left_, star_right_;
    std::size_t star_gen_;
};

// Sparse element of (A ⊠ B)₊ over factor-basis index pairs; the (0,0) key is
// the coefficient of the adjoined unit 1⊗1.
using BoxElement = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

inline void box_add(BoxElement& e, std::size_t i, std::size_t j, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = e.find(key);
    if (it == e.end()) {
        e.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
}

inline bool box_equal(const BoxElement& a, const BoxElement& b) { return a == b; }

// Memoizes factor-basis products for one unit action so the oracle's
// instance enumeration does not recompute them.
class FreeEvaluator {
public:
    FreeEvaluator(const TruncatedFree& f, UnitAction act)
        : f_(f), act_(std::move(act)), cache_(f.basis_count() * f.basis_count() * (f.n() + 1)) {}

    const TruncatedFree& algebra() const { return f_; }
    const UnitAction& action() const { return act_; }

    using SparseValue = std::vector<std::pair<std::size_t, Scalar>>;

    const MulResult<SparseValue>& basis_mul(std::size_t i, OpRef op, std::size_t j) {
        std::size_t opc = op.is_star ? f_.n() : op.idx;
        std::size_t key = (i * (f_.n() + 1) + opc) * f_.basis_count() + j;
        auto& slot = cache_[key];
        if (!slot) {
            auto r = f_.mul(f_.basis_element(i), op, f_.basis_element(j), act_);
            MulResult<SparseValue> sv;
            sv.status = r.status;
            if (r.status == MulStatus::Ok) sv.value = f_.expand(r.value);
            slot = std::move(sv);
        }
        return *slot;
    }

    // Product of full unitized elements, bilinear over the factor basis.
    MulResult<FreeElement> mul(const FreeElement& u, OpRef op, const FreeElement& v) {
        return f_.mul(u, op, v, act_);
    }

    // ⊡ product on (A⊠B)₊: slot-wise ★/∘ products unless the right factors
    // are both the unit, in which case the ∘ product happens on the left.
    MulResult<BoxElement> box_mul(const BoxElement& e1, OpRef op, const BoxElement& e2) {
        MulResult<BoxElement> out;
        for (const auto& [k1, c1] : e1)
            for (const auto& [k2, c2] : e2) {
                Scalar c = c1 * c2;
                if (k1.second == 0 && k2.second == 0) {
                    const auto& pr = basis_mul(k1.first, op, k2.first);
                    if (pr.status != MulStatus::Ok) return {pr.status, {}};
                    for (const auto& [ia, ca] : pr.value) box_add(out.value, ia, 0, c * ca);
                } else {
                    const auto& pa = basis_mul(k1.first, OpRef::star(), k2.first);
                    if (pa.status != MulStatus::Ok) return {pa.status, {}};
                    const auto& pb = basis_mul(k1.second, op, k2.second);
                    if (pb.status != MulStatus::Ok) return {pb.status, {}};
                    for (const auto& [ia, ca] : pa.value)
                        for (const auto& [ib, cb] : pb.value)
                            box_add(out.value, ia, ib, c * ca * cb);
                }
            }
        return out;
    }

private:
    const TruncatedFree& f_;
    UnitAction act_;
    std::vector<std::optional<MulResult<SparseValue>>> cache_;
};

struct OracleCounterexample {
    std::size_t relation;
    std::array<int, 3> a_triple;  // 0 = unit, 1 = x; all -1 in compatible mode
    std::array<int, 3> b_triple;
    std::map<std::string, std::string> lhs, rhs;
};

struct OracleResult {
    bool ok = true;
    std::optional<OracleCounterexample> counterexample;
};

namespace detail {

inline std::map<std::string, std::string> render_box(const TruncatedFree& f,
                                                     const BoxElement& e) {
    std::map<std::string, std::string> out;
    for (const auto& [k, c] : e)
        out[f.basis_label(k.first) + "⊗" + f.basis_label(k.second)] = c.to_string();
    return out;
}

inline std::map<std::string, std::string> render_free(const TruncatedFree& f,
                                                      const FreeElement& e) {
    std::map<std::string, std::string> out;
    for (const auto& [i, c] : f.expand(e)) out[f.basis_label(i)] = c.to_string();
    return out;
}

}  // namespace detail

// Brute-force check of the definitional coherence condition on the truncated
// free algebra on one generator, with A = B free. Substitution entries range
// over {1, x}; an instance is skipped when any term on either side is
// undefined. Compatible mode enumerates the three single-unit patterns of
// (b,b',b'') on B₊ only.
class Oracle {
public:
    explicit Oracle(OperadPresentation p) : f_(std::move(p)) {}
    explicit Oracle(TruncatedFree f) : f_(std::move(f)) {}

    const TruncatedFree& algebra() const { return f_; }

    OracleResult run(const UnitAction& act, Mode mode) const {
        if (!is_normalized(f_.presentation(), act))
            throw std::invalid_argument("oracle: action not normalized");
        return mode == Mode::Coherent ? run_coherent(act) : run_compatible(act);
    }

private:
    TruncatedFree f_;

    OracleResult run_compatible(const UnitAction& act) const {
        const auto& rels = f_.presentation().relations;
        std::size_t n = f_.n();
        FreeEvaluator ev(f_, act);
        static constexpr std::array<std::array<int, 3>, 3> patterns{
            {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
        for (std::size_t k = 0; k < rels.size(); ++k) {
            const Mat& L = rels[k].left;
            const Mat& R = rels[k].right;
            for (const auto& pat : patterns) {
                FreeElement b0 = pat[0] ? f_.x() : f_.one();
                FreeElement b1 = pat[1] ? f_.x() : f_.one();
                FreeElement b2 = pat[2] ? f_.x() : f_.one();
                FreeElement lhs = f_.zero(), rhs = f_.zero();
                bool skip = false;
                for (std::size_t s = 0; s < n && !skip; ++s)
                    for (std::size_t t = 0; t < n && !skip; ++t) {
                        if (!L.at(s, t).is_zero()) {
                            auto inner = ev.mul(b0, OpRef::gen(s), b1);
                            auto term = inner.status == MulStatus::Ok
                                            ? ev.mul(inner.value, OpRef::gen(t), b2)
                                            : inner;
                            if (term.status != MulStatus::Ok) {
                                require_defined_or_skip(term.status, skip);
                                continue;
                            }
                            add_scaled(lhs, L.at(s, t), term.value);
                        }
                        if (!R.at(s, t).is_zero()) {
                            auto inner = ev.mul(b1, OpRef::gen(t), b2);
                            auto term = inner.status == MulStatus::Ok
                                            ? ev.mul(b0, OpRef::gen(s), inner.value)
                                            : inner;
                            if (term.status != MulStatus::Ok) {
                                require_defined_or_skip(term.status, skip);
                                continue;
                            }
                            add_scaled(rhs, R.at(s, t), term.value);
                        }
                    }
                if (skip) continue;
                if (!(lhs == rhs)) {
                    OracleResult res;
                    res.ok = false;
                    res.counterexample = OracleCounterexample{
                        k,
                        {-1, -1, -1},
                        {pat[0], pat[1], pat[2]},
                        detail::render_free(f_, lhs),
                        detail::render_free(f_, rhs)};
                    return res;
                }
            }
        }
        return {};
    }

    OracleResult run_coherent(const UnitAction& act) const {
        const auto& rels = f_.presentation().relations;
        std::size_t n = f_.n();
        FreeEvaluator ev(f_, act);
        for (std::size_t k = 0; k < rels.size(); ++k) {
            const Mat& L = rels[k].left;
            const Mat& R = rels[k].right;
            for (int amask = 0; amask < 8; ++amask) {
                for (int bmask = 0; bmask < 8; ++bmask) {
                    if (bmask == 0) continue;  // (b,b',b'') = (1,1,1) excluded
                    std::array<int, 3> at{(amask >> 2) & 1, (amask >> 1) & 1, amask & 1};
                    std::array<int, 3> bt{(bmask >> 2) & 1, (bmask >> 1) & 1, bmask & 1};
                    std::array<BoxElement, 3> atoms;
                    for (int i = 0; i < 3; ++i)
                        atoms[i] = BoxElement{{{static_cast<std::size_t>(at[i]),
                                                static_cast<std::size_t>(bt[i])},
                                               Scalar(1)}};
                    BoxElement lhs, rhs;
                    bool skip = false;
                    std::vector<std::optional<MulResult<BoxElement>>> inner1(n), inner2(n);
                    for (std::size_t s = 0; s < n && !skip; ++s)
                        for (std::size_t t = 0; t < n && !skip; ++t) {
                            if (!L.at(s, t).is_zero()) {
                                if (!inner1[s])
                                    inner1[s] = ev.box_mul(atoms[0], OpRef::gen(s), atoms[1]);
                                auto term = inner1[s]->status == MulStatus::Ok
                                                ? ev.box_mul(inner1[s]->value, OpRef::gen(t),
                                                             atoms[2])
                                                : *inner1[s];
                                if (term.status != MulStatus::Ok) {
                                    require_defined_or_skip(term.status, skip);
                                    continue;
                                }
                                for (const auto& [key, c] : term.value)
                                    box_add(lhs, key.first, key.second, L.at(s, t) * c);
                            }
                            if (!R.at(s, t).is_zero()) {
                                if (!inner2[t])
                                    inner2[t] = ev.box_mul(atoms[1], OpRef::gen(t), atoms[2]);
                                auto term = inner2[t]->status == MulStatus::Ok
                                                ? ev.box_mul(atoms[0], OpRef::gen(s),
                                                             inner2[t]->value)
                                                : *inner2[t];
                                if (term.status != MulStatus::Ok) {
                                    require_defined_or_skip(term.status, skip);
                                    continue;
                                }
                                for (const auto& [key, c] : term.value)
                                    box_add(rhs, key.first, key.second, R.at(s, t) * c);
                            }
                        }
                    if (skip) continue;
                    if (!box_equal(lhs, rhs)) {
                        OracleResult res;
                        res.ok = false;
                        res.counterexample =
                            OracleCounterexample{k, at, bt, detail::render_box(f_, lhs),
                                                 detail::render_box(f_, rhs)};
                        return res;
                    }
                }
            }
        }
        return {};
    }

    static void require_defined_or_skip(MulStatus st, bool& skip) {
        if (st == MulStatus::TruncationExceeded)
            throw std::logic_error("oracle: truncation exceeded (internal error)");
        skip = true;
    }

    static void add_scaled(FreeElement& acc, const Scalar& c, const FreeElement& v) {
        acc.unit += c * v.unit;
        acc.x += c * v.x;
        acc.deg2 = acc.deg2 + c * v.deg2;
        acc.deg3 = acc.deg3 + c * v.deg3;
    }
};

inline OracleResult oracle(const OperadPresentation& p, const UnitAction& u, Mode mode) {
    return Oracle(p).run(u, mode);
}

inline std::size_t dim_deg3(const OperadPresentation& p) {
    std::size_t n = p.n();
    return 2 * n * n - relation_subspace(p).dim();
}

}  // namespace operadic

#endif
