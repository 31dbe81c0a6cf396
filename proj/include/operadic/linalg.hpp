#ifndef OPERADIC_LINALG_HPP
#define OPERADIC_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "operadic/rational.hpp"

namespace operadic {

using Scalar = Rational;

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : e_(dim) {}
    Vec(std::initializer_list<Scalar> xs) : e_(xs) {}
    explicit Vec(std::vector<Scalar> xs) : e_(std::move(xs)) {}

    std::size_t dim() const { return e_.size(); }
    Scalar& operator[](std::size_t i) { return e_[i]; }
    const Scalar& operator[](std::size_t i) const { return e_[i]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        check_dims(a, b);
        Vec r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        check_dims(a, b);
        Vec r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend Vec operator*(const Scalar& c, const Vec& v) {
        Vec r(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i) r[i] = c * v[i];
        return r;
    }
    friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    friend Scalar dot(const Vec& a, const Vec& b) {
        check_dims(a, b);
        Scalar s;
        for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
        return s;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) s += ", ";
            s += e_[i].to_string();
        }
        return s + ")";
    }

private:
    std::vector<Scalar> e_;

    static void check_dims(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) throw std::invalid_argument("Vec: dimension mismatch");
    }
};

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
            for (const auto& x : r) e_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vec row(std::size_t i) const {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }
    Vec col(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }
    void set_row(std::size_t i, const Vec& v) {
        if (v.dim() != cols_) throw std::invalid_argument("Mat: row dim mismatch");
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
    }
    void append_row(const Vec& v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.dim();
        if (v.dim() != cols_) throw std::invalid_argument("Mat: row dim mismatch");
        for (std::size_t j = 0; j < cols_; ++j) e_.push_back(v[j]);
        ++rows_;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Mat: shape mismatch");
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Mat: shape mismatch");
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend Mat operator*(const Scalar& c, const Mat& m) {
        Mat r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = c * m.e_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    // m * v (column action)
    friend Vec operator*(const Mat& m, const Vec& v) {
        if (m.cols_ != v.dim()) throw std::invalid_argument("Mat: dim mismatch");
        Vec r(m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i) {
            Scalar s;
            for (std::size_t j = 0; j < m.cols_; ++j) s += m.at(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }
    // v^T * m (row action)
    friend Vec operator*(const Vec& v, const Mat& m) {
        if (m.rows_ != v.dim()) throw std::invalid_argument("Mat: dim mismatch");
        Vec r(m.cols_);
        for (std::size_t j = 0; j < m.cols_; ++j) {
            Scalar s;
            for (std::size_t i = 0; i < m.rows_; ++i) s += v[i] * m.at(i, j);
            r[j] = s;
        }
        return r;
    }

    friend Mat kron(const Mat& a, const Mat& b) {
        Mat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
            }
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

struct RrefResult {
    Mat m;
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan over the rationals: pivots normalized to 1, eliminated above
// and below. Row space is preserved; the result is the canonical RREF.
inline RrefResult rref(Mat m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

// Basis of {x : m x = 0}, one row per free column of rref(m).
inline Mat kernel(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    Mat basis(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.m.at(i, f);
        basis.append_row(v);
    }
    return basis;
}

// Row-reduced basis of a subspace of a coordinate space. Zero rows are
// dropped, so two subspaces are equal iff their stored matrices are equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace from_rows(std::size_t ambient, const Mat& rows) {
        if (rows.rows() > 0 && rows.cols() != ambient)
            throw std::invalid_argument("Subspace: ambient mismatch");
        RrefResult rr = rref(rows);
        Subspace s(ambient);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) s.basis_.append_row(rr.m.row(i));
        s.pivots_ = rr.pivots;
        return s;
    }
    static Subspace full(std::size_t ambient) {
        return from_rows(ambient, Mat::identity(ambient));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Residual of v after eliminating all pivot coordinates; zero iff member.
    Vec reduce(Vec v) const {
        if (v.dim() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            const Scalar& c = v[pivots_[i]];
            if (c.is_zero()) continue;
            Scalar f = c;
            for (std::size_t j = pivots_[i]; j < ambient_; ++j)
                v[j] = v[j] - f * basis_.at(i, j);
        }
        return v;
    }
    bool member(const Vec& v) const { return reduce(v).is_zero(); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        for (std::size_t i = 0; i < other.basis_.rows(); ++i)
            if (!member(other.basis_.row(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        Mat rows = a.basis_;
        for (std::size_t i = 0; i < b.basis_.rows(); ++i) rows.append_row(b.basis_.row(i));
        return from_rows(a.ambient_, rows);
    }

    // Zassenhaus: rref of [A|A; B|0] — rows whose left half vanished carry a
    // basis of the intersection in the right half.
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        std::size_t d = a.ambient_;
        Mat block(a.dim() + b.dim(), 2 * d);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < d; ++j) {
                block.at(i, j) = a.basis_.at(i, j);
                block.at(i, d + j) = a.basis_.at(i, j);
            }
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < d; ++j) block.at(a.dim() + i, j) = b.basis_.at(i, j);
        RrefResult rr = rref(std::move(block));
        Mat rows(0, d);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            if (rr.pivots[i] < d) continue;
            Vec v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = rr.m.at(i, d + j);
            rows.append_row(v);
        }
        return from_rows(d, rows);
    }

    // {w : v^T pairing w = 0 for all v in the subspace}
    Subspace annihilator(const Mat& pairing) const {
        if (pairing.rows() != ambient_ || pairing.cols() != ambient_)
            throw std::invalid_argument("Subspace: pairing dimension mismatch");
        Mat system = basis_ * pairing;
        return from_rows(ambient_, kernel(system));
    }

private:
    std::size_t ambient_;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

struct AffineSet {
    Vec particular;
    Subspace homogeneous;
};

// Full solution set of a x = b, or nullopt when the system is infeasible.
// The particular point sets all free variables to zero.
inline std::optional<AffineSet> solve_affine(const Mat& a, const Vec& b) {
    if (a.rows() != b.dim()) throw std::invalid_argument("solve_affine: dim mismatch");
    Mat wide(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) wide.at(i, j) = a.at(i, j);
        wide.at(i, a.cols()) = b[i];
    }
    RrefResult rr = rref(std::move(wide));
    for (std::size_t c : rr.pivots)
        if (c == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.m.at(i, a.cols());
    AffineSet s{std::move(x), Subspace::from_rows(a.cols(), kernel(a))};
    return s;
}

}  // namespace operadic

#endif
