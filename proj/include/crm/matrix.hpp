#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crm/field.hpp"

namespace crm {

// Dense matrix over an exact field. All elimination is plain Gaussian
// elimination in the field; no floating point anywhere.
template <class F>
class Matrix {
  public:
    using Element = typename F::Element;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(F f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, f_.zero()) {}

    static Matrix identity(F f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return f_; }

    Element& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Element& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!f_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Element& x = at(i, k);
                if (f_.is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (f_.is_zero(o.at(k, j))) continue;
                    r.at(i, j) = f_.add(r.at(i, j), f_.mul(x, o.at(k, j)));
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
        return r;
    }

    Matrix scaled(const Element& c) const {
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(a_[i], c);
        return r;
    }

    Matrix negated() const {
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.neg(a_[i]);
        return r;
    }

    Matrix column(int j) const {
        Matrix c(f_, rows_, 1);
        for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
        return c;
    }

    std::vector<Element> column_vec(int j) const {
        std::vector<Element> v(rows_, f_.zero());
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    void set_column(int j, const std::vector<Element>& v) {
        assert(static_cast<int>(v.size()) == rows_);
        for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_);
        Matrix r(a.f_, a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.cols_);
        Matrix r(a.f_, a.rows_ + b.rows_, a.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

  private:
    F f_;
    int rows_, cols_;
    std::vector<Element> a_;

    template <class>
    friend class RowEchelon;
};

template <class F>
std::vector<typename F::Element> mat_apply(const Matrix<F>& m,
                                           const std::vector<typename F::Element>& v) {
    const F& f = m.field();
    std::vector<typename F::Element> out(static_cast<std::size_t>(m.rows()), f.zero());
    for (int j = 0; j < m.cols(); ++j) {
        const auto& x = v[static_cast<std::size_t>(j)];
        if (f.is_zero(x)) continue;
        for (int i = 0; i < m.rows(); ++i) {
            if (f.is_zero(m.at(i, j))) continue;
            out[static_cast<std::size_t>(i)] =
                f.add(out[static_cast<std::size_t>(i)], f.mul(m.at(i, j), x));
        }
    }
    return out;
}

// Reduced row echelon form with pivot bookkeeping.
template <class F>
class RowEchelon {
  public:
    using Element = typename F::Element;

    explicit RowEchelon(const Matrix<F>& m) : f_(m.field()), r_(m), pivots_() {
        int rank = 0;
        for (int c = 0; c < r_.cols() && rank < r_.rows(); ++c) {
            int piv = -1;
            for (int i = rank; i < r_.rows(); ++i)
                if (!f_.is_zero(r_.at(i, c))) { piv = i; break; }
            if (piv < 0) continue;
            if (piv != rank)
                for (int j = 0; j < r_.cols(); ++j) std::swap(r_.at(piv, j), r_.at(rank, j));
            Element inv = f_.inv(r_.at(rank, c));
            for (int j = c; j < r_.cols(); ++j) r_.at(rank, j) = f_.mul(r_.at(rank, j), inv);
            for (int i = 0; i < r_.rows(); ++i) {
                if (i == rank || f_.is_zero(r_.at(i, c))) continue;
                Element factor = r_.at(i, c);
                for (int j = c; j < r_.cols(); ++j)
                    r_.at(i, j) = f_.sub(r_.at(i, j), f_.mul(factor, r_.at(rank, j)));
            }
            pivots_.push_back(c);
            ++rank;
        }
    }

    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }
    const Matrix<F>& rref() const { return r_; }

  private:
    F f_;
    Matrix<F> r_;
    std::vector<int> pivots_;
};

template <class F>
int mat_rank(const Matrix<F>& m) {
    return RowEchelon<F>(m).rank();
}

// Basis of the right kernel, one column per free variable.
template <class F>
Matrix<F> mat_kernel_basis(const Matrix<F>& m) {
    const F& f = m.field();
    RowEchelon<F> re(m);
    const auto& piv = re.pivots();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;
    int nfree = m.cols() - re.rank();
    Matrix<F> k(f, m.cols(), nfree);
    int col = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        k.at(c, col) = f.one();
        for (int r = 0; r < re.rank(); ++r)
            k.at(piv[r], col) = f.neg(re.rref().at(r, c));
        ++col;
    }
    return k;
}

// Solves A X = B exactly; empty when inconsistent.
template <class F>
std::optional<Matrix<F>> mat_solve(const Matrix<F>& a, const Matrix<F>& b) {
    assert(a.rows() == b.rows());
    const F& f = a.field();
    RowEchelon<F> re(Matrix<F>::hstack(a, b));
    Matrix<F> x(f, a.cols(), b.cols());
    for (std::size_t r = 0; r < re.pivots().size(); ++r) {
        int c = re.pivots()[r];
        if (c >= a.cols()) return std::nullopt;  // pivot in the augmented block
        for (int j = 0; j < b.cols(); ++j)
            x.at(c, j) = re.rref().at(static_cast<int>(r), a.cols() + j);
    }
    // Consistency also requires that non-pivot columns of A were not needed;
    // verify by multiplication (cheap relative to elimination).
    if (!(a * x == b)) return std::nullopt;
    return x;
}

// Incremental column-span tracker: used to pick complements and test
// membership without re-running elimination from scratch.
template <class F>
class SpanTracker {
  public:
    using Element = typename F::Element;

    SpanTracker(F f, int dim) : f_(std::move(f)), dim_(dim) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces v against the current echelon rows; returns the residue.
    std::vector<Element> reduce(std::vector<Element> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Element& c = v[static_cast<std::size_t>(lead_[r])];
            if (f_.is_zero(c)) continue;
            Element factor = c;
            for (int j = 0; j < dim_; ++j)
                v[j] = f_.sub(v[j], f_.mul(factor, rows_[r][j]));
        }
        return v;
    }

    // Adds v to the span; true when the span grew.
    bool add(std::vector<Element> v) {
        v = reduce(std::move(v));
        int lead = -1;
        for (int j = 0; j < dim_; ++j)
            if (!f_.is_zero(v[j])) { lead = j; break; }
        if (lead < 0) return false;
        Element inv = f_.inv(v[static_cast<std::size_t>(lead)]);
        for (int j = 0; j < dim_; ++j) v[j] = f_.mul(v[j], inv);
        // Back-substitute into existing rows to keep the reduce() loop simple.
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Element c = rows_[r][static_cast<std::size_t>(lead)];
            if (f_.is_zero(c)) continue;
            for (int j = 0; j < dim_; ++j)
                rows_[r][j] = f_.sub(rows_[r][j], f_.mul(c, v[j]));
        }
        rows_.push_back(std::move(v));
        lead_.push_back(lead);
        return true;
    }

    bool contains(std::vector<Element> v) const {
        v = reduce(std::move(v));
        for (const auto& x : v)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    void add_columns(const Matrix<F>& m) {
        for (int j = 0; j < m.cols(); ++j) add(m.column_vec(j));
    }

  private:
    F f_;
    int dim_;
    std::vector<std::vector<Element>> rows_;
    std::vector<int> lead_;
};

// Quotient of F^N by the column space of P, with a linear projection onto
// coordinates indexed by a complement of standard basis vectors.
template <class F>
class QuotientSpace {
  public:
    using Element = typename F::Element;

    QuotientSpace(const Matrix<F>& p) : f_(p.field()), n_(p.rows()) {
        RowEchelon<F> re(p.transpose());
        const auto& piv = re.pivots();
        std::vector<bool> is_piv(n_, false);
        for (int c : piv) is_piv[c] = true;
        for (int j = 0; j < n_; ++j)
            if (!is_piv[j]) complement_.push_back(j);
        // Rows of the RREF of P^T form a basis of col(P) with leading ones
        // in the pivot coordinates.
        basis_rows_ = Matrix<F>(f_, re.rank(), n_);
        for (int r = 0; r < re.rank(); ++r)
            for (int j = 0; j < n_; ++j) basis_rows_.at(r, j) = re.rref().at(r, j);
        pivots_ = piv;
    }

    int dim() const { return static_cast<int>(complement_.size()); }
    const std::vector<int>& complement() const { return complement_; }

    // Coordinates of v mod col(P) in the complement basis.
    std::vector<Element> project(std::vector<Element> v) const {
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            Element c = v[static_cast<std::size_t>(pivots_[r])];
            if (f_.is_zero(c)) continue;
            for (int j = 0; j < n_; ++j)
                v[j] = f_.sub(v[j], f_.mul(c, basis_rows_.at(static_cast<int>(r), j)));
        }
        std::vector<Element> out(complement_.size(), f_.zero());
        for (std::size_t t = 0; t < complement_.size(); ++t)
            out[t] = v[static_cast<std::size_t>(complement_[t])];
        return out;
    }

    Matrix<F> project_columns(const Matrix<F>& m) const {
        Matrix<F> r(f_, dim(), m.cols());
        for (int j = 0; j < m.cols(); ++j) r.set_column(j, project(m.column_vec(j)));
        return r;
    }

  private:
    F f_;
    int n_;
    std::vector<int> complement_;
    std::vector<int> pivots_;
    Matrix<F> basis_rows_;
};

}  // namespace crm
