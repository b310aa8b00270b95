#pragma once

#include <optional>
#include <vector>

#include "crm/matrix.hpp"
#include "crm/rng.hpp"

namespace crm {

// A linear pencil A(x) = sum_v x_v A_v of constant matrices.
template <class F>
struct LinearPencil {
    F f;
    int nvars = 0;
    int rows = 0, cols = 0;
    std::vector<Matrix<F>> coeff;  // one matrix per variable

    LinearPencil() = default;
    LinearPencil(F field, int nv, int r, int c)
        : f(std::move(field)), nvars(nv), rows(r), cols(c) {
        for (int v = 0; v < nv; ++v) coeff.push_back(Matrix<F>(f, r, c));
    }

    Matrix<F> eval(const std::vector<typename F::Element>& point) const {
        Matrix<F> m(f, rows, cols);
        for (int v = 0; v < nvars; ++v) {
            if (f.is_zero(point[static_cast<std::size_t>(v)])) continue;
            m = m + coeff[static_cast<std::size_t>(v)].scaled(
                        point[static_cast<std::size_t>(v)]);
        }
        return m;
    }

    bool is_skew() const {
        if (rows != cols) return false;
        for (const auto& a : coeff)
            if (!(a.transpose() == a.negated())) return false;
        return true;
    }

    bool operator==(const LinearPencil& o) const {
        if (nvars != o.nvars || rows != o.rows || cols != o.cols) return false;
        for (int v = 0; v < nvars; ++v)
            if (!(coeff[static_cast<std::size_t>(v)] ==
                  o.coeff[static_cast<std::size_t>(v)]))
                return false;
        return true;
    }
};

inline std::optional<LinearPencil<GFp>> pencil_mod_p(const LinearPencil<QQ>& a,
                                                     const GFp& fp) {
    LinearPencil<GFp> out(fp, a.nvars, a.rows, a.cols);
    for (int v = 0; v < a.nvars; ++v)
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j) {
                auto r = reduce_mod(a.coeff[static_cast<std::size_t>(v)].at(i, j), fp);
                if (!r) return std::nullopt;
                out.coeff[static_cast<std::size_t>(v)].at(i, j) = *r;
            }
    return out;
}

// Left symmetrization: an invertible constant S with S*A_v skew for all v,
// when the solution space of the linear system contains an invertible
// element (searched on random lines through the space).
template <class F>
std::optional<Matrix<F>> left_skew_symmetrize(const LinearPencil<F>& a,
                                              Rng& rng, int tries = 32) {
    if (a.rows != a.cols) throw std::invalid_argument("pencil must be square");
    const F& f = a.f;
    int n = a.rows;
    // Unknowns: S_{pq}, n^2 of them. Equations: (S A_v)_{ij} + (S A_v)_{ji} = 0
    // for i <= j and each v.
    int neq = a.nvars * n * (n + 1) / 2;
    Matrix<F> sys(f, neq, n * n);
    int row = 0;
    for (int v = 0; v < a.nvars; ++v) {
        const Matrix<F>& av = a.coeff[static_cast<std::size_t>(v)];
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                for (int q = 0; q < n; ++q) {
                    // d/dS_{iq} of (S A_v)_{ij} = A_v[q][j]
                    auto& c1 = sys.at(row, i * n + q);
                    c1 = f.add(c1, av.at(q, j));
                    auto& c2 = sys.at(row, j * n + q);
                    c2 = f.add(c2, av.at(q, i));
                }
                ++row;
            }
    }
    Matrix<F> ker = mat_kernel_basis(sys);
    if (ker.cols() == 0) return std::nullopt;
    auto unpack = [&](const std::vector<typename F::Element>& vec) {
        Matrix<F> s(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int q = 0; q < n; ++q) s.at(i, q) = vec[static_cast<std::size_t>(i * n + q)];
        return s;
    };
    // Single basis vectors first, then random combinations.
    for (int j = 0; j < ker.cols(); ++j) {
        Matrix<F> s = unpack(ker.column_vec(j));
        if (mat_rank(s) == n) return s;
    }
    for (int t = 0; t < tries; ++t) {
        std::vector<typename F::Element> vec(static_cast<std::size_t>(n * n), f.zero());
        for (int j = 0; j < ker.cols(); ++j) {
            auto c = f.from_int(rng.small_coeff());
            if (f.is_zero(c)) continue;
            auto col = ker.column_vec(j);
            for (std::size_t i = 0; i < vec.size(); ++i)
                vec[i] = f.add(vec[i], f.mul(c, col[i]));
        }
        Matrix<F> s = unpack(vec);
        if (mat_rank(s) == n) return s;
    }
    return std::nullopt;
}

}  // namespace crm
