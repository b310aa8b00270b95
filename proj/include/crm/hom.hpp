#pragma once

#include "crm/errors.hpp"
#include "crm/rng.hpp"
#include "crm/window.hpp"

namespace crm {

// Degree-zero homomorphisms E -> G: families {f_d : E_d -> G_d} commuting
// with every variable action, found by solving the commutation system.
template <class F>
struct HomSpace {
    int lo = 0, hi = -1;
    std::vector<std::map<int, Matrix<F>>> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

template <class F>
HomSpace<F> hom_degree_zero(const Window<F>& e, const Window<F>& g) {
    if (e.nvars != g.nvars) throw WindowMismatch("different ambient rings");
    const F& f = e.f;
    int lo = std::max(e.lo, g.lo), hi = std::min(e.hi, g.hi);
    if (hi < lo) throw WindowMismatch("windows do not overlap");

    // Unknowns: entries of each f_d, flattened per degree.
    std::vector<int> offset;
    int total = 0;
    for (int d = lo; d <= hi; ++d) {
        offset.push_back(total);
        total += g.dim(d) * e.dim(d);
    }
    auto unk = [&](int d, int i, int j) {  // f_d[i][j]
        return offset[static_cast<std::size_t>(d - lo)] + i * e.dim(d) + j;
    };

    int neq = 0;
    for (int d = lo; d < hi; ++d) neq += e.nvars * g.dim(d + 1) * e.dim(d);
    Matrix<F> sys(f, neq, total);
    int row = 0;
    for (int d = lo; d < hi; ++d) {
        for (int v = 0; v < e.nvars; ++v) {
            const Matrix<F>& xg = g.act(v, d);
            const Matrix<F>& xe = e.act(v, d);
            // (X^G f_d - f_{d+1} X^E)[i][j] = 0
            for (int i = 0; i < g.dim(d + 1); ++i)
                for (int j = 0; j < e.dim(d); ++j) {
                    for (int k = 0; k < g.dim(d); ++k)
                        if (!f.is_zero(xg.at(i, k))) {
                            auto& c = sys.at(row, unk(d, k, j));
                            c = f.add(c, xg.at(i, k));
                        }
                    for (int k = 0; k < e.dim(d + 1); ++k)
                        if (!f.is_zero(xe.at(k, j))) {
                            auto& c = sys.at(row, unk(d + 1, i, k));
                            c = f.sub(c, xe.at(k, j));
                        }
                    ++row;
                }
        }
    }
    Matrix<F> ker = mat_kernel_basis(sys);
    HomSpace<F> hs;
    hs.lo = lo;
    hs.hi = hi;
    for (int c = 0; c < ker.cols(); ++c) {
        std::map<int, Matrix<F>> fam;
        for (int d = lo; d <= hi; ++d) {
            Matrix<F> m(f, g.dim(d), e.dim(d));
            for (int i = 0; i < g.dim(d); ++i)
                for (int j = 0; j < e.dim(d); ++j) m.at(i, j) = ker.at(unk(d, i, j), c);
            fam[d] = std::move(m);
        }
        hs.basis.push_back(std::move(fam));
    }
    return hs;
}

// Random element of the Hom space with coefficients from {-3,...,3}.
template <class F>
std::map<int, Matrix<F>> sample_hom(const HomSpace<F>& hs, const F& f, Rng& rng) {
    std::map<int, Matrix<F>> out;
    if (hs.basis.empty()) return out;
    std::vector<typename F::Element> coeffs;
    bool nonzero = false;
    for (int b = 0; b < hs.dim(); ++b) {
        auto c = f.from_int(rng.small_coeff());
        if (!f.is_zero(c)) nonzero = true;
        coeffs.push_back(c);
    }
    if (!nonzero) coeffs[0] = f.one();
    for (auto& [d, m0] : hs.basis[0]) {
        Matrix<F> acc(f, m0.rows(), m0.cols());
        for (int b = 0; b < hs.dim(); ++b) {
            if (f.is_zero(coeffs[static_cast<std::size_t>(b)])) continue;
            acc = acc + hs.basis[static_cast<std::size_t>(b)].at(d).scaled(
                            coeffs[static_cast<std::size_t>(b)]);
        }
        out[d] = std::move(acc);
    }
    return out;
}

}  // namespace crm
