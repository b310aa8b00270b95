#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "crm/matrix.hpp"
#include "crm/monomial.hpp"

namespace crm {

// A graded module over k[x_0..x_n] presented on a bounded degree range
// [lo, hi]: one vector space dimension per degree plus, for each variable,
// the multiplication maps M_d -> M_{d+1} for lo <= d < hi.
//
// `exact_below` records that the module is known to vanish in all degrees
// below lo (e.g. a truncation), so queries below the window report zero.
template <class F>
struct Window {
    F f;
    int nvars = 0;  // number of variables = n + 1
    int lo = 0;
    int hi = -1;  // empty when hi < lo
    bool exact_below = false;
    std::vector<int> dims;                        // dims[d - lo], size hi - lo + 1
    std::vector<std::vector<Matrix<F>>> action;   // action[d - lo][v] : M_d -> M_{d+1}

    Window() = default;
    Window(F field, int nv, int lo_, int hi_, bool exact_below_ = false)
        : f(std::move(field)), nvars(nv), lo(lo_), hi(hi_), exact_below(exact_below_) {
        int len = hi >= lo ? hi - lo + 1 : 0;
        dims.assign(static_cast<std::size_t>(len), 0);
        action.assign(len > 0 ? static_cast<std::size_t>(len - 1) : 0,
                      std::vector<Matrix<F>>());
    }

    int dim(int d) const {
        if (d < lo) {
            if (exact_below) return 0;
            throw std::out_of_range("window: degree below range");
        }
        if (d > hi) throw std::out_of_range("window: degree above range");
        return dims[static_cast<std::size_t>(d - lo)];
    }

    bool covers(int d) const { return (d >= lo || exact_below) && d <= hi; }

    void set_dim(int d, int n) {
        dims[static_cast<std::size_t>(d - lo)] = n;
    }

    // Multiplication by x_v from degree d to degree d+1.
    const Matrix<F>& act(int v, int d) const {
        assert(d >= lo && d < hi);
        return action[static_cast<std::size_t>(d - lo)][static_cast<std::size_t>(v)];
    }

    void set_actions(int d, std::vector<Matrix<F>> acts) {
        assert(static_cast<int>(acts.size()) == nvars);
        action[static_cast<std::size_t>(d - lo)] = std::move(acts);
    }

    void allocate_actions() {
        for (int d = lo; d < hi; ++d) {
            std::vector<Matrix<F>> acts;
            for (int v = 0; v < nvars; ++v)
                acts.push_back(Matrix<F>(f, dim(d + 1), dim(d)));
            set_actions(d, std::move(acts));
        }
    }

    // Commutativity of the variable actions: x_u x_v = x_v x_u.
    bool check_commute() const {
        for (int d = lo; d + 2 <= hi; ++d) {
            for (int u = 0; u < nvars; ++u)
                for (int v = u + 1; v < nvars; ++v)
                    if (!(act(u, d + 1) * act(v, d) == act(v, d + 1) * act(u, d)))
                        return false;
        }
        return true;
    }

    // Truncation M_{>= t} restricted to the window.
    Window truncate(int t) const {
        int nlo = std::max(lo, t);
        if (t < lo && !exact_below)
            throw std::invalid_argument("truncate: window does not cover the cutoff");
        Window w(f, nvars, nlo, hi, true);
        for (int d = nlo; d <= hi; ++d) w.set_dim(d, dim(d));
        for (int d = nlo; d < hi; ++d) {
            std::vector<Matrix<F>> acts;
            for (int v = 0; v < nvars; ++v) acts.push_back(act(v, d));
            w.set_actions(d, std::move(acts));
        }
        return w;
    }

    // Degree shift M(s): M(s)_d = M_{d+s}.
    Window shift(int s) const {
        Window w(f, nvars, lo - s, hi - s, exact_below);
        w.dims = dims;
        w.action = action;
        return w;
    }

    Window restricted(int nlo, int nhi) const {
        assert(nlo >= lo || exact_below);
        assert(nhi <= hi);
        Window w(f, nvars, nlo, nhi, exact_below || nlo > lo);
        for (int d = nlo; d <= nhi; ++d) w.set_dim(d, covers(d) ? dim(d) : 0);
        for (int d = nlo; d < nhi; ++d) {
            std::vector<Matrix<F>> acts;
            for (int v = 0; v < nvars; ++v) {
                if (d >= lo)
                    acts.push_back(act(v, d));
                else
                    acts.push_back(Matrix<F>(f, w.dim(d + 1), 0));
            }
            w.set_actions(d, std::move(acts));
        }
        return w;
    }
};

template <class F>
Window<F> direct_sum(const Window<F>& a, const Window<F>& b) {
    assert(a.nvars == b.nvars);
    int hi = std::min(a.hi, b.hi);
    bool eb = a.exact_below && b.exact_below;
    int lo;
    if (eb)
        lo = std::min(a.lo, b.lo);
    else if (a.exact_below)
        lo = b.lo;
    else if (b.exact_below)
        lo = a.lo;
    else
        lo = std::max(a.lo, b.lo);
    Window<F> w(a.f, a.nvars, lo, hi, eb);
    auto dim_of = [&](const Window<F>& m, int d) { return m.covers(d) ? m.dim(d) : 0; };
    for (int d = lo; d <= hi; ++d) w.set_dim(d, dim_of(a, d) + dim_of(b, d));
    for (int d = lo; d < hi; ++d) {
        std::vector<Matrix<F>> acts;
        for (int v = 0; v < a.nvars; ++v) {
            Matrix<F> m(w.f, w.dim(d + 1), w.dim(d));
            int da = dim_of(a, d), dA = dim_of(a, d + 1);
            if (da > 0 && dA > 0) {
                const Matrix<F>& xa = a.act(v, d);
                for (int i = 0; i < dA; ++i)
                    for (int j = 0; j < da; ++j) m.at(i, j) = xa.at(i, j);
            }
            int db = dim_of(b, d), dB = dim_of(b, d + 1);
            if (db > 0 && dB > 0) {
                const Matrix<F>& xb = b.act(v, d);
                for (int i = 0; i < dB; ++i)
                    for (int j = 0; j < db; ++j) m.at(dA + i, da + j) = xb.at(i, j);
            }
            acts.push_back(std::move(m));
        }
        w.set_actions(d, std::move(acts));
    }
    return w;
}

// Window of the free module R(-g) = R shifted so its generator sits in
// degree g, over the range [lo, hi].
template <class F>
Window<F> free_window(F f, int nvars, int gen_degree, int lo, int hi) {
    MonomialTable tab(nvars);
    Window<F> w(std::move(f), nvars, std::max(lo, gen_degree), hi, true);
    for (int d = w.lo; d <= hi; ++d)
        w.set_dim(d, static_cast<int>(tab.basis(d - gen_degree).size()));
    for (int d = w.lo; d < hi; ++d) {
        std::vector<Matrix<F>> acts;
        for (int v = 0; v < nvars; ++v) {
            const auto& mi = tab.mult_index(v, d - gen_degree);
            Matrix<F> m(w.f, w.dim(d + 1), w.dim(d));
            for (int j = 0; j < w.dim(d); ++j)
                m.at(mi[static_cast<std::size_t>(j)], j) = w.f.one();
            acts.push_back(std::move(m));
        }
        w.set_actions(d, std::move(acts));
    }
    return w;
}

// Window of a direct sum of twisted free modules, generators in the given
// degrees (with multiplicity).
template <class F>
Window<F> free_sum_window(F f, int nvars, const std::vector<int>& gen_degrees,
                          int lo, int hi) {
    Window<F> w(f, nvars, lo, hi, true);
    bool first = true;
    for (int g : gen_degrees) {
        Window<F> one = free_window(f, nvars, g, lo, hi);
        w = first ? one.restricted(std::max(lo, one.lo), hi) : direct_sum(w, one);
        first = false;
    }
    if (first) {
        // zero module
        for (int d = lo; d <= hi; ++d) w.set_dim(d, 0);
        w.allocate_actions();
    }
    // Normalize so callers can query from lo.
    if (w.lo > lo) {
        Window<F> out(f, nvars, lo, hi, true);
        for (int d = lo; d <= hi; ++d) out.set_dim(d, w.covers(d) ? w.dim(d) : 0);
        for (int d = lo; d < hi; ++d) {
            std::vector<Matrix<F>> acts;
            for (int v = 0; v < nvars; ++v) {
                if (d >= w.lo)
                    acts.push_back(w.act(v, d));
                else
                    acts.push_back(Matrix<F>(f, out.dim(d + 1), out.dim(d)));
            }
            out.set_actions(d, std::move(acts));
        }
        return out;
    }
    return w;
}

// Reduce a rational window to a prime field (fails when a denominator is
// divisible by p).
inline std::optional<Window<GFp>> window_mod_p(const Window<QQ>& w, const GFp& fp) {
    Window<GFp> out(fp, w.nvars, w.lo, w.hi, w.exact_below);
    out.dims = w.dims;
    for (int d = w.lo; d < w.hi; ++d) {
        std::vector<Matrix<GFp>> acts;
        for (int v = 0; v < w.nvars; ++v) {
            const Matrix<QQ>& src = w.act(v, d);
            Matrix<GFp> m(fp, src.rows(), src.cols());
            for (int i = 0; i < src.rows(); ++i)
                for (int j = 0; j < src.cols(); ++j) {
                    auto r = reduce_mod(src.at(i, j), fp);
                    if (!r) return std::nullopt;
                    m.at(i, j) = *r;
                }
            acts.push_back(std::move(m));
        }
        out.set_actions(d, std::move(acts));
    }
    return out;
}

}  // namespace crm
