#pragma once

#include <string>

#include "crm/errors.hpp"
#include "crm/presentation.hpp"
#include "crm/rankcheck.hpp"
#include "crm/reduction.hpp"

namespace crm {

// ---------------------------------------------------------------------------
// Westwick family: (kn+1) x (kn+n-1) pencils of constant rank kn.
// Entry rule (1-indexed): with v = j - i + 1 in [0, n], the entry is
// c * x_v, where c = a - v when j = a(k+1) for integral a, else c = 1.
// This is the reading validated by exhaustive constant-rank scans.
// ---------------------------------------------------------------------------
inline LinearPencil<QQ> westwick_pencil(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("westwick: need n,k >= 1");
    QQ f;
    LinearPencil<QQ> p(f, n + 1, k * n + 1, k * n + n - 1);
    for (int i = 1; i <= p.rows; ++i)
        for (int j = 1; j <= p.cols; ++j) {
            int v = j - i + 1;
            if (v < 0 || v > n) continue;
            long long c = 1;
            if (j % (k + 1) == 0) c = j / (k + 1) - v;
            p.coeff[static_cast<std::size_t>(v)].at(i - 1, j - 1) = f.from_int(c);
        }
    return p;
}

// The explicit 5x5 pencil printed alongside the H_{2,2} discussion (built in
// by entry; below-diagonal zeros implicit).
inline LinearPencil<QQ> westwick_2_2_reference() {
    QQ f;
    LinearPencil<QQ> p(f, 3, 5, 5);
    // entries[row][col] = (variable, coefficient); coefficient 0 = empty
    const int var[5][5] = {{1, 2, -1, -1, -1},
                           {0, 1, 2, -1, -1},
                           {-1, 0, -1, 2, -1},
                           {-1, -1, 0, 1, 2},
                           {-1, -1, -1, 0, 1}};
    const long long cf[5][5] = {{-1, -1, 0, 0, 0},
                                {1, -1, -1, 0, 0},
                                {0, 1, 0, -1, 0},
                                {0, 0, 1, 1, -1},
                                {0, 0, 0, 1, 1}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (var[i][j] >= 0 && cf[i][j] != 0)
                p.coeff[static_cast<std::size_t>(var[i][j])].at(i, j) = f.from_int(cf[i][j]);
    return p;
}

// Pencils agree "up to sign normalization": same variable support and equal
// absolute coefficients entrywise.
inline bool pencil_equal_up_to_sign(const LinearPencil<QQ>& a, const LinearPencil<QQ>& b) {
    if (a.nvars != b.nvars || a.rows != b.rows || a.cols != b.cols) return false;
    for (int v = 0; v < a.nvars; ++v)
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j)
                if (abs(a.coeff[static_cast<std::size_t>(v)].at(i, j)) !=
                    abs(b.coeff[static_cast<std::size_t>(v)].at(i, j)))
                    return false;
    return true;
}

// ---------------------------------------------------------------------------
// Generalized Steiner modules: coker of a random map with degree-(m+1)
// entries from O(-m-1)^s to O^{s+r}.
// ---------------------------------------------------------------------------
template <class F>
typename F::Element eval_poly(const std::vector<typename F::Element>& coeffs, int degree,
                              const std::vector<typename F::Element>& point,
                              const MonomialTable& tab, const F& f) {
    const MonomialIndex& b = tab.basis(degree);
    typename F::Element acc = f.zero();
    for (int t = 0; t < b.size(); ++t) {
        if (coeffs.empty() || f.is_zero(coeffs[static_cast<std::size_t>(t)])) continue;
        typename F::Element mon = f.one();
        const Exponents& e = b.at(t);
        for (std::size_t v = 0; v < e.size(); ++v)
            for (int rep = 0; rep < e[v]; ++rep) mon = f.mul(mon, point[v]);
        acc = f.add(acc, f.mul(coeffs[static_cast<std::size_t>(t)], mon));
    }
    return acc;
}

struct SteinerModule {
    GradedFreeMap<QQ> presentation;
    Window<QQ> window;
};

inline SteinerModule steiner_module(int n, int s, int r, int m, std::uint64_t seed,
                                    int lo, int hi) {
    if (r < n || s < 1) throw std::invalid_argument("steiner: need r >= n, s >= 1");
    QQ f;
    MonomialTable tab(n + 1);
    Rng rng(seed);
    int mon = tab.basis(m + 1).size();
    for (int attempt = 0; attempt < 64; ++attempt) {
        GradedFreeMap<QQ> phi(f, n + 1, std::vector<int>(static_cast<std::size_t>(s + r), 0),
                              std::vector<int>(static_cast<std::size_t>(s), m + 1));
        for (int i = 0; i < s + r; ++i)
            for (int j = 0; j < s; ++j) {
                std::vector<mpq_class> c;
                bool nonzero = false;
                for (int t = 0; t < mon; ++t) {
                    auto x = f.from_int(rng.small_coeff());
                    if (!f.is_zero(x)) nonzero = true;
                    c.push_back(x);
                }
                if (nonzero)
                    phi.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        std::move(c);
            }
        // Sanity: phi must have full rank s at sample points (degeneracy has
        // expected codimension r+1 > n).
        bool degenerate = false;
        Rng prng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (int pt = 0; pt < 20 && !degenerate; ++pt) {
            std::vector<mpq_class> point;
            for (int v = 0; v <= n; ++v) point.push_back(f.from_int(prng.int_range(-9, 9)));
            bool allzero = true;
            for (auto& x : point)
                if (x != 0) allzero = false;
            if (allzero) point[0] = 1;
            Matrix<QQ> ev(f, s + r, s);
            for (int i = 0; i < s + r; ++i)
                for (int j = 0; j < s; ++j)
                    ev.at(i, j) = eval_poly(
                        phi.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        m + 1, point, tab, f);
            if (mat_rank(ev) != s) degenerate = true;
        }
        if (degenerate) continue;
        SteinerModule sm;
        sm.window = window_from_presentation(phi, lo, hi);
        sm.presentation = std::move(phi);
        return sm;
    }
    throw DegenerateSample("steiner: no nondegenerate map found");
}

// ---------------------------------------------------------------------------
// Linear monads A -> B -> C of free modules and their cohomology windows.
// ---------------------------------------------------------------------------
template <class F>
struct MonadSpec {
    F f;
    int nvars = 0;
    GradedFreeMap<F> fmap;  // A -> B
    GradedFreeMap<F> gmap;  // B -> C
};

// The special charge-2 instanton monad on P^3 with the built-in maps.
inline MonadSpec<QQ> instanton_2_2_special() {
    QQ f;
    MonadSpec<QQ> m;
    m.f = f;
    m.nvars = 4;
    std::vector<int> mid(6, 0);
    m.fmap = GradedFreeMap<QQ>(f, 4, mid, std::vector<int>{1, 1});
    m.gmap = GradedFreeMap<QQ>(f, 4, std::vector<int>{-1, -1}, mid);
    auto lin = [&](int v, long long c) {
        std::vector<mpq_class> p(4, mpq_class(0));
        p[static_cast<std::size_t>(v)] = mpq_class(static_cast<long>(c));
        return p;
    };
    // f columns: entries are linear forms in x_0..x_3
    const int fv[6][2] = {{-1, 1}, {1, 0}, {0, -1}, {-1, 3}, {3, 2}, {2, -1}};
    const long long fc[6][2] = {{0, 1}, {1, 1}, {1, 0}, {0, -1}, {-1, -1}, {-1, 0}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 2; ++j)
            if (fv[i][j] >= 0) m.fmap.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lin(fv[i][j], fc[i][j]);
    const int gv[2][6] = {{2, 3, -1, 0, 1, -1}, {-1, 2, 3, -1, 0, 1}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 6; ++j)
            if (gv[i][j] >= 0) m.gmap.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lin(gv[i][j], 1);
    return m;
}

// Random monad O(-1)^k -> O^{2k+r} -> O(1)^k on P^3: g is drawn at random
// and f is sampled from the solution space of g o f = 0, then the monad
// conditions are verified.
inline MonadSpec<QQ> random_instanton_monad(int k, int r, std::uint64_t seed) {
    QQ f;
    int nv = 4;
    int mid = 2 * k + r;
    MonomialTable tab(nv);
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        MonadSpec<QQ> m;
        m.f = f;
        m.nvars = nv;
        m.gmap = GradedFreeMap<QQ>(f, nv, std::vector<int>(static_cast<std::size_t>(k), -1),
                                   std::vector<int>(static_cast<std::size_t>(mid), 0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < mid; ++j) {
                std::vector<mpq_class> p(static_cast<std::size_t>(nv), mpq_class(0));
                bool nonzero = false;
                for (int v = 0; v < nv; ++v) {
                    p[static_cast<std::size_t>(v)] = f.from_int(rng.small_coeff());
                    if (p[static_cast<std::size_t>(v)] != 0) nonzero = true;
                }
                if (nonzero) m.gmap.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(p);
            }
        // Unknown linear column u (mid*nv coefficients); conditions: each of
        // the k rows of g times u vanishes as a quadratic form.
        int quad = tab.basis(2).size();
        Matrix<QQ> sys(f, k * quad, mid * nv);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < mid; ++j) {
                const auto& gij = m.gmap.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (gij.empty()) continue;
                for (int vg = 0; vg < nv; ++vg) {
                    if (f.is_zero(gij[static_cast<std::size_t>(vg)])) continue;
                    for (int vu = 0; vu < nv; ++vu) {
                        Exponents e(static_cast<std::size_t>(nv), 0);
                        e[static_cast<std::size_t>(vg)] += 1;
                        e[static_cast<std::size_t>(vu)] += 1;
                        int row = i * quad + tab.basis(2).index_of(e);
                        auto& c = sys.at(row, j * nv + vu);
                        c = f.add(c, gij[static_cast<std::size_t>(vg)]);
                    }
                }
            }
        Matrix<QQ> ker = mat_kernel_basis(sys);
        if (ker.cols() < k) continue;
        m.fmap = GradedFreeMap<QQ>(f, nv, std::vector<int>(static_cast<std::size_t>(mid), 0),
                                   std::vector<int>(static_cast<std::size_t>(k), 1));
        for (int col = 0; col < k; ++col) {
            std::vector<mpq_class> u(static_cast<std::size_t>(mid * nv), mpq_class(0));
            for (int b = 0; b < ker.cols(); ++b) {
                auto c = f.from_int(rng.small_coeff());
                if (f.is_zero(c)) continue;
                auto kb = ker.column_vec(b);
                for (std::size_t t = 0; t < u.size(); ++t) u[t] = f.add(u[t], f.mul(c, kb[t]));
            }
            for (int j = 0; j < mid; ++j) {
                std::vector<mpq_class> p(static_cast<std::size_t>(nv), mpq_class(0));
                bool nonzero = false;
                for (int v = 0; v < nv; ++v) {
                    p[static_cast<std::size_t>(v)] = u[static_cast<std::size_t>(j * nv + v)];
                    if (p[static_cast<std::size_t>(v)] != 0) nonzero = true;
                }
                if (nonzero) m.fmap.entry[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)] = std::move(p);
            }
        }
        // Monad conditions on a short window.
        bool ok = true;
        for (int d = 0; d <= 3 && ok; ++d) {
            Matrix<QQ> fd = m.fmap.degree_matrix(d, tab);
            Matrix<QQ> gd = m.gmap.degree_matrix(d, tab);
            if (!(gd * fd).is_zero()) ok = false;
            if (mat_rank(fd) != fd.cols()) ok = false;
            // the right-hand map can only be surjective from degree 1 on
            if (d >= 1 && mat_rank(gd) != gd.rows()) ok = false;
        }
        if (ok) return m;
    }
    throw MonadConditionFailed("no valid random monad found");
}

inline MonadSpec<QQ> null_correlation_monad(std::uint64_t seed) {
    return random_instanton_monad(1, 2, seed);
}

// Degreewise ker(g)/im(f) with induced actions.
template <class F>
Window<F> monad_cohomology_module(const MonadSpec<F>& m, int lo, int hi) {
    MonomialTable tab(m.nvars);
    Window<F> mid = free_sum_window(m.f, m.nvars, m.gmap.source, lo, hi);
    std::map<int, Matrix<F>> in, out;
    for (int d = lo; d <= hi; ++d) {
        in[d] = m.fmap.degree_matrix(d, tab);
        out[d] = m.gmap.degree_matrix(d, tab);
        if (!(out[d] * in[d]).is_zero())
            throw MonadConditionFailed("g o f != 0");
        if (mat_rank(in[d]) != in[d].cols() || mat_rank(out[d]) != out[d].rows())
            throw MonadConditionFailed("monad not exact at the ends");
    }
    Window<F> w = subquotient_window(mid, in, out, lo, hi);
    bool below_zero = true;
    for (int g : m.gmap.source)
        if (g < lo) below_zero = false;
    w.exact_below = below_zero;  // middle term (hence homology) vanishes below lo
    return w;
}

// ---------------------------------------------------------------------------
// Projection of pencils by constant full-rank matrices.
// ---------------------------------------------------------------------------
template <class F>
LinearPencil<F> project_pencil(const LinearPencil<F>& a, int alpha, int beta, Rng& rng) {
    if (alpha > a.rows || beta > a.cols)
        throw std::invalid_argument("projection cannot enlarge the pencil");
    const F& f = a.f;
    auto random_full_rank = [&](int r, int c) {
        for (;;) {
            Matrix<F> m(f, r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m.at(i, j) = f.from_int(rng.small_coeff());
            if (mat_rank(m) == std::min(r, c)) return m;
        }
    };
    Matrix<F> left = alpha == a.rows ? Matrix<F>::identity(f, alpha)
                                     : random_full_rank(alpha, a.rows);
    Matrix<F> right = beta == a.cols ? Matrix<F>::identity(f, beta)
                                     : random_full_rank(a.cols, beta);
    LinearPencil<F> out(f, a.nvars, alpha, beta);
    for (int v = 0; v < a.nvars; ++v)
        out.coeff[static_cast<std::size_t>(v)] =
            left * a.coeff[static_cast<std::size_t>(v)] * right;
    return out;
}

// ---------------------------------------------------------------------------
// Line-bundle pipeline on P^2: reduce R_{>= s} by the catalog module with
// degree sequence (s, s+1, s+2, 2s+1); yields a (2s+1)x(2s+1) pencil of
// constant rank 2s. For s = 1 the catalog side is empty and the pencil is
// the presentation of R_{>= 1} itself.
// ---------------------------------------------------------------------------
inline LinearPencil<QQ> line_bundle_pipeline(int s, std::uint64_t seed = 1) {
    if (s < 1) throw std::invalid_argument("line bundle pipeline needs s >= 1");
    QQ f;
    int nv = 3;
    int hi = 2 * s + 4;
    Window<QQ> e = free_window(f, nv, 0, s, hi);  // R_{>= s} (truncation of R)
    if (s == 1) {
        auto pres = minimal_presentation(e);
        auto p = pres.linear_part(f, nv);
        if (!p) throw NoSurjectionFound("line bundle pipeline: no linear part");
        return *p;
    }
    ArtinianCandidate cand = make_candidate(s - 1, 1, s, nv);
    Window<QQ> g = candidate_window(cand, f, nv, s, hi);
    ReductionResult<QQ> r = sample_reduction(e, g, 40, seed);
    if (!r.pencil) throw NoSurjectionFound("line bundle pipeline: no pencil found");
    return *r.pencil;
}

}  // namespace crm
