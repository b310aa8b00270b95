#pragma once

#include <map>
#include <optional>
#include <vector>

#include "crm/errors.hpp"
#include "crm/pencil.hpp"
#include "crm/window.hpp"

namespace crm {

// ---------------------------------------------------------------------------
// Maps between twisted free modules with homogeneous polynomial entries.
// ---------------------------------------------------------------------------

// Block offsets of the degree-d component of a free module with the given
// generator degrees (block layout matches free_sum_window).
inline std::vector<int> free_block_offsets(const std::vector<int>& gens, int d,
                                           const MonomialTable& tab, int* total = nullptr) {
    std::vector<int> off;
    int acc = 0;
    for (int g : gens) {
        off.push_back(acc);
        if (d >= g) acc += tab.basis(d - g).size();
    }
    if (total) *total = acc;
    return off;
}

template <class F>
struct GradedFreeMap {
    using Element = typename F::Element;

    F f;
    int nvars = 0;
    std::vector<int> target;  // generator degrees of the target free module
    std::vector<int> source;  // generator degrees of the source
    // entry[i][j]: coefficients over the monomial basis of degree
    // source[j] - target[i]; empty vector means the zero entry.
    std::vector<std::vector<std::vector<Element>>> entry;

    GradedFreeMap() = default;
    GradedFreeMap(F field, int nv, std::vector<int> tgt, std::vector<int> src)
        : f(std::move(field)), nvars(nv), target(std::move(tgt)), source(std::move(src)) {
        entry.assign(target.size(), std::vector<std::vector<Element>>(source.size()));
    }

    GradedFreeMap transpose() const {
        GradedFreeMap t(f, nvars, source, target);
        for (std::size_t i = 0; i < target.size(); ++i)
            for (std::size_t j = 0; j < source.size(); ++j) t.entry[j][i] = entry[i][j];
        return t;
    }

    // Degree-d component as a matrix between the monomial bases of the two
    // free modules.
    Matrix<F> degree_matrix(int d, const MonomialTable& tab) const {
        int trows = 0, tcols = 0;
        std::vector<int> roff = free_block_offsets(target, d, tab, &trows);
        std::vector<int> coff = free_block_offsets(source, d, tab, &tcols);
        Matrix<F> m(f, trows, tcols);
        for (std::size_t i = 0; i < target.size(); ++i) {
            if (d < target[i]) continue;
            const MonomialIndex& rb = tab.basis(d - target[i]);
            for (std::size_t j = 0; j < source.size(); ++j) {
                if (d < source[j] || entry[i][j].empty()) continue;
                int pd = source[j] - target[i];
                if (pd < 0) continue;
                const MonomialIndex& pb = tab.basis(pd);
                const MonomialIndex& cb = tab.basis(d - source[j]);
                for (int mu = 0; mu < cb.size(); ++mu) {
                    for (int nu = 0; nu < pb.size(); ++nu) {
                        const Element& c = entry[i][j][static_cast<std::size_t>(nu)];
                        if (f.is_zero(c)) continue;
                        Exponents e = cb.at(mu);
                        const Exponents& pe = pb.at(nu);
                        for (int v = 0; v < nvars; ++v) e[static_cast<std::size_t>(v)] += pe[static_cast<std::size_t>(v)];
                        int r = roff[i] + rb.index_of(e);
                        auto& cell = m.at(r, coff[j] + mu);
                        cell = f.add(cell, c);
                    }
                }
            }
        }
        return m;
    }
};

// ---------------------------------------------------------------------------
// Cokernel window of a free presentation.
// ---------------------------------------------------------------------------
template <class F>
Window<F> window_from_presentation(const GradedFreeMap<F>& pres, int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("empty window");
    for (int s : pres.source)
        if (s > hi)
            throw DegreeWindowTooSmall("relation degree exceeds window top");
    MonomialTable tab(pres.nvars);
    Window<F> cover = free_sum_window(pres.f, pres.nvars, pres.target, lo, hi);
    std::vector<QuotientSpace<F>> quot;
    for (int d = lo; d <= hi; ++d)
        quot.emplace_back(pres.degree_matrix(d, tab));
    Window<F> w(pres.f, pres.nvars, lo, hi, true);
    for (int d = lo; d <= hi; ++d)
        w.set_dim(d, quot[static_cast<std::size_t>(d - lo)].dim());
    for (int d = lo; d < hi; ++d) {
        const QuotientSpace<F>& qd = quot[static_cast<std::size_t>(d - lo)];
        const QuotientSpace<F>& qd1 = quot[static_cast<std::size_t>(d + 1 - lo)];
        std::vector<Matrix<F>> acts;
        for (int v = 0; v < pres.nvars; ++v) {
            Matrix<F> m(pres.f, w.dim(d + 1), w.dim(d));
            for (int c = 0; c < w.dim(d); ++c) {
                int coord = qd.complement()[static_cast<std::size_t>(c)];
                auto img = cover.act(v, d).column_vec(coord);
                m.set_column(c, qd1.project(std::move(img)));
            }
            acts.push_back(std::move(m));
        }
        w.set_actions(d, std::move(acts));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Minimal presentation of a window, degree by degree.
// ---------------------------------------------------------------------------
template <class F>
struct MinimalPresentation {
    std::vector<int> gen_degrees;               // sorted ascending
    std::map<int, Matrix<F>> gen_vectors;       // per degree: generator columns in M_d
    std::map<int, Matrix<F>> ev;                // F0_d -> M_d
    Window<F> free_cover;                       // window of F0
    std::vector<int> rel_degrees;
    std::map<int, Matrix<F>> relation_columns;  // minimal relation columns in F0_d
    GradedFreeMap<F> relation_map;              // F1 -> F0
    Window<F> kernel;                           // ker(ev) with induced actions
    std::map<int, Matrix<F>> kernel_bases;      // B_d: kernel coords -> F0_d

    bool is_linear() const {
        if (gen_degrees.empty()) return true;
        int m = gen_degrees.front();
        if (gen_degrees.back() != m) return false;
        for (int r : rel_degrees)
            if (r != m + 1) return false;
        return true;
    }

    // Relations of degree m+1 as a pencil, defined when all generators sit
    // in one degree m.
    std::optional<LinearPencil<F>> linear_part(const F& f, int nvars) const {
        if (gen_degrees.empty()) return std::nullopt;
        int m = gen_degrees.front();
        if (gen_degrees.back() != m) return std::nullopt;
        int a = static_cast<int>(gen_degrees.size());
        auto it = relation_columns.find(m + 1);
        int b = it == relation_columns.end() ? 0 : it->second.cols();
        LinearPencil<F> p(f, nvars, a, b);
        for (int col = 0; col < b; ++col)
            for (int g = 0; g < a; ++g)
                for (int v = 0; v < nvars; ++v)
                    p.coeff[static_cast<std::size_t>(v)].at(g, col) =
                        it->second.at(g * nvars + v, col);
        return p;
    }
};

template <class F>
MinimalPresentation<F> minimal_presentation(const Window<F>& w) {
    const F& f = w.f;
    if (w.hi < w.lo + 1) throw WindowTooShort("presentation needs two degrees");
    MonomialTable tab(w.nvars);
    MinimalPresentation<F> out;

    // Generators: complement of R_1 * M_{d-1} inside M_d.
    for (int d = w.lo; d <= w.hi; ++d) {
        SpanTracker<F> span(f, w.dim(d));
        if (d > w.lo)
            for (int v = 0; v < w.nvars; ++v) span.add_columns(w.act(v, d - 1));
        std::vector<std::vector<typename F::Element>> here;
        for (int i = 0; i < w.dim(d); ++i) {
            std::vector<typename F::Element> e(static_cast<std::size_t>(w.dim(d)), f.zero());
            e[static_cast<std::size_t>(i)] = f.one();
            if (span.add(e)) here.push_back(std::move(e));
        }
        if (!here.empty()) {
            if (d == w.hi)
                throw NotFinitelyGeneratedInWindow("generator degrees reach window top");
            Matrix<F> g(f, w.dim(d), static_cast<int>(here.size()));
            for (std::size_t c = 0; c < here.size(); ++c) g.set_column(static_cast<int>(c), here[c]);
            out.gen_vectors[d] = std::move(g);
            for (std::size_t c = 0; c < here.size(); ++c) out.gen_degrees.push_back(d);
        }
    }

    out.free_cover = free_sum_window(f, w.nvars, out.gen_degrees, w.lo, w.hi);

    // Evaluation maps F0_d -> M_d, propagated via the first-variable
    // factorization of each monomial.
    // imgs[g][d - dg] has one column per monomial of degree d - dg.
    std::vector<std::vector<Matrix<F>>> imgs;
    {
        std::map<int, int> used;  // per degree, running column index in gen_vectors
        for (int g : out.gen_degrees) {
            int col = used[g]++;
            std::vector<Matrix<F>> seq;
            Matrix<F> first(f, w.dim(g), 1);
            first.set_column(0, out.gen_vectors[g].column_vec(col));
            seq.push_back(std::move(first));
            for (int d = g; d < w.hi; ++d) {
                const MonomialIndex& nb = tab.basis(d + 1 - g);
                const MonomialIndex& cb = tab.basis(d - g);
                Matrix<F> next(f, w.dim(d + 1), nb.size());
                for (int nu = 0; nu < nb.size(); ++nu) {
                    Exponents e = nb.at(nu);
                    int v = 0;
                    while (e[static_cast<std::size_t>(v)] == 0) ++v;
                    e[static_cast<std::size_t>(v)] -= 1;
                    int mu = cb.index_of(e);
                    next.set_column(nu, mat_apply(w.act(v, d), seq.back().column_vec(mu)));
                }
                seq.push_back(std::move(next));
            }
            imgs.push_back(std::move(seq));
        }
    }
    for (int d = w.lo; d <= w.hi; ++d) {
        Matrix<F> e(f, w.dim(d), 0);
        for (std::size_t g = 0; g < out.gen_degrees.size(); ++g) {
            int dg = out.gen_degrees[g];
            if (d < dg) {
                // zero block of width 0 (no monomials yet)
                continue;
            }
            e = Matrix<F>::hstack(e, imgs[g][static_cast<std::size_t>(d - dg)]);
        }
        out.ev[d] = std::move(e);
    }

    // Kernel window and minimal relations.
    out.kernel = Window<F>(f, w.nvars, w.lo, w.hi, true);
    for (int d = w.lo; d <= w.hi; ++d) {
        out.kernel_bases[d] = mat_kernel_basis(out.ev[d]);
        out.kernel.set_dim(d, out.kernel_bases[d].cols());
    }
    for (int d = w.lo; d < w.hi; ++d) {
        std::vector<Matrix<F>> acts;
        for (int v = 0; v < w.nvars; ++v) {
            Matrix<F> img = out.free_cover.act(v, d) * out.kernel_bases[d];
            auto y = mat_solve(out.kernel_bases[d + 1], img);
            if (!y) throw std::logic_error("kernel not closed under action");
            acts.push_back(std::move(*y));
        }
        out.kernel.set_actions(d, std::move(acts));
    }
    for (int d = w.lo + 1; d <= w.hi; ++d) {
        int n0 = out.ev[d].cols();
        SpanTracker<F> span(f, n0);
        for (int v = 0; v < w.nvars; ++v)
            span.add_columns(out.free_cover.act(v, d - 1) * out.kernel_bases[d - 1]);
        std::vector<std::vector<typename F::Element>> cols;
        for (int c = 0; c < out.kernel_bases[d].cols(); ++c) {
            auto vec = out.kernel_bases[d].column_vec(c);
            if (span.add(vec)) cols.push_back(std::move(vec));
        }
        if (!cols.empty()) {
            Matrix<F> r(f, n0, static_cast<int>(cols.size()));
            for (std::size_t c = 0; c < cols.size(); ++c) r.set_column(static_cast<int>(c), cols[c]);
            out.relation_columns[d] = std::move(r);
            for (std::size_t c = 0; c < cols.size(); ++c) out.rel_degrees.push_back(d);
        }
    }

    // Polynomial relation matrix F1 -> F0.
    out.relation_map = GradedFreeMap<F>(f, w.nvars, out.gen_degrees, out.rel_degrees);
    {
        int col = 0;
        for (auto& [d, rc] : out.relation_columns) {
            std::vector<int> off = free_block_offsets(out.gen_degrees, d, tab);
            for (int c = 0; c < rc.cols(); ++c, ++col) {
                for (std::size_t g = 0; g < out.gen_degrees.size(); ++g) {
                    if (d < out.gen_degrees[g]) continue;
                    int len = tab.basis(d - out.gen_degrees[g]).size();
                    std::vector<typename F::Element> coeffs(
                        static_cast<std::size_t>(len), f.zero());
                    bool nonzero = false;
                    for (int t = 0; t < len; ++t) {
                        coeffs[static_cast<std::size_t>(t)] = rc.at(off[g] + t, c);
                        if (!f.is_zero(coeffs[static_cast<std::size_t>(t)])) nonzero = true;
                    }
                    if (nonzero) out.relation_map.entry[g][static_cast<std::size_t>(col)] = std::move(coeffs);
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bounded minimal free resolution by iterated presentations of kernels.
// ---------------------------------------------------------------------------
template <class F>
struct ResolutionChain {
    F f;
    int nvars = 0;
    int lo = 0, hi = 0;                          // certified degree range
    std::vector<std::vector<int>> twists;        // twists[i]: generator degrees of F_i
    std::vector<std::map<int, Matrix<F>>> maps;  // maps[0] = ev into M; maps[i>=1]: (F_i)_d -> (F_{i-1})_d
    bool complete = false;                       // last kernel vanished in the window

    BettiTable betti() const {
        BettiTable b;
        for (std::size_t i = 0; i < twists.size(); ++i) {
            std::map<int, int> cnt;
            for (int d : twists[i]) cnt[d]++;
            for (auto& [d, c] : cnt) b.set(static_cast<int>(i), d, c);
        }
        return b;
    }

    int steps() const { return static_cast<int>(twists.size()); }

    // Polynomial matrix of the chain map F_i -> F_{i-1} (i >= 1), read off
    // from the degreewise matrices at each source generator degree.
    GradedFreeMap<F> poly_map(int i, const MonomialTable& tab) const {
        const auto& src = twists[static_cast<std::size_t>(i)];
        const auto& tgt = twists[static_cast<std::size_t>(i - 1)];
        GradedFreeMap<F> gm(f, nvars, tgt, src);
        for (std::size_t j = 0; j < src.size(); ++j) {
            int a = src[j];
            std::vector<int> soff = free_block_offsets(src, a, tab);
            std::vector<int> toff = free_block_offsets(tgt, a, tab);
            const Matrix<F>& da = maps[static_cast<std::size_t>(i)].at(a);
            int col = soff[j];  // the generator's own coordinate (monomial 1)
            for (std::size_t g = 0; g < tgt.size(); ++g) {
                if (a < tgt[g]) continue;
                int len = tab.basis(a - tgt[g]).size();
                std::vector<typename F::Element> coeffs(static_cast<std::size_t>(len), f.zero());
                bool nonzero = false;
                for (int t = 0; t < len; ++t) {
                    coeffs[static_cast<std::size_t>(t)] = da.at(toff[g] + t, col);
                    if (!f.is_zero(coeffs[static_cast<std::size_t>(t)])) nonzero = true;
                }
                if (nonzero) gm.entry[g][j] = std::move(coeffs);
            }
        }
        return gm;
    }
};

template <class F>
ResolutionChain<F> free_resolution(const Window<F>& w, int steps) {
    ResolutionChain<F> chain;
    chain.f = w.f;
    chain.nvars = w.nvars;
    chain.lo = w.lo;
    chain.hi = w.hi;
    Window<F> cur = w;
    std::map<int, Matrix<F>> embed;  // kernel coords -> previous F coords
    for (int i = 0; i < steps; ++i) {
        bool zero = true;
        for (int d = cur.lo; d <= cur.hi; ++d)
            if (cur.dim(d) != 0) { zero = false; break; }
        if (zero) {
            chain.complete = true;
            break;
        }
        MinimalPresentation<F> pres = minimal_presentation(cur);
        chain.twists.push_back(pres.gen_degrees);
        std::map<int, Matrix<F>> dmaps;
        for (auto& [d, e] : pres.ev)
            dmaps[d] = (i == 0) ? e : embed.at(d) * e;
        chain.maps.push_back(std::move(dmaps));
        embed = pres.kernel_bases;
        cur = pres.kernel;
    }
    if (!chain.complete) {
        bool zero = true;
        for (int d = cur.lo; d <= cur.hi; ++d)
            if (cur.dim(d) != 0) { zero = false; break; }
        chain.complete = zero;
    }
    return chain;
}

// ---------------------------------------------------------------------------
// Subquotient window: homology ker(out)/im(in) inside an ambient window.
// ---------------------------------------------------------------------------
template <class F>
Window<F> subquotient_window(const Window<F>& ambient,
                             const std::map<int, Matrix<F>>& in,
                             const std::map<int, Matrix<F>>& out,
                             int lo, int hi) {
    const F& f = ambient.f;
    Window<F> w(f, ambient.nvars, lo, hi, false);
    std::map<int, Matrix<F>> hbasis;   // homology representatives in ambient coords
    std::map<int, Matrix<F>> inbasis;  // boundary columns
    for (int d = lo; d <= hi; ++d) {
        int n = ambient.dim(d);
        Matrix<F> b = in.count(d) ? in.at(d) : Matrix<F>(f, n, 0);
        Matrix<F> z = out.count(d) ? mat_kernel_basis(out.at(d))
                                   : Matrix<F>::identity(f, n);
        SpanTracker<F> span(f, n);
        span.add_columns(b);
        std::vector<std::vector<typename F::Element>> cols;
        for (int c = 0; c < z.cols(); ++c) {
            auto vec = z.column_vec(c);
            if (span.add(vec)) cols.push_back(std::move(vec));
        }
        Matrix<F> h(f, n, static_cast<int>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) h.set_column(static_cast<int>(c), cols[c]);
        w.set_dim(d, h.cols());
        hbasis[d] = std::move(h);
        inbasis[d] = std::move(b);
    }
    for (int d = lo; d < hi; ++d) {
        std::vector<Matrix<F>> acts;
        for (int v = 0; v < ambient.nvars; ++v) {
            Matrix<F> img = ambient.act(v, d) * hbasis[d];
            Matrix<F> target = Matrix<F>::hstack(inbasis[d + 1], hbasis[d + 1]);
            auto sol = mat_solve(target, img);
            if (!sol) throw std::logic_error("homology not closed under action");
            Matrix<F> m(f, w.dim(d + 1), w.dim(d));
            int shift = inbasis[d + 1].cols();
            for (int r = 0; r < w.dim(d + 1); ++r)
                for (int c = 0; c < w.dim(d); ++c) m.at(r, c) = sol->at(shift + r, c);
            acts.push_back(std::move(m));
        }
        w.set_actions(d, std::move(acts));
    }
    return w;
}

}  // namespace crm
