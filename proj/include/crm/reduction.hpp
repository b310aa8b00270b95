#pragma once

#include "crm/artinian.hpp"
#include "crm/betti.hpp"
#include "crm/hom.hpp"
#include "crm/presentation.hpp"

namespace crm {

struct ReductionDiagnostics {
    bool mu_surjective = false;
    bool mu1_surjective = false;
    bool mu2_surjective = false;
    bool coker_nu2_artinian = false;
    bool betti_subtraction_ok = false;
    // dim coker(linear part)_d - dim F_d for the inspected degrees >= m+2
    std::vector<long long> coker_discrepancy;
};

template <class F>
struct ReductionResult {
    Window<F> kernel;  // F = ker(mu) with restricted actions
    MinimalPresentation<F> presentation;
    std::optional<LinearPencil<F>> pencil;
    ReductionDiagnostics diagnostics;
    std::vector<mpz_class> strand_e, strand_g, strand_f;
};

// Surjectivity of the induced map on the i-th Koszul homology in the linear
// strand degree m+i: image of the middle-term map plus boundaries must span
// the cycles of G.
template <class F>
bool induced_strand_surjective(const Window<F>& e, const Window<F>& g,
                               const std::map<int, Matrix<F>>& mu, int m, int i) {
    const F& f = e.f;
    // Middle terms at degree m: M_m (x) Wedge^i V.
    Matrix<F> out_e = koszul_map(e, m, i);
    Matrix<F> out_g = koszul_map(g, m, i);
    Matrix<F> in_g = koszul_map(g, m - 1, i + 1);
    Matrix<F> ze = mat_kernel_basis(out_e);
    Matrix<F> zg = mat_kernel_basis(out_g);
    // f_m (x) I on the middle term.
    int blocks = static_cast<int>(index_subsets(e.nvars, i).size());
    const Matrix<F>& fm = mu.at(m);
    Matrix<F> big(f, g.dim(m) * blocks, e.dim(m) * blocks);
    for (int b = 0; b < blocks; ++b)
        for (int r = 0; r < g.dim(m); ++r)
            for (int c = 0; c < e.dim(m); ++c)
                big.at(b * g.dim(m) + r, b * e.dim(m) + c) = fm.at(r, c);
    Matrix<F> mapped = big * ze;
    Matrix<F> ab = Matrix<F>::hstack(mapped, in_g);
    return mat_rank(ab) == mat_rank(Matrix<F>::hstack(ab, zg));
}

// F = ker(mu) degreewise, its minimal presentation, linear part and the
// diagnostics used by the search tree.
template <class F>
ReductionResult<F> reduce(const Window<F>& e, const Window<F>& g,
                          const std::map<int, Matrix<F>>& mu) {
    const F& f = e.f;
    if (e.nvars != g.nvars || e.lo != g.lo || e.hi != g.hi)
        throw WindowMismatch("reduce expects aligned windows");
    int lo = e.lo, hi = e.hi;
    int m = lo;

    ReductionResult<F> out;
    out.diagnostics.mu_surjective = true;
    for (int d = lo; d <= hi; ++d) {
        const Matrix<F>& md = mu.at(d);
        if (mat_rank(md) != g.dim(d)) out.diagnostics.mu_surjective = false;
    }
    if (!out.diagnostics.mu_surjective)
        throw MuNotSurjective("mu is not degreewise surjective on the window");

    // Kernel window.
    std::map<int, Matrix<F>> bases;
    Window<F> kw(f, e.nvars, lo, hi, e.exact_below);
    for (int d = lo; d <= hi; ++d) {
        bases[d] = mat_kernel_basis(mu.at(d));
        kw.set_dim(d, bases[d].cols());
    }
    for (int d = lo; d < hi; ++d) {
        std::vector<Matrix<F>> acts;
        for (int v = 0; v < e.nvars; ++v) {
            auto y = mat_solve(bases[d + 1], e.act(v, d) * bases[d]);
            if (!y) throw std::logic_error("kernel of mu not closed under action");
            acts.push_back(std::move(*y));
        }
        kw.set_actions(d, std::move(acts));
    }
    out.kernel = kw;

    out.diagnostics.mu1_surjective = induced_strand_surjective(e, g, mu, m, 1);
    out.diagnostics.mu2_surjective = induced_strand_surjective(e, g, mu, m, 2);

    out.presentation = minimal_presentation(kw);
    out.pencil = out.presentation.linear_part(f, e.nvars);

    int n = e.nvars - 1;
    for (int i = 0; i <= n; ++i) {
        auto be = koszul_betti(e, i, m + i);
        auto bg = koszul_betti(g, i, m + i);
        auto bf = koszul_betti(kw, i, m + i);
        out.strand_e.push_back(be ? mpz_class(static_cast<long>(*be)) : mpz_class(0));
        out.strand_g.push_back(bg ? mpz_class(static_cast<long>(*bg)) : mpz_class(0));
        out.strand_f.push_back(bf ? mpz_class(static_cast<long>(*bf)) : mpz_class(0));
    }
    out.diagnostics.betti_subtraction_ok =
        out.strand_f[0] == out.strand_e[0] - out.strand_g[0] &&
        out.strand_f[1] == out.strand_e[1] - out.strand_g[1];

    // Operational Artinian test for coker(nu^2): the module presented by the
    // linear part alone must agree with F in high window degrees (the
    // discrepancy module must die inside the window).
    out.diagnostics.coker_nu2_artinian = false;
    if (out.pencil && !out.presentation.gen_degrees.empty()) {
        GradedFreeMap<F> lin(f, e.nvars, out.presentation.gen_degrees,
                             std::vector<int>(static_cast<std::size_t>(out.pencil->cols),
                                              m + 1));
        auto it = out.presentation.relation_columns.find(m + 1);
        if (it != out.presentation.relation_columns.end()) {
            MonomialTable tab(e.nvars);
            // relation columns at m+1 are already in F0 coordinates
            int a = static_cast<int>(out.presentation.gen_degrees.size());
            for (int col = 0; col < it->second.cols(); ++col)
                for (int gi = 0; gi < a; ++gi) {
                    std::vector<typename F::Element> coeffs(
                        static_cast<std::size_t>(e.nvars), f.zero());
                    bool nonzero = false;
                    for (int v = 0; v < e.nvars; ++v) {
                        coeffs[static_cast<std::size_t>(v)] =
                            it->second.at(gi * e.nvars + v, col);
                        if (!f.is_zero(coeffs[static_cast<std::size_t>(v)])) nonzero = true;
                    }
                    if (nonzero)
                        lin.entry[static_cast<std::size_t>(gi)]
                                 [static_cast<std::size_t>(col)] = std::move(coeffs);
                }
        }
        Window<F> coker = window_from_presentation(lin, m, hi);
        bool tail_ok = true;
        for (int d = m + 2; d <= hi; ++d) {
            long long diff = coker.dim(d) - kw.dim(d);
            out.diagnostics.coker_discrepancy.push_back(diff);
        }
        // Artinian <=> the discrepancy has died out by the top of the window.
        int checked = static_cast<int>(out.diagnostics.coker_discrepancy.size());
        if (checked == 0 ||
            out.diagnostics.coker_discrepancy[static_cast<std::size_t>(checked - 1)] != 0)
            tail_ok = false;
        out.diagnostics.coker_nu2_artinian = tail_ok;
    }
    return out;
}

// Draws mu repeatedly and keeps the best result by the documented ordering:
// mu2_surjective, then coker_nu2_artinian, then pencil found.
template <class F>
ReductionResult<F> sample_reduction(const Window<F>& e, const Window<F>& g,
                                    int attempts, std::uint64_t seed) {
    HomSpace<F> hs = hom_degree_zero(e, g);
    Rng rng(seed);
    std::optional<ReductionResult<F>> best;
    auto score = [](const ReductionResult<F>& r) {
        int s = 0;
        if (r.diagnostics.mu2_surjective) s += 4;
        if (r.diagnostics.coker_nu2_artinian) s += 2;
        if (r.pencil) s += 1;
        return s;
    };
    for (int a = 0; a < attempts; ++a) {
        auto mu = sample_hom(hs, e.f, rng);
        if (mu.empty()) break;
        try {
            ReductionResult<F> r = reduce(e, g, mu);
            if (!best || score(r) > score(*best)) best = std::move(r);
            if (best && score(*best) == 7) break;
        } catch (const MuNotSurjective&) {
            continue;
        } catch (const NotFinitelyGeneratedInWindow&) {
            continue;
        }
    }
    if (!best) throw NoSurjectionFound("no surjective mu found in the attempt budget");
    return *best;
}

}  // namespace crm
