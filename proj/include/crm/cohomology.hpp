#pragma once

#include "crm/errors.hpp"
#include "crm/presentation.hpp"

namespace crm {

// Graded k-linear dual with transposed action: (M^v)_d = (M_{-d})^*,
// x_v acting as the transpose of x_v: M_{-d-1} -> M_{-d}.
template <class F>
Window<F> matlis_dual(const Window<F>& w) {
    Window<F> out(w.f, w.nvars, -w.hi, -w.lo, false);
    for (int d = out.lo; d <= out.hi; ++d) out.set_dim(d, w.dim(-d));
    for (int d = out.lo; d < out.hi; ++d) {
        std::vector<Matrix<F>> acts;
        for (int v = 0; v < w.nvars; ++v)
            acts.push_back(w.act(v, -d - 1).transpose());
        out.set_actions(d, std::move(acts));
    }
    return out;
}

enum class CohomologyFunctor { Ext, LocalCohomology };

template <class F>
struct CohomologyWindow {
    CohomologyFunctor which;
    int index = 0;   // homological index i
    int twist = 0;   // c in Ext^i(-, R(c)); unused for local cohomology
    Window<F> window;
};

// Homology of the Hom(-, R(c)) dual of the chain at position i, assembled
// degreewise into a window over [out_lo, out_hi].
template <class F>
CohomologyWindow<F> ext_window(const ResolutionChain<F>& chain, int i, int c,
                               int out_lo, int out_hi) {
    if (i < 0 || (i >= chain.steps() && !chain.complete))
        throw InsufficientChain("chain does not reach the requested index");
    if (i >= chain.steps()) {
        // the resolution stopped earlier, so the ext group vanishes
        CohomologyWindow<F> cw;
        cw.which = CohomologyFunctor::Ext;
        cw.index = i;
        cw.twist = c;
        cw.window = Window<F>(chain.f, chain.nvars, out_lo, out_hi, true);
        cw.window.allocate_actions();
        return cw;
    }
    if (i + 1 >= chain.steps() && !chain.complete)
        throw InsufficientChain("chain not certified past the requested index");
    MonomialTable tab(chain.nvars);
    auto dual_twists = [&](int step) {
        std::vector<int> out;
        for (int g : chain.twists[static_cast<std::size_t>(step)]) out.push_back(-g - c);
        return out;
    };
    Window<F> ambient =
        free_sum_window(chain.f, chain.nvars, dual_twists(i), out_lo, out_hi);
    // in: dual of (F_i -> F_{i-1});  out: dual of (F_{i+1} -> F_i).
    std::map<int, Matrix<F>> in, out;
    if (i >= 1) {
        GradedFreeMap<F> psi = chain.poly_map(i, tab).transpose();
        // psi: dual(F_{i-1}) -> dual(F_i); regrade entries to dual twists.
        GradedFreeMap<F> gm(chain.f, chain.nvars, dual_twists(i), dual_twists(i - 1));
        gm.entry = psi.entry;
        for (int d = out_lo; d <= out_hi; ++d) in[d] = gm.degree_matrix(d, tab);
    }
    if (i + 1 < chain.steps()) {
        GradedFreeMap<F> psi = chain.poly_map(i + 1, tab).transpose();
        GradedFreeMap<F> gm(chain.f, chain.nvars, dual_twists(i + 1), dual_twists(i));
        gm.entry = psi.entry;
        for (int d = out_lo; d <= out_hi; ++d) out[d] = gm.degree_matrix(d, tab);
    }
    CohomologyWindow<F> cw;
    cw.which = CohomologyFunctor::Ext;
    cw.index = i;
    cw.twist = c;
    cw.window = subquotient_window(ambient, in, out, out_lo, out_hi);
    return cw;
}

// Local cohomology via graded duality: H^i_m(M)_d = Ext^{n+1-i}(M, R(-n-1))^v_{-d}.
template <class F>
CohomologyWindow<F> local_cohomology_window(const ResolutionChain<F>& chain, int i,
                                            int out_lo, int out_hi) {
    int n1 = chain.nvars;  // n + 1
    CohomologyWindow<F> ext = ext_window(chain, n1 - i, -n1, -out_hi, -out_lo);
    CohomologyWindow<F> cw;
    cw.which = CohomologyFunctor::LocalCohomology;
    cw.index = i;
    cw.window = matlis_dual(ext.window);
    return cw;
}

}  // namespace crm
