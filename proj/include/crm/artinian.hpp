#pragma once

#include <algorithm>
#include <mutex>

#include "crm/betti.hpp"
#include "crm/errors.hpp"
#include "crm/window.hpp"

namespace crm {

// Catalog of pure Artinian modules used as reduction edges: duals of R/m^t
// regraded so generators sit in a chosen degree (t = 1 is the residue field),
// taken with multiplicity.
struct ArtinianCandidate {
    int t = 1;             // dual of R/m^t
    int multiplicity = 1;  // number of copies
    int shift = 0;         // generator degree after regrading
    std::vector<int> dseq; // absolute pure degree sequence (length n+2)
    std::vector<mpz_class> betti;  // full Betti strand, multiplicity included

    std::string label() const {
        std::string s = std::to_string(multiplicity) + "x(";
        for (std::size_t i = 0; i < betti.size(); ++i) {
            if (i) s += ",";
            mpz_class one_copy = betti[i] / multiplicity;
            s += one_copy.get_str();
        }
        s += ")";
        return s;
    }
};

// Window of k(-m)^q: q-dimensional in degree m, zero elsewhere.
template <class F>
Window<F> koszul_residue_window(F f, int q, int m, int nvars, int lo, int hi) {
    Window<F> w(std::move(f), nvars, lo, hi, true);
    if (m >= lo && m <= hi) w.set_dim(m, q);
    w.allocate_actions();
    return w;
}

// Window of the graded dual of R/m^t, regraded so generators sit in degree m:
// the piece (R_e)^* lives in degree m + (t-1) - e and x_v acts by the
// transpose of multiplication R_{e-1} -> R_e (contraction).
template <class F>
Window<F> matlis_power_window(F f, int t, int m, int nvars, int lo, int hi) {
    MonomialTable tab(nvars);
    Window<F> w(f, nvars, lo, hi, true);
    for (int d = lo; d <= hi; ++d) {
        int e = m + (t - 1) - d;
        if (e >= 0 && e < t) w.set_dim(d, tab.basis(e).size());
    }
    w.allocate_actions();
    for (int d = std::max(lo, m); d < std::min(hi, m + t - 1); ++d) {
        int e = m + (t - 1) - d;  // degree d holds (R_e)^*, d+1 holds (R_{e-1})^*
        std::vector<Matrix<F>> acts;
        for (int v = 0; v < nvars; ++v) {
            const auto& idx = tab.mult_index(v, e - 1);
            Matrix<F> a(w.f, w.dim(d + 1), w.dim(d));
            for (int c = 0; c < w.dim(d + 1); ++c)
                a.at(c, idx[static_cast<std::size_t>(c)]) = w.f.one();
            acts.push_back(std::move(a));
        }
        w.set_actions(d, std::move(acts));
    }
    return w;
}

template <class F>
Window<F> candidate_window(const ArtinianCandidate& cand, F f, int nvars, int lo, int hi) {
    Window<F> one = cand.t == 1
                        ? koszul_residue_window(f, 1, cand.shift, nvars, lo, hi)
                        : matlis_power_window(f, cand.t, cand.shift, nvars, lo, hi);
    Window<F> w = one;
    for (int c = 1; c < cand.multiplicity; ++c) w = direct_sum(w, one);
    return w;
}

// Betti strand of one copy of the t-th catalog module, computed from its
// window and checked pure against the expected degree sequence.
inline std::vector<mpz_class> catalog_betti(int t, int nvars) {
    static std::map<std::pair<int, int>, std::vector<mpz_class>> cache;
    static std::mutex cache_mutex;
    auto key = std::make_pair(t, nvars);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    int n = nvars - 1;
    QQ f;
    Window<QQ> w = t == 1 ? koszul_residue_window(f, 1, 0, nvars, -1, t + 2)
                          : matlis_power_window(f, t, 0, nvars, -1, t + 2);
    std::vector<int> dseq;
    for (int i = 0; i <= n; ++i) dseq.push_back(i);
    dseq.push_back(n + t);
    std::vector<mpz_class> strand;
    for (int i = 0; i <= n + 1; ++i) {
        auto b = koszul_betti(w, i, dseq[static_cast<std::size_t>(i)]);
        if (!b) throw WindowTooShort("catalog window too short");
        strand.push_back(mpz_class(static_cast<long>(*b)));
        // purity: no Betti numbers off the degree sequence
        for (int j = dseq[static_cast<std::size_t>(i)] - 1;
             j <= dseq[static_cast<std::size_t>(i)] + 1; ++j) {
            if (j == dseq[static_cast<std::size_t>(i)] || j - i - 1 < -1 || j + 1 > w.hi)
                continue;
            auto off = koszul_betti(w, i, j);
            if (off && *off != 0)
                throw PurityCheckFailed("catalog module has non-pure Betti table");
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[key] = strand;
    return strand;
}

inline ArtinianCandidate make_candidate(int t, int q, int m, int nvars) {
    int n = nvars - 1;
    ArtinianCandidate c;
    c.t = t;
    c.multiplicity = q;
    c.shift = m;
    for (int i = 0; i <= n; ++i) c.dseq.push_back(m + i);
    c.dseq.push_back(m + n + t);
    c.betti = catalog_betti(t, nvars);
    for (auto& b : c.betti) b *= q;
    return c;
}

// All catalog candidates numerically compatible with the linear strand of E
// at its generator degree: beta_0(G) < beta_0(E) and beta_1(G) < beta_1(E),
// sorted by the resulting pencil size.
inline std::vector<ArtinianCandidate> compatible_candidates(
    const std::vector<mpz_class>& strand, int nvars, int m, int max_multiplicity) {
    std::vector<ArtinianCandidate> out;
    if (strand.size() < 2) return out;
    const mpz_class& b0 = strand[0];
    const mpz_class& b1 = strand[1];
    for (int t = 1;; ++t) {
        std::vector<mpz_class> base = catalog_betti(t, nvars);
        if (base[0] >= b0 || base[1] >= b1) break;
        for (int q = 1; q <= max_multiplicity; ++q) {
            if (q * base[0] >= b0 || q * base[1] >= b1) break;
            out.push_back(make_candidate(t, q, m, nvars));
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const ArtinianCandidate& a, const ArtinianCandidate& b) {
                  mpz_class pa = (b0 - a.betti[0]) * (b1 - a.betti[1]);
                  mpz_class pb = (b0 - b.betti[0]) * (b1 - b.betti[1]);
                  if (pa != pb) return pa < pb;
                  if (a.t != b.t) return a.t < b.t;
                  return a.multiplicity < b.multiplicity;
              });
    return out;
}

}  // namespace crm
