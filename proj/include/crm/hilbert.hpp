#pragma once

#include "crm/betti.hpp"
#include "crm/errors.hpp"
#include "crm/window.hpp"

namespace crm {

struct HilbertData {
    std::vector<long long> values;  // dims on [lo, hi]
    QPoly polynomial;               // interpolated from the top n+2 degrees
    int polynomial_from = 0;        // first degree used for interpolation
    long long module_dimension = 0; // deg(polynomial) + 1
    mpz_class module_degree = 0;    // (deg polynomial)! * leading coefficient
    bool artinian = false;          // zero polynomial and zero top dims
};

// Lagrange interpolation through (x_i, y_i), exact over Q.
inline QPoly interpolate(const std::vector<long long>& xs,
                         const std::vector<long long>& ys) {
    QPoly acc;
    acc.c = {};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        QPoly term;
        term.c = {mpq_class(static_cast<long>(ys[i]))};
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            QPoly lin;  // (k - x_j) / (x_i - x_j)
            lin.c = {mpq_class(static_cast<long>(-xs[j]), static_cast<long>(xs[i] - xs[j])), mpq_class(1L, static_cast<long>(xs[i] - xs[j]))};
            lin.c[0].canonicalize();
            lin.c[1].canonicalize();
            term = term * lin;
        }
        if (acc.c.size() < term.c.size()) acc.c.resize(term.c.size(), 0);
        for (std::size_t t = 0; t < term.c.size(); ++t) acc.c[t] += term.c[t];
    }
    return acc;
}

template <class F>
HilbertData hilbert_data(const Window<F>& w) {
    int n = w.nvars - 1;
    if (w.hi - w.lo + 1 < n + 2) throw WindowTooShort("need n+2 degrees for interpolation");
    HilbertData h;
    for (int d = w.lo; d <= w.hi; ++d) h.values.push_back(w.dim(d));
    h.polynomial_from = w.hi - (n + 1);
    std::vector<long long> xs, ys;
    for (int d = h.polynomial_from; d <= w.hi; ++d) {
        xs.push_back(d);
        ys.push_back(w.dim(d));
    }
    h.polynomial = interpolate(xs, ys);
    int deg = h.polynomial.degree();
    h.module_dimension = deg + 1;
    if (deg >= 0) {
        mpq_class lead = h.polynomial.c[static_cast<std::size_t>(deg)];
        mpz_class fact = 1;
        for (int t = 2; t <= deg; ++t) fact *= t;
        mpq_class degq = lead * fact;
        degq.canonicalize();
        h.module_degree = degq.get_num();  // integral for Hilbert polynomials
    }
    bool top_zero = true;
    for (int d = h.polynomial_from; d <= w.hi; ++d)
        if (w.dim(d) != 0) top_zero = false;
    h.artinian = (deg < 0) && top_zero;
    return h;
}

}  // namespace crm
