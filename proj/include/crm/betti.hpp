#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

#include "crm/window.hpp"

namespace crm {

// ---------------------------------------------------------------------------
// Exact univariate polynomials over Q, dense coefficient vector (low first).
// ---------------------------------------------------------------------------
struct QPoly {
    std::vector<mpq_class> c;  // c[i] * k^i

    int degree() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (c[static_cast<std::size_t>(i)] != 0) return i;
        return -1;
    }

    mpq_class eval(const mpq_class& k) const {
        mpq_class r = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            r = r * k + c[static_cast<std::size_t>(i)];
        return r;
    }

    mpz_class eval_int(long long k) const {
        mpq_class r = eval(mpq_class(static_cast<long>(k)));
        r.canonicalize();
        if (r.get_den() != 1) throw std::logic_error("polynomial value not integral");
        return r.get_num();
    }

    QPoly operator*(const QPoly& o) const {
        QPoly r;
        if (c.empty() || o.c.empty()) return r;
        r.c.assign(c.size() + o.c.size() - 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }

    QPoly scaled(const mpq_class& q) const {
        QPoly r = *this;
        for (auto& x : r.c) x *= q;
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
            const mpq_class& x = c[static_cast<std::size_t>(i)];
            if (x == 0) continue;
            if (!first) os << (x > 0 ? " + " : " - ");
            else if (x < 0) os << "-";
            mpq_class a = abs(x);
            if (a != 1 || i == 0) os << a.get_str();
            if (i > 0) {
                if (a != 1) os << "*";
                os << "k";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
};

inline mpz_class binom_z(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// The degree-n polynomial p_n^{(i)} with
//   p_n^{(i)}(k) = C(n,i) * C(k+n-1, n) * (k+n) / (k+i),
// expanded exactly so the removable factor at k = -i never divides by zero.
inline QPoly recurrence_poly(int n, int i) {
    QPoly p;
    p.c = {1};
    if (i < n) {
        // (k + n) * prod_{t != i, 0 <= t < n} (k + t)
        QPoly lin;
        lin.c = {mpq_class(n), 1};
        p = p * lin;
        for (int t = 0; t < n; ++t) {
            if (t == i) continue;
            QPoly q;
            q.c = {mpq_class(t), 1};
            p = p * q;
        }
        mpz_class num = binom_z(n, i);
        mpz_class den = 1;
        for (int t = 2; t <= n; ++t) den *= t;
        p = p.scaled(mpq_class(num) / mpq_class(den));
    } else {
        // i == n: p(k) = C(k+n-1, n) = prod_{t=0}^{n-1} (k + t) / n!
        for (int t = 0; t < n; ++t) {
            QPoly q;
            q.c = {mpq_class(t), 1};
            p = p * q;
        }
        mpz_class den = 1;
        for (int t = 2; t <= n; ++t) den *= t;
        p = p.scaled(mpq_class(1) / mpq_class(den));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Graded Betti numbers via Koszul homology.
// ---------------------------------------------------------------------------

// Size-i subsets of {0..nvars-1} in lexicographic order.
inline std::vector<std::vector<int>> index_subsets(int nvars, int i) {
    std::vector<std::vector<int>> out;
    if (i < 0 || i > nvars) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == i) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < nvars; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Koszul differential M_d (x) Wedge^i V  ->  M_{d+1} (x) Wedge^{i-1} V.
template <class F>
Matrix<F> koszul_map(const Window<F>& w, int d, int i) {
    const F& f = w.f;
    auto src_sets = index_subsets(w.nvars, i);
    auto dst_sets = index_subsets(w.nvars, i - 1);
    std::map<std::vector<int>, int> dst_index;
    for (std::size_t s = 0; s < dst_sets.size(); ++s)
        dst_index[dst_sets[s]] = static_cast<int>(s);

    int md = w.covers(d) ? w.dim(d) : 0;
    int md1 = w.covers(d + 1) ? w.dim(d + 1) : 0;
    Matrix<F> out(f, md1 * static_cast<int>(dst_sets.size()),
                  md * static_cast<int>(src_sets.size()));
    if (md == 0 || md1 == 0) return out;

    for (std::size_t s = 0; s < src_sets.size(); ++s) {
        const auto& S = src_sets[s];
        for (std::size_t t = 0; t < S.size(); ++t) {
            std::vector<int> T = S;
            T.erase(T.begin() + static_cast<long>(t));
            int blk = dst_index.at(T);
            const Matrix<F>& x = w.act(S[t], d);
            bool negate = (t % 2) == 1;
            for (int r = 0; r < md1; ++r)
                for (int c = 0; c < md; ++c) {
                    const auto& val = x.at(r, c);
                    if (f.is_zero(val)) continue;
                    auto& cell = out.at(blk * md1 + r, static_cast<int>(s) * md + c);
                    cell = negate ? f.sub(cell, val) : f.add(cell, val);
                }
        }
    }
    return out;
}

// beta_{i,j}(M) = dim of the middle homology of
//   M_{j-i-1} (x) Wedge^{i+1}  ->  M_{j-i} (x) Wedge^{i}  ->  M_{j-i+1} (x) Wedge^{i-1}.
// Returns nullopt when the window does not determine the needed degrees.
template <class F>
std::optional<long long> koszul_betti(const Window<F>& w, int i, int j) {
    if (i < 0 || i > w.nvars) return 0;
    int d0 = j - i - 1, d1 = j - i, d2 = j - i + 1;
    for (int d : {d0, d1, d2})
        if (!w.covers(d)) return std::nullopt;
    Matrix<F> in = koszul_map(w, d0, i + 1);
    Matrix<F> out = koszul_map(w, d1, i);
    long long middle = out.cols();
    return middle - mat_rank(out) - mat_rank(in);
}

struct BettiTable {
    // entries[{i, j}] = beta_{i,j}
    std::map<std::pair<int, int>, mpz_class> entries;

    mpz_class get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? mpz_class(0) : it->second;
    }
    void set(int i, int j, mpz_class v) {
        if (v != 0) entries[{i, j}] = std::move(v);
    }
};

// Linear-strand prediction: given beta_{j, m+j} of a module generated in
// degree m with linear resolution data (strand), the truncation at m + k has
//   beta_i(M_{>= m+k}) = sum_{j} (-1)^j p_n^{(i)}(k - j) beta_{j, m+j}.
inline std::vector<mpz_class> predict_truncation_betti(
    int n, const std::vector<mpz_class>& strand, long long k) {
    std::vector<mpz_class> out(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i) {
        QPoly p = recurrence_poly(n, i);
        mpq_class acc = 0;
        for (std::size_t j = 0; j < strand.size(); ++j) {
            mpq_class term = p.eval(mpq_class(static_cast<long>(k) - static_cast<long>(j)));
            term *= mpq_class(strand[j]);
            if (j % 2 == 1) term = -term;
            acc += term;
        }
        acc.canonicalize();
        if (acc.get_den() != 1) throw std::logic_error("predicted value not integral");
        out[static_cast<std::size_t>(i)] = acc.get_num();
    }
    return out;
}

// Betti numbers of the truncation at degree m of the module with the given
// Steiner parameters on P^n:
//   alpha_i = p_n^{(i)}(m) (s + r) - p_n^{(i)}(-1) s,
// where p_n^{(i)}(-1) = -delta_{i,1}.
inline std::vector<mpz_class> steiner_truncation_betti(int n, long long s,
                                                       long long r, long long m) {
    std::vector<mpz_class> out(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i) {
        QPoly p = recurrence_poly(n, i);
        mpq_class acc = p.eval(mpq_class(static_cast<long>(m))) * mpq_class(static_cast<long>(s + r))
                        - p.eval(mpq_class(-1)) * mpq_class(static_cast<long>(s));
        acc.canonicalize();
        if (acc.get_den() != 1) throw std::logic_error("value not integral");
        out[static_cast<std::size_t>(i)] = acc.get_num();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pure resolutions: minimal Betti numbers for a strictly increasing degree
// sequence d_0 < d_1 < ... < d_c:
//   beta_i = q * prod_{j != i} 1 / |d_j - d_i|,
// with q the least multiplier making every beta_i a positive integer.
// ---------------------------------------------------------------------------
struct PureBetti {
    std::vector<int> dseq;
    mpz_class q;                  // minimal multiplier
    std::vector<mpz_class> betti; // beta_i for the minimal multiplier
};

inline PureBetti herzog_kuhl(const std::vector<int>& dseq) {
    for (std::size_t i = 1; i < dseq.size(); ++i)
        if (dseq[i] <= dseq[i - 1])
            throw std::invalid_argument("degree sequence must be strictly increasing");
    std::size_t c = dseq.size();
    std::vector<mpz_class> D(c, 1);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (j != i) D[i] *= abs(mpz_class(dseq[j] - dseq[i]));
    mpz_class q = 1;
    for (std::size_t i = 0; i < c; ++i) {
        mpz_class g;
        mpz_lcm(g.get_mpz_t(), q.get_mpz_t(), D[i].get_mpz_t());
        q = g;
    }
    PureBetti out;
    out.dseq = dseq;
    out.q = q;
    out.betti.resize(c);
    for (std::size_t i = 0; i < c; ++i) out.betti[i] = q / D[i];
    return out;
}

}  // namespace crm
