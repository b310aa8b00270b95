#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "crm/matrix.hpp"

namespace crm {

// Exponent vectors for monomials in n+1 variables x_0..x_n, listed in a
// fixed deterministic order (lexicographic on exponent vectors) per degree.
using Exponents = std::vector<int>;

inline std::vector<Exponents> monomial_basis(int nvars, int degree) {
    std::vector<Exponents> out;
    if (degree < 0) return out;
    Exponents cur(nvars, 0);
    // Recursive enumeration in lex order.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

inline long long monomial_count(int nvars, int degree) {
    if (degree < 0) return 0;
    // binom(degree + nvars - 1, nvars - 1)
    long long r = 1;
    for (int i = 1; i <= nvars - 1; ++i) r = r * (degree + i) / i;
    return r;
}

// Index of an exponent vector within monomial_basis(nvars, deg).
class MonomialIndex {
  public:
    MonomialIndex(int nvars, int degree)
        : basis_(monomial_basis(nvars, degree)) {
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
    }

    int size() const { return static_cast<int>(basis_.size()); }
    const Exponents& at(int i) const { return basis_[static_cast<std::size_t>(i)]; }
    int index_of(const Exponents& e) const { return index_.at(e); }

  private:
    std::vector<Exponents> basis_;
    std::map<Exponents, int> index_;
};

// Cache of monomial bases / multiplication index tables keyed by degree.
class MonomialTable {
  public:
    explicit MonomialTable(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }

    const MonomialIndex& basis(int degree) const {
        auto it = cache_.find(degree);
        if (it == cache_.end())
            it = cache_.emplace(degree, MonomialIndex(nvars_, degree)).first;
        return it->second;
    }

    // mult_index(v, d)[i] = index in degree d+1 of x_v * (i-th degree-d monomial)
    const std::vector<int>& mult_index(int var, int degree) const {
        auto key = std::make_pair(var, degree);
        auto it = mult_cache_.find(key);
        if (it != mult_cache_.end()) return it->second;
        const MonomialIndex& src = basis(degree);
        const MonomialIndex& dst = basis(degree + 1);
        std::vector<int> tab(static_cast<std::size_t>(src.size()));
        for (int i = 0; i < src.size(); ++i) {
            Exponents e = src.at(i);
            e[static_cast<std::size_t>(var)] += 1;
            tab[static_cast<std::size_t>(i)] = dst.index_of(e);
        }
        return mult_cache_.emplace(key, std::move(tab)).first->second;
    }

  private:
    int nvars_;
    mutable std::map<int, MonomialIndex> cache_;
    mutable std::map<std::pair<int, int>, std::vector<int>> mult_cache_;
};

}  // namespace crm
