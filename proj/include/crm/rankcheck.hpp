#pragma once

#include <string>
#include <vector>

#include "crm/pencil.hpp"
#include "crm/rng.hpp"

namespace crm {

struct RankProfile {
    int min_rank = 0, max_rank = 0;
    std::vector<std::string> min_witness;  // projective coordinates as strings
    long long points_checked = 0;
    std::string strategy;
};

// Exhaustive scan over P^{nvars-1}(F_q): representatives with first nonzero
// coordinate 1.
inline RankProfile rank_profile_exhaustive(const LinearPencil<GFp>& a) {
    const GFp& f = a.f;
    RankProfile p;
    p.strategy = "ExhaustiveFq(" + std::to_string(f.p) + ")";
    p.min_rank = -1;
    std::vector<std::uint64_t> pt(static_cast<std::size_t>(a.nvars), 0);
    // first = index of the leading 1; the remaining coordinates run over F_q
    for (int first = 0; first < a.nvars; ++first) {
        int tail = a.nvars - first - 1;
        std::uint64_t count = 1;
        for (int t = 0; t < tail; ++t) count *= f.p;
        for (std::uint64_t code = 0; code < count; ++code) {
            for (int v = 0; v < first; ++v) pt[static_cast<std::size_t>(v)] = 0;
            pt[static_cast<std::size_t>(first)] = 1;
            std::uint64_t c = code;
            for (int t = 0; t < tail; ++t) {
                pt[static_cast<std::size_t>(first + 1 + t)] = c % f.p;
                c /= f.p;
            }
            int r = mat_rank(a.eval(pt));
            ++p.points_checked;
            if (p.min_rank < 0 || r < p.min_rank) {
                p.min_rank = r;
                p.min_witness.clear();
                for (auto x : pt) p.min_witness.push_back(std::to_string(x));
            }
            if (r > p.max_rank) p.max_rank = r;
        }
    }
    if (p.min_rank < 0) p.min_rank = 0;
    return p;
}

inline RankProfile rank_profile_random(const LinearPencil<QQ>& a, long long count,
                                       std::uint64_t seed) {
    const QQ& f = a.f;
    RankProfile p;
    p.strategy = "RandomRational(" + std::to_string(count) + "," + std::to_string(seed) + ")";
    p.min_rank = -1;
    Rng rng(seed);
    for (long long i = 0; i < count; ++i) {
        std::vector<mpq_class> pt;
        bool nonzero = false;
        for (int v = 0; v < a.nvars; ++v) {
            mpq_class num(static_cast<long>(rng.int_range(-30, 30)), static_cast<long>(rng.int_range(1, 7)));
            num.canonicalize();
            if (num != 0) nonzero = true;
            pt.push_back(num);
        }
        if (!nonzero) pt[0] = 1;
        int r = mat_rank(a.eval(pt));
        ++p.points_checked;
        if (p.min_rank < 0 || r < p.min_rank) {
            p.min_rank = r;
            p.min_witness.clear();
            for (auto& x : pt) p.min_witness.push_back(f.to_string(x));
        }
        if (r > p.max_rank) p.max_rank = r;
    }
    if (p.min_rank < 0) p.min_rank = 0;
    return p;
}

enum class RankVerdictKind { Certified, Refuted, Inconclusive };

struct RankVerdict {
    RankVerdictKind kind = RankVerdictKind::Inconclusive;
    int rho = 0;
    std::vector<RankProfile> transcripts;
    std::vector<std::string> witness;  // point whose rank differs from rho
    std::string witness_field;
    int witness_rank = 0;

    int exit_code() const {
        switch (kind) {
            case RankVerdictKind::Certified: return 0;
            case RankVerdictKind::Refuted: return 2;
            default: return 3;
        }
    }
};

// Certified requires exhaustive agreement over at least one usable prime
// plus the rational sampling batch; a witness anywhere refutes. With no
// usable prime (denominators block every requested field) the verdict is
// inconclusive regardless of sampling.
inline RankVerdict assert_constant_rank(const LinearPencil<QQ>& a, int rho,
                                        const std::vector<std::uint64_t>& primes = {5, 7},
                                        long long samples = 1000,
                                        std::uint64_t seed = 1) {
    RankVerdict v;
    v.rho = rho;
    int usable = 0;
    for (auto q : primes) {
        GFp fp(q);
        auto ap = pencil_mod_p(a, fp);
        if (!ap) continue;
        ++usable;
        RankProfile p = rank_profile_exhaustive(*ap);
        v.transcripts.push_back(p);
        if (p.min_rank != rho || p.max_rank != rho) {
            v.kind = RankVerdictKind::Refuted;
            v.witness = p.min_rank != rho ? p.min_witness : std::vector<std::string>{};
            v.witness_field = "F_" + std::to_string(q);
            v.witness_rank = p.min_rank != rho ? p.min_rank : p.max_rank;
            return v;
        }
    }
    RankProfile rp = rank_profile_random(a, samples, seed);
    v.transcripts.push_back(rp);
    if (rp.min_rank != rho || rp.max_rank != rho) {
        v.kind = RankVerdictKind::Refuted;
        v.witness = rp.min_witness;
        v.witness_field = "Q";
        v.witness_rank = rp.min_rank;
        return v;
    }
    v.kind = usable >= 1 ? RankVerdictKind::Certified : RankVerdictKind::Inconclusive;
    return v;
}

}  // namespace crm
