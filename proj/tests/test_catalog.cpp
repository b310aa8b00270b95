#include <catch2/catch_amalgamated.hpp>

#include "crm/crm.hpp"

using namespace crm;

namespace {

std::vector<mpz_class> zvec(std::initializer_list<long> xs) {
    std::vector<mpz_class> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Window of R/m^t with generator in degree 0, built directly.
Window<QQ> power_quotient_window(int t, int nvars, int lo, int hi) {
    QQ f;
    MonomialTable tab(nvars);
    Window<QQ> w(f, nvars, lo, hi, true);
    for (int d = std::max(lo, 0); d <= hi; ++d)
        if (d < t) w.set_dim(d, tab.basis(d).size());
    w.allocate_actions();
    for (int d = std::max(lo, 0); d < hi && d + 1 < t; ++d) {
        std::vector<Matrix<QQ>> acts;
        for (int v = 0; v < nvars; ++v) {
            const auto& idx = tab.mult_index(v, d);
            Matrix<QQ> a(f, w.dim(d + 1), w.dim(d));
            for (int c = 0; c < w.dim(d); ++c)
                a.at(idx[static_cast<std::size_t>(c)], c) = 1;
            acts.push_back(std::move(a));
        }
        w.set_actions(d, std::move(acts));
    }
    return w;
}

}  // namespace

TEST_CASE("catalog strands match herzog-kuhl on the plane") {
    CHECK(catalog_betti(1, 3) == zvec({1, 3, 3, 1}));
    CHECK(catalog_betti(2, 3) == zvec({3, 8, 6, 1}));
    CHECK(catalog_betti(3, 3) == zvec({6, 15, 10, 1}));
    CHECK(catalog_betti(4, 3) == zvec({10, 24, 15, 1}));
    for (int t = 1; t <= 4; ++t)
        CHECK(catalog_betti(t, 3) == herzog_kuhl({0, 1, 2, 2 + t}).betti);
}

TEST_CASE("catalog strands are reversed strands of power quotients") {
    // graded duality: beta_i of the dual equals beta_{c-i} of R/m^t
    for (int t = 2; t <= 3; ++t) {
        Window<QQ> q = power_quotient_window(t, 3, -1, t + 2);
        std::vector<mpz_class> fwd;
        std::vector<int> dseq{0, 1, 2, 2 + t};
        std::vector<int> qd{0, t, t + 1, t + 2};
        for (int i = 0; i <= 3; ++i) {
            auto b = koszul_betti(q, i, qd[static_cast<std::size_t>(i)]);
            REQUIRE(b.has_value());
            fwd.emplace_back(static_cast<long>(*b));
        }
        std::vector<mpz_class> rev(fwd.rbegin(), fwd.rend());
        CHECK(catalog_betti(t, 3) == rev);
    }
}

TEST_CASE("dual power windows have the mirrored hilbert function") {
    QQ f;
    MonomialTable tab(3);
    for (int t = 1; t <= 4; ++t) {
        Window<QQ> w = matlis_power_window(f, t, 0, 3, -1, t + 2);
        for (int d = -1; d <= t + 2; ++d) {
            int e = (t - 1) - d;
            int expect = (e >= 0 && e < t) ? tab.basis(e).size() : 0;
            CHECK(w.dim(d) == expect);
        }
        CHECK(w.check_commute());
        HilbertData h = hilbert_data(matlis_power_window(f, t, 0, 3, -1, t + 4));
        CHECK(h.artinian);
        CHECK(h.module_dimension == 0);
    }
}

TEST_CASE("regrading moves the generator degree") {
    QQ f;
    Window<QQ> w = matlis_power_window(f, 2, 5, 3, 3, 8);
    CHECK(w.dim(5) == 3);  // socle-side piece (R_1)^*
    CHECK(w.dim(6) == 1);
    CHECK(w.dim(4) == 0);
    CHECK(w.dim(7) == 0);
}

TEST_CASE("candidate windows scale with multiplicity") {
    QQ f;
    ArtinianCandidate c = make_candidate(2, 3, 1, 3);
    CHECK(c.betti == zvec({9, 24, 18, 3}));
    CHECK(c.dseq == std::vector<int>{1, 2, 3, 5});
    CHECK(c.label() == "3x(3,8,6,1)");
    Window<QQ> w = candidate_window(c, f, 3, 0, 4);
    Window<QQ> one = matlis_power_window(f, 2, 1, 3, 0, 4);
    for (int d = 0; d <= 4; ++d) CHECK(w.dim(d) == 3 * one.dim(d));
    CHECK(w.check_commute());

    // the betti numbers of the window agree with the candidate strand
    auto b0 = koszul_betti(w, 0, 1);
    auto b1 = koszul_betti(w, 1, 2);
    REQUIRE((b0 && b1));
    CHECK(c.betti[0] == static_cast<long>(*b0));
    CHECK(c.betti[1] == static_cast<long>(*b1));
}

TEST_CASE("compatible candidates respect strict strand bounds") {
    // strand of the twisted tangent-style root on the plane
    auto strand = zvec({3, 1, 0});
    auto cands = compatible_candidates(strand, 3, 1, 16);
    // nothing fits: the smallest candidate already has beta_0 = 1, beta_1 = 3 > 1
    CHECK(cands.empty());

    auto big = zvec({24, 37, 15});
    auto cands2 = compatible_candidates(big, 3, 1, 16);
    CHECK_FALSE(cands2.empty());
    for (const auto& c : cands2) {
        CHECK(c.betti[0] < big[0]);
        CHECK(c.betti[1] < big[1]);
        CHECK(c.multiplicity >= 1);
        CHECK(c.shift == 1);
    }
    // sorted by pencil area: (b0(E)-b0(G)) * (b1(E)-b1(G)) nonincreasing...
    // smaller residual pencils first
    for (std::size_t i = 1; i < cands2.size(); ++i) {
        mpz_class prev = (big[0] - cands2[i - 1].betti[0]) * (big[1] - cands2[i - 1].betti[1]);
        mpz_class cur = (big[0] - cands2[i].betti[0]) * (big[1] - cands2[i].betti[1]);
        CHECK(prev <= cur);
    }
    // multiplicities of the residue field candidates go up to the bound
    int max_q = 0;
    for (const auto& c : cands2)
        if (c.t == 1) max_q = std::max(max_q, c.multiplicity);
    CHECK(max_q >= 10);
}
