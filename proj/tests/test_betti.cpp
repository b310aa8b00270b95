#include <catch2/catch_amalgamated.hpp>

#include "crm/crm.hpp"

using namespace crm;

namespace {

std::vector<mpz_class> zvec(std::initializer_list<long> xs) {
    std::vector<mpz_class> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("koszul betti numbers of the residue field") {
    QQ f;
    // k as a module over three variables: Koszul resolution, betti (1,3,3,1).
    Window<QQ> w = koszul_residue_window(f, 1, 0, 3, -1, 3);
    std::vector<long long> expect{1, 3, 3, 1};
    for (int i = 0; i <= 3; ++i) {
        auto b = koszul_betti(w, i, i);
        REQUIRE(b.has_value());
        CHECK(*b == expect[static_cast<std::size_t>(i)]);
    }
    // nothing off the diagonal strand
    auto off = koszul_betti(w, 1, 2);
    REQUIRE(off.has_value());
    CHECK(*off == 0);
}

TEST_CASE("koszul betti returns nothing when the window is too small") {
    QQ f;
    Window<QQ> w = free_window(f, 3, 0, 0, 2);
    CHECK_FALSE(koszul_betti(w, 1, 3).has_value());  // needs degree 3
    CHECK(koszul_betti(w, 1, 2).has_value());
}

TEST_CASE("deep truncation of the coordinate ring") {
    QQ f;
    Window<QQ> w = free_window(f, 3, 0, 0, 12).truncate(10);
    auto b0 = koszul_betti(w, 0, 10);
    auto b1 = koszul_betti(w, 1, 11);
    auto b2 = koszul_betti(w, 2, 12);
    REQUIRE((b0 && b1 && b2));
    CHECK(*b0 == 66);
    CHECK(*b1 == 120);
    CHECK(*b2 == 55);

    auto pred = predict_truncation_betti(2, zvec({1, 0, 0}), 10);
    CHECK(pred == zvec({66, 120, 55}));
}

TEST_CASE("truncation polynomials match direct computations") {
    // For the free module the predicted truncation betti numbers in column i
    // are exactly the polynomial values, so compare against genuinely
    // computed Koszul homology of truncated windows.
    QQ f;
    for (int n = 2; n <= 3; ++n) {
        for (long long k = 1; k <= 3; ++k) {
            Window<QQ> w =
                free_window(f, n + 1, 0, 0, static_cast<int>(k) + n + 1).truncate(static_cast<int>(k));
            for (int i = 0; i <= n; ++i) {
                QPoly p = recurrence_poly(n, i);
                auto b = koszul_betti(w, i, static_cast<int>(k) + i);
                REQUIRE(b.has_value());
                CHECK(p.eval_int(k) == static_cast<long>(*b));
            }
        }
    }
}

TEST_CASE("one-step truncation recursion") {
    // Truncating k times one degree at a time agrees with truncating once by
    // k degrees; this is a polynomial identity in the strand values.
    Rng rng(42);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<mpz_class> strand;
            for (int i = 0; i <= n; ++i)
                strand.emplace_back(static_cast<long>(rng.int_range(0, 9)));
            for (long long k = 2; k <= 6; ++k) {
                auto direct = predict_truncation_betti(n, strand, k);
                auto once = predict_truncation_betti(n, strand, 1);
                auto rest = predict_truncation_betti(n, once, k - 1);
                CHECK(direct == rest);
            }
        }
    }
}

TEST_CASE("truncation polynomial values at small arguments") {
    // p_n^{(0)}(1) = n+1 and p_n^{(1)}(1) = dim of linear relations of the
    // irrelevant ideal, cross-checked for the plane from the Koszul complex.
    QPoly p0 = recurrence_poly(2, 0);
    QPoly p1 = recurrence_poly(2, 1);
    QPoly p2 = recurrence_poly(2, 2);
    CHECK(p0.eval_int(1) == 3);
    CHECK(p1.eval_int(1) == 3);
    CHECK(p2.eval_int(1) == 1);
    CHECK(p0.eval_int(0) == 1);
    CHECK(p1.eval_int(0) == 0);
    CHECK(p2.eval_int(0) == 0);
}

TEST_CASE("predicted children of the twisted tangent strand") {
    auto pred = predict_truncation_betti(2, zvec({3, 1, 0}), 3);
    CHECK(pred == zvec({24, 37, 15}));
}

TEST_CASE("steiner truncation betti matches actual modules") {
    for (int m = 1; m <= 2; ++m) {
        auto sm = steiner_module(2, 1, 2, m, 7, 0, m + 4);
        auto w = sm.window.truncate(m);
        auto formula = steiner_truncation_betti(2, 1, 2, m);
        for (int i = 0; i <= 2; ++i) {
            auto b = koszul_betti(w, i, m + i);
            REQUIRE(b.has_value());
            CHECK(formula[static_cast<std::size_t>(i)] == static_cast<long>(*b));
        }
    }
    CHECK(steiner_truncation_betti(3, 2, 3, 1) == zvec({20, 32, 20, 5}));
}

TEST_CASE("herzog-kuhl betti numbers for pure resolutions") {
    CHECK(herzog_kuhl({0, 1, 2, 3}).betti == zvec({1, 3, 3, 1}));
    CHECK(herzog_kuhl({0, 1, 2, 4}).betti == zvec({3, 8, 6, 1}));
    CHECK(herzog_kuhl({0, 1, 2, 5}).betti == zvec({6, 15, 10, 1}));
    CHECK(herzog_kuhl({0, 1, 2, 6}).betti == zvec({10, 24, 15, 1}));
    CHECK(herzog_kuhl({0, 1, 2, 3}).q == 6);
}

TEST_CASE("herzog-kuhl multiplier is minimal") {
    // The returned multiplier is the least positive integer clearing all the
    // denominators; any smaller multiple leaves some entry fractional.
    auto hk = herzog_kuhl({0, 2, 3, 7});
    REQUIRE(hk.q > 1);
    for (mpz_class q = 1; q < hk.q; ++q) {
        bool integral = true;
        std::size_t c = hk.dseq.size();
        for (std::size_t i = 0; i < c && integral; ++i) {
            mpq_class v(q);
            for (std::size_t j = 0; j < c; ++j) {
                if (j == i) continue;
                long diff = hk.dseq[j] - hk.dseq[i];
                v /= mpq_class(diff < 0 ? -diff : diff);
            }
            v.canonicalize();
            if (v.get_den() != 1) integral = false;
        }
        CHECK_FALSE(integral);
    }
    // betti numbers scale linearly in the multiplier
    for (std::size_t i = 0; i < hk.dseq.size(); ++i) {
        mpq_class v(hk.q);
        for (std::size_t j = 0; j < hk.dseq.size(); ++j) {
            if (j == i) continue;
            long diff = hk.dseq[j] - hk.dseq[i];
            v /= mpq_class(diff < 0 ? -diff : diff);
        }
        v.canonicalize();
        REQUIRE(v.get_den() == 1);
        CHECK(hk.betti[i] == v.get_num());
    }
}

TEST_CASE("closed forms satisfy the defining recursion and initial values") {
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i <= n; ++i) {
            QPoly p = recurrence_poly(n, i);
            CHECK(p.eval_int(1) == binom_z(n + 1, i + 1));
            CHECK(p.eval_int(-i) == ((i % 2) ? -1 : 1));
            for (long k = 1; k <= 20; ++k) {
                mpq_class rhs = 0;
                for (int j = 0; j <= n; ++j) {
                    mpq_class term = mpq_class(binom_z(n + 1, j + 1)) * p.eval(mpq_class(k - j));
                    if (j % 2) term = -term;
                    rhs += term;
                }
                CHECK(p.eval(mpq_class(k + 1)) == rhs);
            }
        }
    CHECK(recurrence_poly(2, 1).to_string() == "k^2 + 2*k");
    // column 0 counts monomials: binom(k+n, n)
    for (int n = 1; n <= 4; ++n) {
        QPoly p = recurrence_poly(n, 0);
        for (long k = 0; k <= 20; ++k) CHECK(p.eval_int(k) == binom_z(k + n, n));
    }
}
