#include <catch2/catch_amalgamated.hpp>

#include "crm/crm.hpp"

using namespace crm;

namespace {

long long hp3(int d) {  // monomials of degree d in 4 variables
    if (d < 0) return 0;
    return static_cast<long long>(d + 1) * (d + 2) * (d + 3) / 6;
}

long long hp2(int d) {  // monomials of degree d in 3 variables
    if (d < 0) return 0;
    return static_cast<long long>(d + 1) * (d + 2) / 2;
}

}  // namespace

TEST_CASE("westwick pencils have the expected shape and constant rank") {
    struct Case {
        int n, k;
    } cases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
    for (auto [n, k] : cases) {
        LinearPencil<QQ> p = westwick_pencil(n, k);
        CHECK(p.nvars == n + 1);
        CHECK(p.rows == k * n + 1);
        CHECK(p.cols == k * n + n - 1);
        auto pm = pencil_mod_p(p, GFp(5));
        REQUIRE(pm.has_value());
        RankProfile prof = rank_profile_exhaustive(*pm);
        CHECK(prof.min_rank == k * n);
        CHECK(prof.max_rank == k * n);
    }
}

TEST_CASE("the five-by-five westwick pencil matches the reference matrix") {
    LinearPencil<QQ> p = westwick_pencil(2, 2);
    LinearPencil<QQ> ref = westwick_2_2_reference();
    CHECK(p.rows == ref.rows);
    CHECK(p.cols == ref.cols);
    CHECK(pencil_equal_up_to_sign(p, ref));
}

TEST_CASE("steiner modules have the expected hilbert function") {
    int n = 2, s = 1, r = 2, m = 1;
    auto sm = steiner_module(n, s, r, m, 99, 0, 6);
    for (int d = 0; d <= 6; ++d)
        CHECK(sm.window.dim(d) == (s + r) * hp2(d) - s * hp2(d - m - 1));
    CHECK(sm.window.check_commute());

    CHECK_THROWS_AS(steiner_module(2, 1, 1, 1, 1, 0, 4), std::invalid_argument);
}

TEST_CASE("the built-in monad satisfies the monad conditions") {
    auto m = instanton_2_2_special();
    MonomialTable tab(4);
    for (int d = 0; d <= 4; ++d) {
        Matrix<QQ> gf = m.gmap.degree_matrix(d, tab) * m.fmap.degree_matrix(d, tab);
        CHECK(gf.is_zero());
    }
    Window<QQ> h = monad_cohomology_module(m, 1, 5);
    for (int d = 1; d <= 5; ++d)
        CHECK(h.dim(d) == 6 * hp3(d) - 2 * hp3(d - 1) - 2 * hp3(d + 1));
    CHECK(h.dim(1) == 2);
    CHECK(h.dim(2) == 12);
    CHECK(h.check_commute());
}

TEST_CASE("monad conditions are enforced") {
    auto m = instanton_2_2_special();
    // degree 0 already fails: the right-hand map cannot be surjective there
    CHECK_THROWS_AS(monad_cohomology_module(m, 0, 4), MonadConditionFailed);
}

TEST_CASE("random monads reproduce the built-in hilbert function") {
    auto m = random_instanton_monad(2, 2, 5);
    Window<QQ> h = monad_cohomology_module(m, 1, 4);
    for (int d = 1; d <= 4; ++d)
        CHECK(h.dim(d) == 6 * hp3(d) - 2 * hp3(d - 1) - 2 * hp3(d + 1));

    auto nc = null_correlation_monad(11);
    Window<QQ> hn = monad_cohomology_module(nc, 1, 4);
    for (int d = 1; d <= 4; ++d)
        CHECK(hn.dim(d) == 4 * hp3(d) - hp3(d - 1) - hp3(d + 1));
}

TEST_CASE("pencil projection by full-rank factors") {
    LinearPencil<QQ> p = westwick_pencil(2, 2);
    Rng rng(3);
    // same shape: nothing happens
    LinearPencil<QQ> same = project_pencil(p, 5, 5, rng);
    CHECK(same == p);
    // strictly smaller: entries stay linear, rank cannot grow
    LinearPencil<QQ> small = project_pencil(p, 4, 5, rng);
    CHECK(small.rows == 4);
    CHECK(small.cols == 5);
    QQ f;
    std::vector<mpq_class> pt{1, 2, -1};
    CHECK(mat_rank(small.eval(pt)) <= mat_rank(p.eval(pt)));
    CHECK_THROWS_AS(project_pencil(p, 6, 5, rng), std::invalid_argument);
}

TEST_CASE("line bundle pipeline produces constant corank-one pencils") {
    for (int s = 1; s <= 2; ++s) {
        LinearPencil<QQ> p = line_bundle_pipeline(s, 3);
        CHECK(p.rows == 2 * s + 1);
        CHECK(p.cols == 2 * s + 1);
        auto pm = pencil_mod_p(p, GFp(5));
        REQUIRE(pm.has_value());
        RankProfile prof = rank_profile_exhaustive(*pm);
        CHECK(prof.min_rank == 2 * s);
        CHECK(prof.max_rank == 2 * s);
    }
}
