#include <catch2/catch_amalgamated.hpp>

#include "crm/matrix.hpp"
#include "crm/rng.hpp"

using namespace crm;

namespace {

// Independent brute-force rank oracle: forward elimination with full column
// search, no pivot normalization, distinct code path from RowEchelon.
template <class F>
int oracle_rank(Matrix<F> m) {
    const F& f = m.field();
    int rank = 0;
    std::vector<bool> used(static_cast<std::size_t>(m.rows()), false);
    for (int c = 0; c < m.cols(); ++c) {
        int piv = -1;
        for (int r = 0; r < m.rows(); ++r)
            if (!used[static_cast<std::size_t>(r)] && !f.is_zero(m.at(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        used[static_cast<std::size_t>(piv)] = true;
        ++rank;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == piv || f.is_zero(m.at(r, c))) continue;
            auto factor = f.div(m.at(r, c), m.at(piv, c));
            for (int j = 0; j < m.cols(); ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(piv, j)));
        }
    }
    return rank;
}

template <class F>
Matrix<F> random_matrix(const F& f, int rows, int cols, Rng& rng) {
    Matrix<F> m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = f.from_int(rng.int_range(-6, 6));
    return m;
}

}  // namespace

TEST_CASE("rank: identity and zero") {
    QQ f;
    CHECK(mat_rank(Matrix<QQ>::identity(f, 3)) == 3);
    CHECK(mat_rank(Matrix<QQ>(f, 4, 4)) == 0);
}

TEST_CASE("rank agrees with brute-force oracle over F_7") {
    GFp f(7);
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix<GFp> m = random_matrix(f, 4, 5, rng);
        CHECK(mat_rank(m) == oracle_rank(m));
    }
}

TEST_CASE("rank agrees with oracle over Q") {
    QQ f;
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix<QQ> m = random_matrix(f, 5, 4, rng);
        CHECK(mat_rank(m) == oracle_rank(m));
    }
}

TEST_CASE("rank equals rank of transpose") {
    QQ fq;
    GFp fp(11);
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<QQ> a = random_matrix(fq, 6, 4, rng);
        CHECK(mat_rank(a) == mat_rank(a.transpose()));
        Matrix<GFp> b = random_matrix(fp, 3, 7, rng);
        CHECK(mat_rank(b) == mat_rank(b.transpose()));
    }
}

TEST_CASE("kernel basis: identity and symmetric example") {
    QQ f;
    CHECK(mat_kernel_basis(Matrix<QQ>::identity(f, 4)).cols() == 0);
    Matrix<QQ> m(f, 1, 3);
    for (int j = 0; j < 3; ++j) m.at(0, j) = f.one();
    Matrix<QQ> k = mat_kernel_basis(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
}

TEST_CASE("kernel basis properties over F_11") {
    GFp f(11);
    Rng rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix<GFp> m = random_matrix(f, 5, 8, rng);
        Matrix<GFp> k = mat_kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(k.cols() == 8 - mat_rank(m));
        CHECK(mat_rank(k) == k.cols());
    }
}

TEST_CASE("rationals and big prime field agree on small integer matrices") {
    QQ fq;
    GFp fp(10007);
    Rng rng(123);
    for (int trial = 0; trial < 15; ++trial) {
        Matrix<QQ> a(fq, 6, 6);
        Matrix<GFp> b(fp, 6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                long long v = rng.int_range(-50, 50);
                a.at(i, j) = fq.from_int(v);
                b.at(i, j) = fp.from_int(v);
            }
        CHECK(mat_rank(a) == mat_rank(b));
    }
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
    QQ f;
    Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        Matrix<QQ> a = random_matrix(f, 4, 3, rng);
        Matrix<QQ> x = random_matrix(f, 3, 2, rng);
        Matrix<QQ> b = a * x;
        auto sol = mat_solve(a, b);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == b);
    }
    // inconsistent: zero matrix, nonzero rhs
    Matrix<QQ> a(f, 2, 2);
    Matrix<QQ> b(f, 2, 1);
    b.at(0, 0) = f.one();
    CHECK_FALSE(mat_solve(a, b).has_value());
}

TEST_CASE("span tracker and quotient space") {
    QQ f;
    SpanTracker<QQ> span(f, 3);
    std::vector<mpq_class> v1{1, 2, 3}, v2{2, 4, 6}, v3{0, 1, 0};
    CHECK(span.add(v1));
    CHECK_FALSE(span.add(v2));
    CHECK(span.add(v3));
    CHECK(span.rank() == 2);
    CHECK(span.contains({3, 7, 9}));

    Matrix<QQ> p(f, 3, 1);
    p.at(0, 0) = 1;
    QuotientSpace<QQ> q(p);
    CHECK(q.dim() == 2);
    auto proj = q.project({5, 1, 2});
    CHECK(proj.size() == 2);
    CHECK(proj[0] == 1);
    CHECK(proj[1] == 2);
}
