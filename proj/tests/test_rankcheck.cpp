#include <catch2/catch_amalgamated.hpp>

#include "crm/crm.hpp"

using namespace crm;

TEST_CASE("zero pencils certify rank zero") {
    QQ f;
    LinearPencil<QQ> z(f, 3, 2, 2);
    auto v = assert_constant_rank(z, 0, {5, 7}, 50, 1);
    CHECK(v.kind == RankVerdictKind::Certified);
    CHECK(v.exit_code() == 0);
    CHECK(v.transcripts.size() == 3);  // two exhaustive scans plus sampling
}

TEST_CASE("the five-by-five pencil is certified") {
    auto p = westwick_pencil(2, 2);
    auto v = assert_constant_rank(p, 4, {5, 7}, 1000, 1);
    CHECK(v.kind == RankVerdictKind::Certified);
    // the same pencil refutes any other claimed rank
    auto bad = assert_constant_rank(p, 3, {5, 7}, 50, 1);
    CHECK(bad.kind == RankVerdictKind::Refuted);
    CHECK(bad.exit_code() == 2);
}

TEST_CASE("rank drops are refuted with a witness") {
    auto p = westwick_pencil(2, 2);
    // wipe one coefficient entry: the rank now drops somewhere
    p.coeff[0].at(0, 1) = 0;
    p.coeff[1].at(0, 1) = 0;
    p.coeff[2].at(0, 1) = 0;
    auto v = assert_constant_rank(p, 4, {5, 7}, 1000, 1);
    if (v.kind == RankVerdictKind::Refuted) {
        REQUIRE_FALSE(v.witness.empty());
        CHECK(v.witness_rank != 4);
        // replay the witness in the named field
        if (v.witness_field == "Q") {
            std::vector<mpq_class> pt;
            for (auto& s : v.witness) pt.emplace_back(s);
            CHECK(mat_rank(p.eval(pt)) == v.witness_rank);
        } else {
            GFp fp(static_cast<std::uint64_t>(std::stoull(v.witness_field.substr(2))));
            auto pm = pencil_mod_p(p, fp);
            REQUIRE(pm.has_value());
            std::vector<std::uint64_t> pt;
            for (auto& s : v.witness) pt.push_back(std::stoull(s));
            CHECK(mat_rank(pm->eval(pt)) == v.witness_rank);
        }
    } else {
        // tampering must not go unnoticed
        FAIL("expected a refutation");
    }
}

TEST_CASE("unusable primes lead to an inconclusive verdict") {
    // denominator 35 kills reduction at both default primes
    auto p = westwick_pencil(2, 2);
    for (int v = 0; v < 3; ++v)
        p.coeff[static_cast<std::size_t>(v)] =
            p.coeff[static_cast<std::size_t>(v)].scaled(mpq_class(1, 35));
    auto v = assert_constant_rank(p, 4, {5, 7}, 200, 1);
    CHECK(v.kind == RankVerdictKind::Inconclusive);
    CHECK(v.exit_code() == 3);
    // with usable primes the same pencil certifies
    auto v2 = assert_constant_rank(p, 4, {11, 13}, 200, 1);
    CHECK(v2.kind == RankVerdictKind::Certified);
}

TEST_CASE("skew pencils and skew-symmetrization") {
    auto sk = skew_10x10_builtin();
    CHECK(sk.is_skew());
    CHECK(sk.rows == 10);
    CHECK(sk.cols == 10);

    // skew matrices have even rank at every sample point
    Rng rng(5);
    QQ f;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<mpq_class> pt;
        for (int v = 0; v < 4; ++v) pt.push_back(f.from_int(rng.int_range(-9, 9)));
        CHECK(mat_rank(sk.eval(pt)) % 2 == 0);
    }

    // multiplying by a random invertible S destroys skewness;
    // left_skew_symmetrize recovers some skew form
    Matrix<QQ> s(f, 10, 10);
    Rng srng(9);
    do {
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) s.at(i, j) = f.from_int(srng.small_coeff());
    } while (mat_rank(s) != 10);
    LinearPencil<QQ> scrambled(f, 4, 10, 10);
    for (int v = 0; v < 4; ++v) scrambled.coeff[static_cast<std::size_t>(v)] = s * sk.coeff[static_cast<std::size_t>(v)];
    CHECK_FALSE(scrambled.is_skew());
    Rng rng2(21);
    auto smat = left_skew_symmetrize(scrambled, rng2);
    REQUIRE(smat.has_value());
    CHECK(mat_rank(*smat) == 10);
    LinearPencil<QQ> fixed(f, 4, 10, 10);
    for (int v = 0; v < 4; ++v)
        fixed.coeff[static_cast<std::size_t>(v)] = *smat * scrambled.coeff[static_cast<std::size_t>(v)];
    CHECK(fixed.is_skew());
    // an invertible left factor preserves the rank profile
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<mpq_class> pt;
        for (int v = 0; v < 4; ++v) pt.push_back(f.from_int(rng.int_range(-9, 9)));
        CHECK(mat_rank(fixed.eval(pt)) == mat_rank(sk.eval(pt)));
    }
}

TEST_CASE("the built-in skew pencil has constant rank eight") {
    auto sk = skew_10x10_builtin();
    auto v = assert_constant_rank(sk, 8, {7, 11}, 300, 1);
    CHECK(v.kind == RankVerdictKind::Certified);
}
