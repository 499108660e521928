#include <doctest.h>

#include "jetrank/rank.hpp"

#include "test_util.hpp"

using namespace jetrank;
using test::default_modulus;

TEST_CASE("prime modulus validation") {
    CHECK_NOTHROW(PrimeModulus(1000003));
    CHECK_NOTHROW(PrimeModulus(5));
    CHECK_THROWS_AS(PrimeModulus(2), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(1000004), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(1000001), std::invalid_argument); // 101 * 9901
}

TEST_CASE("residue arithmetic") {
    const PrimeModulus p(7);
    const Fp a(5, p), b(4, p);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 1);
    CHECK((a * b).value() == 6);
    CHECK((-a).value() == 2);
    CHECK((a.inverse() * a).value() == 1);
    CHECK(Fp::from_int(-3, p).value() == 4);

    const PrimeModulus q(11);
    CHECK_THROWS_AS((void)(a + Fp(1, q)), std::invalid_argument);
    CHECK_THROWS_AS((void)(Fp(0, p).inverse()), std::domain_error);
}

TEST_CASE("matrix construction rejects mixed moduli") {
    const PrimeModulus p(7), q(11);
    CHECK_THROWS_AS(Matrix<Fp>(1, 2, {Fp(1, p), Fp(1, q)}), std::invalid_argument);
}

TEST_CASE("rank_mod_p on identity and zero matrices") {
    const PrimeModulus& p = default_modulus();
    Matrix<Fp> id(2, 2, Fp(0, p));
    id(0, 0) = Fp(1, p);
    id(1, 1) = Fp(1, p);
    CHECK(rank_mod_p(id) == 2);

    const Matrix<Fp> zero(3, 5, Fp(0, p));
    CHECK(rank_mod_p(zero) == 0);
    CHECK(kernel_dimension(zero) == 5);

    Matrix<Fp> id5(5, 5, Fp(0, p));
    for (int i = 0; i < 5; ++i) id5(i, i) = Fp(3, p);
    CHECK(kernel_dimension(id5) == 0);
}

TEST_CASE("rank_exact on small integer matrices") {
    CHECK(rank_exact(Matrix<BigInt>(2, 2, {BigInt(2), BigInt(4), BigInt(1), BigInt(2)})) == 1);
    CHECK(rank_exact(Matrix<BigInt>(1, 1, {BigInt(7)})) == 1);
    CHECK(rank_exact(Matrix<BigInt>(3, 5, BigInt(0))) == 0);
    CHECK(kernel_dimension(Matrix<BigInt>(3, 5, BigInt(0))) == 5);

    // column gaps: equal columns force a skip mid-elimination
    const Matrix<BigInt> gap(3, 3,
                             {BigInt(1), BigInt(1), BigInt(1),
                              BigInt(1), BigInt(1), BigInt(2),
                              BigInt(1), BigInt(1), BigInt(3)});
    CHECK(rank_exact(gap) == 2);
}

TEST_CASE("cross-oracle agreement: 200 seeded random matrices") {
    // Entries in [-9,9] cannot make a minor divisible by p = 1000003 except
    // with negligible probability; any mismatch is an elimination bug.
    const PrimeModulus& p = default_modulus();
    Rng rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng.below(12);
        const std::size_t cols = 1 + rng.below(12);
        const auto pair = test::random_int_matrix(rows, cols, -9, 9, rng, p);
        const std::size_t exact = rank_exact(pair.exact);
        const std::size_t modular = rank_mod_p(pair.reduced);
        REQUIRE(exact == modular);
    }
}

TEST_CASE("rank invariances on seeded matrices") {
    const PrimeModulus& p = default_modulus();
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng.below(10);
        const std::size_t cols = 1 + rng.below(10);
        const auto pair = test::random_int_matrix(rows, cols, -20, 20, rng, p);

        const std::size_t r = rank_mod_p(pair.reduced);
        CHECK(rank_mod_p(pair.reduced.transpose()) == r);
        CHECK(rank_exact(pair.exact.transpose()) == rank_exact(pair.exact));
        CHECK(kernel_dimension(pair.reduced) + r == cols);

        // permute rows and columns: rank must not move
        Matrix<Fp> perm = pair.reduced;
        if (rows > 1) perm.swap_rows(0, rows - 1);
        Matrix<Fp> permc = perm.transpose();
        if (cols > 1) permc.swap_rows(0, cols - 1);
        CHECK(rank_mod_p(permc) == r);
    }
}

TEST_CASE("matrix dump prints canonical representatives") {
    const PrimeModulus p(7);
    Matrix<Fp> m(2, 2, Fp(0, p));
    m(0, 0) = Fp::from_int(-1, p); // canonical 6
    m(1, 1) = Fp(15, p);           // canonical 1
    CHECK(m.dump() == "6 0\n0 1\n");
}
