#include "doctest.h"
#include "test_util.hpp"
#include "z4forge/bincode.hpp"
#include "z4forge/gf2.hpp"

using namespace z4forge;

TEST_CASE("rref of identity is identity") {
    auto rr = rref(BitMatrix::identity(5));
    CHECK(rr.matrix == BitMatrix::identity(5));
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2, 3, 4});
}

TEST_CASE("rref collapses duplicate rows") {
    auto m = BitMatrix::from_strings({"11", "11"});
    auto rr = rref(m);
    CHECK(rr.matrix.rows() == 1);
    CHECK(rr.matrix.row(0).to_string() == "11");
    CHECK(rr.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref rank matches brute-force span size") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = testutil::random_matrix(rng, 10, 20);
        auto span = testutil::span_set(m);
        const std::size_t r = rank(m);
        CHECK(span.size() == std::size_t(1) << r);
    }
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = testutil::random_matrix(rng, 6, 13);
        auto once = rref(m);
        auto twice = rref(once.matrix);
        CHECK(once.matrix == twice.matrix);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("solve against the identity returns the target") {
    std::mt19937_64 rng(7);
    auto m = BitMatrix::identity(9);
    auto b = testutil::random_vector(rng, 9);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
}

TEST_CASE("solve combines two rows") {
    auto m = BitMatrix::from_strings({"110", "011"});
    auto x = solve(m, BitVector::from_string("101"));
    REQUIRE(x.has_value());
    CHECK(x->to_string() == "11");
}

TEST_CASE("solve recovers a known combination of RM(1,5) rows") {
    BinaryCode rm = rm15();
    const BitMatrix& g = rm.basis();
    BitVector word = g.row(0) ^ g.row(2) ^ g.row(5);
    auto x = solve(g, word);
    REQUIRE(x.has_value());
    CHECK(mul_left(*x, g) == word);
}

TEST_CASE("solve presence agrees with brute-force span membership") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = testutil::random_matrix(rng, 6, 12);
        auto span = testutil::span_set(m);
        for (int probe = 0; probe < 40; ++probe) {
            auto b = testutil::random_vector(rng, 12);
            auto x = solve(m, b);
            const bool in_span = span.count(b.words()) > 0;
            CHECK(x.has_value() == in_span);
            if (x) CHECK(mul_left(*x, m) == b);
        }
    }
}

TEST_CASE("nullspace of the identity is empty") {
    CHECK(nullspace_basis(BitMatrix::identity(6)).rows() == 0);
}

TEST_CASE("nullspace of a single all-ones pair") {
    auto ns = nullspace_basis(BitMatrix::from_strings({"11"}));
    REQUIRE(ns.rows() == 1);
    CHECK(ns.row(0).to_string() == "11");
}

TEST_CASE("nullspace of RM(1,5) has 26 rows, all orthogonal") {
    BinaryCode rm = rm15();
    auto ns = nullspace_basis(rm.basis());
    CHECK(ns.rows() == 26);
    for (std::size_t i = 0; i < ns.rows(); ++i)
        for (std::size_t j = 0; j < rm.dim(); ++j) CHECK_FALSE(ns.row(i).dot(rm.basis().row(j)));
}

TEST_CASE("rank-nullity and orthogonality on random matrices") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 24;
        auto m = testutil::random_matrix(rng, rows, cols);
        auto ns = nullspace_basis(m);
        CHECK(rank(m) + ns.rows() == cols);
        for (std::size_t i = 0; i < ns.rows(); ++i)
            for (std::size_t j = 0; j < rows; ++j) CHECK_FALSE(ns.row(i).dot(m.row(j)));
    }
}

TEST_CASE("empty matrices are legal") {
    BitMatrix m(0, 7);
    CHECK(rank(m) == 0);
    CHECK(nullspace_basis(m).rows() == 7);
    auto x = solve(m, BitVector(7));
    REQUIRE(x.has_value());
    CHECK(x->size() == 0);
}

TEST_CASE("bit vector support round trip and weight") {
    auto v = BitVector::from_support(70, {0, 3, 64, 69});
    CHECK(v.weight() == 4);
    CHECK(v.support() == std::vector<std::size_t>{0, 3, 64, 69});
    CHECK(v.leading_bit() == 0u);
    v.flip(0);
    v.flip(3);
    CHECK(v.leading_bit() == 64u);
}
