#include "oracles.hpp"

#include "symprod/errors.hpp"

#include <doctest.h>

#include <random>

using namespace symprod;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    std::uniform_int_distribution<int> zero(0, 3);
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = zero(rng) == 0 ? 0 : d(rng);
    return m;
}

// Row HNF shape: positive pivots moving strictly right, zeros below and left, entries
// above each pivot in [0, pivot), zero rows last.
bool is_hermite(const IntegerMatrix& h)
{
    std::size_t last = 0;
    bool seen_zero = false, first = true;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t c = 0;
        while (c < h.cols() && h(i, c) == 0)
            ++c;
        if (c == h.cols()) {
            seen_zero = true;
            continue;
        }
        if (seen_zero || h(i, c) <= 0 || (!first && c <= last))
            return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h(k, c) < 0 || h(k, c) >= h(i, c))
                return false;
        last = c;
        first = false;
    }
    return true;
}

}  // namespace

TEST_SUITE("lattice")
{
    TEST_CASE("hermite examples")
    {
        auto id = IntegerMatrix::identity(3);
        HermiteResult r = hermite(id);
        CHECK(r.H == id);
        CHECK(r.U == id);
        CHECK(hermite(IntegerMatrix{{2, 1}, {0, 1}}).H == IntegerMatrix{{2, 0}, {0, 1}});
        IntegerMatrix zero(2, 3);
        CHECK(hermite(zero).H == zero);
        CHECK(hermite_form(zero).rows() == 0);
    }

    TEST_CASE("smith examples")
    {
        CHECK(smith(IntegerMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
        CHECK(smith(IntegerMatrix::identity(3)) == std::vector<Integer>{1, 1, 1});
        CHECK(smith(IntegerMatrix{{2, 0}, {0, 2}}) == std::vector<Integer>{2, 2});
        CHECK(smith(IntegerMatrix{{1, 2, 3}, {2, 4, 6}}) == std::vector<Integer>{1, 0});
    }

    TEST_CASE("membership, equality, unimodularity")
    {
        CHECK(lattice_membership({2, 0}, IntegerMatrix{{1, 0}}));
        CHECK_FALSE(lattice_membership({1, 0}, IntegerMatrix{{2, 0}}));
        CHECK(is_unimodular(IntegerMatrix{{1, 0}, {1, 1}}));
        CHECK_FALSE(is_unimodular(IntegerMatrix{{2, 0}, {0, 1}}));
        CHECK_FALSE(is_unimodular(IntegerMatrix{{1, 0, 0}, {0, 1, 0}}));
        CHECK(lattice_equal(IntegerMatrix{{1, 1}, {0, 1}}, IntegerMatrix{{1, 0}, {0, 1}, {3, 4}}));
        CHECK_FALSE(lattice_equal(IntegerMatrix{{2, 0}}, IntegerMatrix{{1, 0}}));
        CHECK_THROWS_AS(lattice_membership({1, 2, 3}, IntegerMatrix{{1, 0}}), DimensionMismatch);
        CHECK_THROWS_AS(lattice_equal(IntegerMatrix{{1}}, IntegerMatrix{{1, 0}}), DimensionMismatch);
        CHECK_THROWS_AS((IntegerMatrix{{1}} * IntegerMatrix{{1, 0}, {0, 1}}), DimensionMismatch);
    }

    TEST_CASE("random matrices: HNF properties and agreement with independent oracles")
    {
        std::mt19937_64 rng(20260415);
        for (int trial = 0; trial < 300; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            IntegerMatrix m = random_matrix(rng, r, c, trial < 150 ? 4 : 40);
            HermiteResult h = hermite(m);
            CAPTURE(to_string(m));
            REQUIRE(h.U * m == h.H);
            REQUIRE(is_hermite(h.H));
            Integer det = oracle::determinant(h.U);
            REQUIRE((det == 1 || det == -1));

            IntegerMatrix hf = hermite_form(m);
            std::size_t rk = oracle::rational_rank(m);
            REQUIRE(hf.rows() == rk);
            REQUIRE(rank(m) == rk);
            for (std::size_t i = 0; i < hf.rows(); ++i)
                for (std::size_t j = 0; j < hf.cols(); ++j)
                    REQUIRE(hf(i, j) == h.H(i, j));

            // Row spaces agree, membership both ways.
            for (std::size_t i = 0; i < m.rows(); ++i)
                REQUIRE(lattice_membership(m.row(i), h.H));
            for (std::size_t i = 0; i < h.H.rows(); ++i)
                REQUIRE(lattice_membership(h.H.row(i), m));

            if (r <= 4 && c <= 4)
                REQUIRE(smith(m) == oracle::smith(m));
            if (r == c)
                REQUIRE(is_unimodular(m) == (abs(oracle::determinant(m)) == 1));
        }
    }

    TEST_CASE("smith invariants are preserved by unimodular transformations")
    {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            IntegerMatrix m = random_matrix(rng, 4, 5, 6);
            IntegerMatrix u = IntegerMatrix::identity(4);
            for (int k = 0; k < 6; ++k) {
                std::size_t i = rng() % 4, j = rng() % 4;
                if (i == j)
                    continue;
                long f = static_cast<long>(rng() % 5) - 2;
                for (std::size_t c = 0; c < 4; ++c)
                    u(i, c) += f * u(j, c);
            }
            std::vector<Integer> s = smith(m);
            CHECK(smith(u * m) == s);
            for (std::size_t i = 1; i < s.size(); ++i)
                if (s[i] != 0)
                    CHECK(s[i] % s[i - 1] == 0);
        }
    }

    TEST_CASE("big entries")
    {
        IntegerMatrix m{{1, 0}, {0, 1}};
        m(0, 0) = Integer("1000000000000000000000007");
        m(0, 1) = Integer("999999999999999999999999");
        m(1, 0) = Integer("3");
        m(1, 1) = Integer("3");
        // det = 3 * (10^24 + 7 - (10^24 - 1)) = 24
        CHECK(oracle::determinant(m) == 24);
        auto s = smith(m);
        CHECK(s[0] * s[1] == 24);
        CHECK(s == oracle::smith(m));
    }
}
