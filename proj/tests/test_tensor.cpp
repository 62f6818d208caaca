#include "oracles.hpp"

#include "symprod/bridge.hpp"
#include "symprod/errors.hpp"
#include "symprod/fixtures.hpp"

#include <doctest.h>

using namespace symprod;

namespace {

std::vector<Slots> all_slots(const RingPresentation& p, std::size_t n)
{
    std::vector<Slots> out;
    Slots s(n, 0);
    for (;;) {
        out.push_back(s);
        std::size_t k = 0;
        while (k < n && ++s[k] == p.basis_size())
            s[k++] = 0;
        if (k == n)
            return out;
    }
}

}  // namespace

TEST_SUITE("tensor_algebra")
{
    TEST_CASE("permutations")
    {
        Permutation s = Permutation::from_images({1, 2, 0});
        CHECK(s * s.inverse() == Permutation::identity(3));
        CHECK((s * s)(0) == 2);
        CHECK(Permutation::all(4).size() == 24);
        CHECK(Permutation::transposition(3, 0, 2).images() == std::vector<unsigned>{2, 1, 0});
        CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), ArityMismatch);
        CHECK_THROWS_AS(Permutation::from_images({0, 3}), ArityMismatch);
    }

    TEST_CASE("act examples")
    {
        RingPresentation t = surface_ring(1);
        Permutation swap = Permutation::transposition(2, 0, 1);
        TensorElement a12 = TensorElement::elementary({1, 2});
        CHECK(act(t, swap, a12) == TensorElement::elementary({2, 1}, -1));
        CHECK(act(t, Permutation::identity(2), a12) == a12);
        CHECK(act(t, swap, TensorElement::elementary({3, 0})) == TensorElement::elementary({0, 3}));
        CHECK_THROWS_AS(act(t, Permutation::identity(3), a12), ArityMismatch);
    }

    TEST_CASE("act agrees with adjacent-swap sign oracle")
    {
        RingPresentation p = sullivan_ring(1);
        for (std::size_t n = 1; n <= 4; ++n)
            for (const Permutation& s : Permutation::all(n))
                for (const Slots& slots : {Slots{1, 2, 3, 4}, Slots{4, 1, 0, 2}, Slots{7, 1, 5, 3}}) {
                    TensorElement e = TensorElement::elementary(Slots(slots.begin(), slots.begin() + n));
                    CHECK(act(p, s, e) == oracle::act(p, s, e));
                }
    }

    TEST_CASE("right action group law, exhaustive for n <= 3 on the torus")
    {
        RingPresentation p = surface_ring(1);
        for (std::size_t n = 1; n <= 3; ++n) {
            auto perms = Permutation::all(n);
            for (const Slots& slots : all_slots(p, n)) {
                TensorElement t = TensorElement::elementary(slots);
                for (const auto& s : perms)
                    for (const auto& u : perms)
                        REQUIRE(act(p, u, act(p, s, t)) == act(p, s * u, t));
            }
        }
    }

    TEST_CASE("tensor_multiply examples")
    {
        RingPresentation t = surface_ring(1);
        CHECK(tensor_multiply(t, TensorElement::elementary({1, 0}), TensorElement::elementary({0, 3})) ==
              TensorElement::elementary({1, 3}));
        CHECK(tensor_multiply(t, TensorElement::elementary({0, 1}), TensorElement::elementary({2, 0})) ==
              TensorElement::elementary({2, 1}, -1));
        RingPresentation s = sphere_ring();
        TensorElement eta = TensorElement::elementary({1, 0}) + TensorElement::elementary({0, 1});
        CHECK(tensor_multiply(s, eta, eta) == TensorElement::elementary({1, 1}, 2));
        CHECK_THROWS_AS(tensor_multiply(t, TensorElement(2), TensorElement(3)), ArityMismatch);
    }

    TEST_CASE("tensor_multiply agrees with the interleaving oracle")
    {
        RingPresentation p = sullivan_ring(2);
        auto slots = all_slots(p, 2);
        for (const Slots& a : slots)
            for (const Slots& b : slots) {
                TensorElement u = TensorElement::elementary(a, 3), v = TensorElement::elementary(b, -2);
                REQUIRE(tensor_multiply(p, u, v) == oracle::multiply(p, u, v));
            }
    }

    TEST_CASE("equivariance and graded commutativity of tensor_multiply")
    {
        RingPresentation p = surface_ring(1);
        const std::size_t n = 3;
        auto slots = all_slots(p, n);
        auto perms = Permutation::all(n);
        for (std::size_t i = 0; i < slots.size(); i += 3)
            for (std::size_t j = 0; j < slots.size(); j += 5) {
                TensorElement u = TensorElement::elementary(slots[i]), v = TensorElement::elementary(slots[j]);
                for (const auto& s : perms)
                    REQUIRE(act(p, s, tensor_multiply(p, u, v)) ==
                            tensor_multiply(p, act(p, s, u), act(p, s, v)));
                TensorElement uv = tensor_multiply(p, u, v), vu = tensor_multiply(p, v, u);
                if (slots_degree(p, slots[i]) % 2 && slots_degree(p, slots[j]) % 2)
                    vu *= -1;
                REQUIRE(uv == vu);
            }
    }

    TEST_CASE("symmetrize examples")
    {
        RingPresentation t = surface_ring(1);
        TensorElement half = (TensorElement::elementary({3, 0}) + TensorElement::elementary({0, 3})) * Rational(1, 2);
        CHECK(symmetrize(t, TensorElement::elementary({3, 0})) == half);
        CHECK(symmetrize(t, TensorElement::elementary({1, 1})).is_zero());
        CHECK(symmetrize(t, half) == half);
    }

    TEST_CASE("symmetrize matches the n! average and is idempotent")
    {
        for (const RingPresentation& p : {surface_ring(1), sullivan_ring(1)})
            for (std::size_t n = 1; n <= 4; ++n) {
                auto slots = all_slots(p, n);
                std::size_t step = n == 4 ? 97 : 1;
                for (std::size_t i = 0; i < slots.size(); i += step) {
                    TensorElement t = TensorElement::elementary(slots[i], 5);
                    TensorElement s = symmetrize(p, t);
                    REQUIRE(s == oracle::symmetrize(p, t));
                    REQUIRE(symmetrize(p, s) == s);
                    REQUIRE(is_invariant(p, s));
                }
            }
    }

    TEST_CASE("is_invariant detects asymmetric input")
    {
        RingPresentation t = surface_ring(1);
        CHECK_FALSE(is_invariant(t, TensorElement::elementary({3, 0})));
        CHECK(is_invariant(t, TensorElement::elementary({3, 3})));
        CHECK(is_invariant(t, TensorElement::elementary({1, 2}) - TensorElement::elementary({2, 1})));
    }

    TEST_CASE("canonical arrangement and orbit sums")
    {
        RingPresentation t = surface_ring(1);
        Arrangement a = canonical_arrangement(t, {0, 2, 3, 1});
        CHECK(a.slots == Slots{1, 2, 3, 0});
        CHECK(a.sign == -1);
        CHECK_FALSE(a.repeated_odd);
        CHECK(canonical_arrangement(t, {1, 0, 1}).repeated_odd);
        // Every rearrangement u of the sorted tensor appears with coefficient sign(u).
        TensorElement orbit = signed_orbit_sum(t, {1, 2, 3, 0});
        CHECK(orbit.terms().size() == 24);
        for (const auto& [slots, c] : orbit.terms()) {
            Arrangement back = canonical_arrangement(t, slots);
            CHECK(back.slots == Slots{1, 2, 3, 0});
            CHECK(c == back.sign);
        }
    }
}
