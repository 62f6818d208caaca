// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include "symprod/bridge.hpp"
#include "symprod/errors.hpp"
#include "symprod/fixtures.hpp"
#include "symprod/macdonald.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace symprod;

namespace {

using Grid = std::vector<std::pair<unsigned, unsigned>>;
const Grid kSurfaceGrid = {{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}};

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& what)
{
    if (o.pass)
        o.detail = what;
    o.pass = false;
}

std::string gn(unsigned g, unsigned n) { return "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

Outcome betti_rank_agreement()
{
    Outcome o;
    for (auto [g, n] : kSurfaceGrid) {
        RingPresentation p = surface_ring(g);
        for (unsigned s = 0; s <= 2 * n; ++s) {
            Integer b = mac::betti(g, n, s);
            std::size_t q = mac::quotient_basis(g, n, s).size();
            std::size_t e = s == 0 ? 1 : enumerate_basis(p, n, s).size();
            if (Integer(q) != b || Integer(e) != b)
                fail(o, gn(g, n) + " s=" + std::to_string(s) + ": quotient " + std::to_string(q) + ", betti " +
                            to_string(b) + ", sym " + std::to_string(e));
        }
    }
    o.detail = o.pass ? "6 pairs, every degree 0..2n" : o.detail;
    return o;
}

Outcome torsion_freeness()
{
    Outcome o;
    for (auto [g, n] : kSurfaceGrid) {
        auto full = mac::generators(g, n, mac::Mode::full).polynomials;
        for (unsigned s = 0; s <= 2 * n + 3; ++s) {
            IntegerMatrix lat = mac::ideal_lattice(full, g, s);
            if (s <= 2 * n) {
                for (const Integer& d : smith(lat))
                    if (d != 0 && d != 1)
                        fail(o, gn(g, n) + " s=" + std::to_string(s) + ": Smith invariant " + to_string(d));
            } else {
                std::size_t dim = mac::monomials_of_degree(g, s).size();
                if (!(hermite_form(lat) == IntegerMatrix::identity(dim)))
                    fail(o, gn(g, n) + " s=" + std::to_string(s) + ": ideal is not all of E^s");
            }
        }
    }
    o.detail = o.pass ? "Smith invariants 1 for s<=2n; E^s=I^s for 2n+1<=s<=2n+3" : o.detail;
    return o;
}

Outcome minimal_presentations()
{
    Outcome o;
    std::ostringstream ranks;
    for (auto [g, n] : Grid{{2, 2}, {3, 2}, {3, 3}, {3, 4}}) {
        mac::MinimalityReport r = mac::verify_minimality(g, n);
        ranks << " " << gn(g, n) << " rank " << r.q0_rank;
        if (!r.applicable || !r.passed || Integer(r.q0_rank) != binomial(2 * g, n + 1))
            fail(o, gn(g, n) + " minimality failed");
        if ((n % 2 == 0) != r.extra_outside.has_value() || (r.extra_outside && !*r.extra_outside))
            fail(o, gn(g, n) + " even-case relation check failed");
    }
    o.detail = o.pass ? "q=0 ranks:" + ranks.str() : o.detail;
    return o;
}

Outcome stable_case()
{
    Outcome o;
    for (auto [g, n] : Grid{{1, 2}, {1, 3}, {2, 3}, {2, 4}}) {
        auto stable = mac::generators(g, n, mac::Mode::stable).polynomials;
        if (stable.size() != 1)
            fail(o, gn(g, n) + " stable set is not a single polynomial");
        auto eq = mac::ideals_equal_by_degree(stable, mac::generators(g, n, mac::Mode::full).polynomials, g, 2 * n);
        for (unsigned s = 0; s < eq.size(); ++s)
            if (!eq[s])
                fail(o, gn(g, n) + " ideals differ in degree " + std::to_string(s));
    }
    o.detail = o.pass ? "single-polynomial ideal = full ideal up to degree 2n" : o.detail;
    return o;
}

Outcome integrality()
{
    Outcome o;
    std::size_t tables = 0, violations = 0, constants = 0;
    auto run = [&](const std::string& name, const RingPresentation& p, unsigned n, unsigned top) {
        try {
            StructureTable t = structure_constants(p, n, top, {4, 0});
            ++tables;
            for (const auto& [ij, row] : t.products)
                constants += row.size();
        } catch (const TheoremViolation& e) {
            ++violations;
            fail(o, name + ": " + e.what());
        }
    };
    for (auto [g, n] : kSurfaceGrid)
        run("surface " + gn(g, n), surface_ring(g), n, 2 * n);
    for (unsigned n = 1; n <= 5; ++n) {
        run("S^2 n=" + std::to_string(n), sphere_ring(), n, 2 * n);
        for (unsigned k = 1; k <= 3; ++k)
            run("X^4_" + std::to_string(2 * k) + " n=" + std::to_string(n), hopf_ring(1, k), n, 4 * n);
    }
    if (o.pass)
        o.detail = std::to_string(tables) + " tables, " + std::to_string(constants) + " nonzero constants, " +
                   std::to_string(violations) + " violations";
    return o;
}

Outcome sphere_is_projective_space()
{
    Outcome o;
    RingPresentation p = sphere_ring();
    const BasisId u = *p.find("u");
    for (unsigned n = 1; n <= 5; ++n) {
        StructureTable t = structure_constants(p, n, 2 * n);
        SymCombination eta{{SymBasisIndex{{}, {{u, 1}}, n - 1}, 1}};
        SymCombination power = eta;
        for (unsigned k = 2; k <= n; ++k) {
            power = t.multiply(power, eta);
            SymCombination expected{{SymBasisIndex{{}, {{u, k}}, n - k}, 1}};
            if (power != expected)
                fail(o, "n=" + std::to_string(n) + ": eta^" + std::to_string(k) + " is not the degree-" +
                            std::to_string(2 * k) + " basis element");
        }
        if (!enumerate_basis(p, n, 2 * n + 2).empty())
            fail(o, "n=" + std::to_string(n) + ": basis above degree 2n");
        if (t.basis.size() != n)
            fail(o, "n=" + std::to_string(n) + ": basis size " + std::to_string(t.basis.size()));
    }
    o.detail = o.pass ? "eta^p = basis element of degree 2p, p<=n<=5" : o.detail;
    return o;
}

Outcome bridge_isomorphism()
{
    Outcome o;
    for (auto [g, n] : kSurfaceGrid) {
        BridgeReport r = check_isomorphism(g, n, Route::direct, {0, 4, 16, 1});
        if (r.verdict != "isomorphism")
            fail(o, gn(g, n) + " verdict " + r.verdict);
        for (const auto& b : r.blocks)
            if (!b.square || !b.unimodular)
                fail(o, gn(g, n) + " degree " + std::to_string(b.degree) + " not unimodular");
        if (g == 1 && n == 2) {
            const DegreeBlock& b = r.blocks.at(2);
            IntegerMatrix want{{1, 0}, {1, 1}};
            IntegerMatrix swapped{{1, 1}, {0, 1}};
            IntegerMatrix flipped{{0, 1}, {1, 1}};
            IntegerMatrix both{{1, 1}, {1, 0}};
            if (!(b.matrix == want || b.matrix == swapped || b.matrix == flipped || b.matrix == both))
                fail(o, "(1,2) degree-2 matrix is " + to_string(b.matrix));
        }
    }
    o.detail = o.pass ? "all degrees unimodular; (1,2) degree 2 = [[1,0],[1,1]]" : o.detail;
    return o;
}

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

Outcome algebraic_properties()
{
    Outcome o;
    RingPresentation t = surface_ring(1);
    std::size_t checks = 0;

    // Group law and multiply-equivariance, n <= 4, all elementary tensors over the torus.
    for (std::size_t n = 1; n <= 4; ++n) {
        auto perms = Permutation::all(n);
        auto slots = all_slots(t, n);
        for (const Slots& a : slots) {
            TensorElement u = TensorElement::elementary(a);
            for (const auto& s : perms) {
                TensorElement us = act(t, s, u);
                for (const auto& r : perms) {
                    ++checks;
                    if (act(t, r, us) != act(t, s * r, u))
                        fail(o, "group law fails at n=" + std::to_string(n));
                }
            }
            if (symmetrize(t, symmetrize(t, u)) != symmetrize(t, u))
                fail(o, "symmetrize is not idempotent");
        }
        for (const Slots& a : slots)
            for (const Slots& b : slots) {
                TensorElement u = TensorElement::elementary(a), v = TensorElement::elementary(b);
                TensorElement uv = tensor_multiply(t, u, v);
                for (const auto& s : perms) {
                    ++checks;
                    if (act(t, s, uv) != tensor_multiply(t, act(t, s, u), act(t, s, v)))
                        fail(o, "equivariance fails at n=" + std::to_string(n));
                }
            }
    }

    // Duality pairing, exhaustive over basis pairs.
    for (auto [g, n] : Grid{{1, 3}, {2, 2}, {2, 3}}) {
        RingPresentation p = surface_ring(g);
        auto basis = enumerate_basis(p, n);
        for (const auto& i : basis) {
            TensorElement ri = realize(p, i);
            for (const auto& j : basis) {
                ++checks;
                Rational v = pair(p, ri, dual_element(p, j));
                bool ok = i == j ? (v == 1 || v == -1) : v == 0;
                if (!ok)
                    fail(o, "pairing " + to_string(p, i) + " vs " + to_string(p, j) + " = " + to_string(v));
            }
        }
    }

    // chi-recursion instances through the structure table of Sym^4 of the Sullivan ring.
    RingPresentation s = sullivan_ring(2);
    const std::size_t n = 4;
    StructureTable table = structure_constants(s, n, 8, {4, 0});
    auto e = [](BasisId id) { return RingElement::basis(id); };
    auto via_table = [&](const TensorElement& a, const TensorElement& b) {
        return table.multiply(expand(s, a), expand(s, b));
    };
    const BasisId a1 = *s.find("a1"), a2 = *s.find("a2"), a3 = *s.find("a3");
    const BasisId c1 = *s.find("c1"), c2 = *s.find("c2"), c3 = *s.find("c3");
    // chi(a1 | c1) chi(a2 | ) = chi( | a1 a2, c1) + chi(a1, c1 a2 | ) + chi(a1, a2 | c1)
    {
        TensorElement rhs = chi(s, n, {}, {multiply(s, e(a1), e(a2)), e(c1)}) +
                            chi(s, n, {e(a1), multiply(s, e(c1), e(a2))}, {}) + chi(s, n, {e(a1), e(a2)}, {e(c1)});
        ++checks;
        if (via_table(chi(s, n, {e(a1)}, {e(c1)}), chi(s, n, {e(a2)}, {})) != expand(s, rhs))
            fail(o, "chi recursion odd-factor instance");
    }
    // chi(a1, a3 | c2) chi( | c3) = chi(a1 c3, a3 | c2) + chi(a1, a3 c3 | c2) + chi(a1, a3 | c2 c3) + chi(a1, a3 | c2, c3)
    {
        TensorElement rhs = chi(s, n, {multiply(s, e(a1), e(c3)), e(a3)}, {e(c2)}) +
                            chi(s, n, {e(a1), multiply(s, e(a3), e(c3))}, {e(c2)}) +
                            chi(s, n, {e(a1), e(a3)}, {multiply(s, e(c2), e(c3))}) +
                            chi(s, n, {e(a1), e(a3)}, {e(c2), e(c3)});
        ++checks;
        if (via_table(chi(s, n, {e(a1), e(a3)}, {e(c2)}), chi(s, n, {}, {e(c3)})) != expand(s, rhs))
            fail(o, "chi recursion even-factor instance");
    }
    // chi( | c1, c2) chi(a3 | ) = chi(c1 a3 | c2) + chi(c2 a3 | c1) + chi(a3 | c1, c2)
    {
        TensorElement rhs = chi(s, n, {multiply(s, e(c1), e(a3))}, {e(c2)}) +
                            chi(s, n, {multiply(s, e(c2), e(a3))}, {e(c1)}) + chi(s, n, {e(a3)}, {e(c1), e(c2)});
        ++checks;
        if (via_table(chi(s, n, {}, {e(c1), e(c2)}), chi(s, n, {e(a3)}, {})) != expand(s, rhs))
            fail(o, "chi recursion pure-even instance");
    }
    if (o.pass)
        o.detail = std::to_string(checks) + " exact checks";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 Betti/rank agreement", betti_rank_agreement},
        {"2 Torsion-freeness", torsion_freeness},
        {"3 Minimal presentations", minimal_presentations},
        {"4 Stable case", stable_case},
        {"5 Integrality", integrality},
        {"6 Sym^n S^2 = CP^n", sphere_is_projective_space},
        {"7 Bridge isomorphism", bridge_isomorphism},
        {"8 Algebraic property suites", algebraic_properties},
    };
    bool all = true;
    for (const auto& [name, check] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << o.detail << "] ("
                  << static_cast<int>(secs * 1000) << " ms)" << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
