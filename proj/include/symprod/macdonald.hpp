#pragma once

#include "symprod/lattice.hpp"
#include "symprod/numeric.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symprod::mac {

/// x_S x'_T y^q in E_{g,n} = Lambda<x_1..x_g, x'_1..x'_g> (x) Z[y], written in the fixed
/// variable order x_1 < ... < x_g < x'_1 < ... < x'_g < y. Bit i-1 of `x` (resp. `xp`)
/// marks x_i (resp. x'_i).
struct Monomial {
    std::uint32_t x = 0;
    std::uint32_t xp = 0;
    unsigned q = 0;

    static Monomial y_power(unsigned q) { return {0, 0, q}; }

    unsigned exterior_degree() const { return static_cast<unsigned>(std::popcount(x) + std::popcount(xp)); }
    unsigned degree() const { return exterior_degree() + 2 * q; }
    unsigned a() const { return static_cast<unsigned>(std::popcount(x & ~xp)); }
    unsigned b() const { return static_cast<unsigned>(std::popcount(xp & ~x)); }
    unsigned c() const { return static_cast<unsigned>(std::popcount(x & xp)); }
    /// a + b + 2c + q
    unsigned weight() const { return exterior_degree() + q; }
    /// Largest variable index used (0 for a power of y).
    unsigned max_index() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Product of monomials: sign in {-1, 0, 1} (0 when an exterior variable repeats).
int multiply(const Monomial& l, const Monomial& r, Monomial& out);

class Polynomial {
public:
    Polynomial() = default;
    static Polynomial monomial(const Monomial& m, const Integer& coeff = 1);

    void add(const Monomial& m, const Integer& coeff);
    Integer coefficient(const Monomial& m) const;
    const std::map<Monomial, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<unsigned> homogeneous_degree() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Integer& scalar);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::map<Monomial, Integer> terms_;
};

std::string to_string(const Monomial& m);
/// Terms like "+3*x1.x'2.y^4" separated by spaces; "0" for the zero polynomial.
std::string to_string(const Polynomial& f);
/// Inverse of to_string. Factors may come in any order (the reordering sign is applied);
/// a repeated exterior variable is rejected. Throws ParseError with a character offset.
Polynomial parse_polynomial(std::string_view text);

/// S(P) = x_A x'_B (y - x_k1 x'_k1)...(y - x_kc x'_kc) y^q with A = S\T, B = T\S, K = S & T.
Polynomial s_of_p(const Monomial& p);

enum class Mode { full, stable, minimal_odd, minimal_even };
std::string to_string(Mode mode);
/// Accepts "full", "stable", "minimal_odd", "minimal_even" and "minimal" (parity of n decides).
Mode parse_mode(std::string_view text, unsigned n);

struct GeneratorSet {
    Mode mode = Mode::full;
    unsigned g = 0;
    unsigned n = 0;
    std::vector<Polynomial> polynomials;
};

/// Throws InvalidMode when the mode does not apply to (g, n).
GeneratorSet generators(unsigned g, unsigned n, Mode mode);

/// Monomials P with w(P) = n + 1, the index set of the full generating family.
std::vector<Monomial> weight_monomials(unsigned g, unsigned weight);

/// Canonical representative modulo the ideal, by rewriting the heaviest monomial first.
/// Throws MalformedElement for non-homogeneous input or variables beyond g.
Polynomial normal_form(const Polynomial& f, unsigned g, unsigned n);
Polynomial multiply_nf(const Polynomial& f, const Polynomial& h, unsigned g, unsigned n);

/// B_k = B_{2n-k} = C(2g,k) + C(2g,k-2) + ...; throws std::out_of_range for k > 2n.
Integer betti(unsigned g, unsigned n, unsigned k);

std::vector<Monomial> monomials_of_degree(unsigned g, unsigned s);
/// Monomials of degree s and weight <= n: the support of normal forms in degree s.
std::vector<Monomial> quotient_basis(unsigned g, unsigned n, unsigned s);

/// Coordinates of f in the given monomial basis. Throws DimensionMismatch when f has
/// support outside it.
IntegerVector coordinates(const Polynomial& f, const std::vector<Monomial>& basis);

/// Z-span of {m * r : r in generators, deg m = s - deg r} in the monomial basis of E^s.
IntegerMatrix ideal_lattice(const std::vector<Polynomial>& generators, unsigned g, unsigned s);

struct DegreeTorsion {
    unsigned degree = 0;
    std::size_t ambient_rank = 0;  // dim E^s
    std::size_t ideal_rank = 0;
    std::vector<Integer> invariants;  // nonzero Smith invariants of the ideal lattice
    bool torsion_free = true;
};

/// Smith invariants of the full ideal in each degree 0..max_degree.
std::vector<DegreeTorsion> torsion_check(unsigned g, unsigned n, unsigned max_degree);

struct MinimalityReport {
    unsigned g = 0;
    unsigned n = 0;
    bool applicable = false;  // 2 <= n <= 2g-2
    std::string note;         // redirect message when not applicable
    std::size_t q0_count = 0;
    std::size_t q0_rank = 0;
    Integer expected_q0;                 // C(2g, n+1)
    std::optional<bool> extra_outside;   // even n: P_{1..n/2} is not in I<q=0>
    std::vector<bool> equal_by_degree;   // index s: minimal and full ideals agree in degree s
    bool passed = false;
};

MinimalityReport verify_minimality(unsigned g, unsigned n);

/// Degree-by-degree lattice equality of the ideals spanned by two generator sets, s = 0..max_degree.
std::vector<bool> ideals_equal_by_degree(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                         unsigned g, unsigned max_degree);

}  // namespace symprod::mac
