#pragma once

#include "symprod/ring.hpp"

#include <map>
#include <optional>
#include <vector>

namespace symprod {

/// One basis id (or the unit) per tensor factor.
using Slots = std::vector<BasisId>;

/// Bijection of {0..n-1}; images()[i] is sigma(i). Composition is right-to-left:
/// (s * t)(i) = s(t(i)).
class Permutation {
public:
    static Permutation identity(std::size_t n);
    /// Throws ArityMismatch unless `images` is a bijection of {0..n-1}.
    static Permutation from_images(std::vector<unsigned> images);
    static Permutation transposition(std::size_t n, unsigned i, unsigned j);
    /// All n! permutations in lexicographic order of their image lists.
    static std::vector<Permutation> all(std::size_t n);

    std::size_t size() const { return images_.size(); }
    unsigned operator()(unsigned i) const { return images_[i]; }
    const std::vector<unsigned>& images() const { return images_; }
    Permutation inverse() const;

    friend Permutation operator*(const Permutation& s, const Permutation& t);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<unsigned> images_;
};

/// Sparse rational combination of elementary tensors in the n-fold tensor power.
class TensorElement {
public:
    explicit TensorElement(std::size_t arity = 0) : arity_(arity) {}
    static TensorElement elementary(Slots slots, const Rational& coeff = 1);

    std::size_t arity() const { return arity_; }
    void add(const Slots& slots, const Rational& coeff);
    Rational coefficient(const Slots& slots) const;
    const std::map<Slots, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    TensorElement& operator*=(const Rational& scalar);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const Rational& s) { return a *= s; }
    friend TensorElement operator*(const Rational& s, TensorElement a) { return a *= s; }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    std::size_t arity_;
    std::map<Slots, Rational> terms_;
};

unsigned slots_degree(const RingPresentation& p, const Slots& slots);
std::optional<unsigned> homogeneous_degree(const RingPresentation& p, const TensorElement& t);

/// Multilinear expansion of f_1 (x) ... (x) f_n.
TensorElement tensor_of(const std::vector<RingElement>& factors);

/// Right action: (a_1 (x) ... (x) a_n) sigma = (+-) a_sigma(1) (x) ... (x) a_sigma(n),
/// with the Koszul sign of every pair of factors whose order is reversed.
TensorElement act(const RingPresentation& p, const Permutation& sigma, const TensorElement& t);

/// Slotwise product with sign (-1)^{sum_{i<j} |b_i||a_j|}.
TensorElement tensor_multiply(const RingPresentation& p, const TensorElement& s, const TensorElement& t);

/// Projection (1/n!) sum_sigma sigma^{-1}(t) onto the S_n-invariants.
TensorElement symmetrize(const RingPresentation& p, const TensorElement& t);

/// True when t is fixed by every adjacent transposition (hence by all of S_n).
bool is_invariant(const RingPresentation& p, const TensorElement& t);

/// Canonical representative of an S_n-orbit of elementary tensors: odd generators
/// ascending, then even generators ascending, then unit slots.
struct Arrangement {
    Slots slots;
    int sign = 1;               // slots_in = sign * (rearrangement of slots)
    bool repeated_odd = false;  // symmetrization of this orbit vanishes
};
Arrangement canonical_arrangement(const RingPresentation& p, const Slots& slots);

/// Sum over the distinct rearrangements u of `sorted` of sign(u) * u, where sign(u) is the
/// Koszul sign of reaching u from `sorted`. Requires no repeated odd generator.
TensorElement signed_orbit_sum(const RingPresentation& p, const Slots& sorted);

}  // namespace symprod
