#pragma once

#include "symprod/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symprod {

/// Position of a basis element inside a RingPresentation. Id 0 is the unit;
/// generators occupy 1..generator_count() in canonical order (odd classes first,
/// each parity class sorted by degree, ties kept in declaration order).
using BasisId = std::uint16_t;
inline constexpr BasisId kUnit = 0;

struct Generator {
    std::string name;
    unsigned degree = 1;

    bool odd() const { return degree % 2 == 1; }
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Sparse rational combination of basis elements (unit included).
class RingElement {
public:
    RingElement() = default;
    static RingElement basis(BasisId id, const Rational& coeff = 1);

    void add(BasisId id, const Rational& coeff);
    Rational coefficient(BasisId id) const;
    const std::map<BasisId, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const Rational& scalar);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const Rational& s) { return a *= s; }
    friend RingElement operator*(const Rational& s, RingElement a) { return a *= s; }
    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    std::map<BasisId, Rational> terms_;
};

bool is_integral(const RingElement& a);

class RingPresentation {
public:
    std::size_t generator_count() const { return generators_.size(); }
    /// Number of basis elements including the unit.
    std::size_t basis_size() const { return generators_.size() + 1; }
    const Generator& generator(BasisId id) const;
    unsigned degree(BasisId id) const { return id == kUnit ? 0 : generator(id).degree; }
    bool odd(BasisId id) const { return degree(id) % 2 == 1; }
    std::string name(BasisId id) const { return id == kUnit ? std::string("1") : generator(id).name; }
    std::optional<BasisId> find(std::string_view name) const;

    /// Odd generators are alpha_1, alpha_2, ... and even ones beta_1, beta_2, ... (1-based).
    std::vector<BasisId> odd_generators() const;
    std::vector<BasisId> even_generators() const;
    unsigned parity_rank(BasisId id) const;
    BasisId odd_generator(unsigned rank) const;
    BasisId even_generator(unsigned rank) const;

    /// Product of two basis elements as stored in the table (unit products implied).
    const RingElement& product(BasisId a, BasisId b) const;

    std::optional<unsigned> homogeneous_degree(const RingElement& a) const;

    friend bool operator==(const RingPresentation&, const RingPresentation&) = default;

private:
    friend class RingBuilder;
    std::vector<Generator> generators_;
    std::vector<RingElement> table_;  // basis_size() x basis_size(), row-major
    std::vector<BasisId> odd_;
    std::vector<BasisId> even_;
};

/// Collects generators and products by name; build() fixes the canonical order.
class RingBuilder {
public:
    RingBuilder& add_generator(std::string name, unsigned degree);
    RingBuilder& set_product(std::string_view left, std::string_view right,
                             std::vector<std::pair<std::string, Integer>> result);
    RingPresentation build() const;

private:
    struct Entry {
        std::string left, right;
        std::vector<std::pair<std::string, Integer>> result;
    };
    std::vector<Generator> generators_;
    std::vector<Entry> products_;
};

struct ValidationReport {
    bool ok = true;
    std::string invariant;         // empty when ok
    std::vector<BasisId> witness;  // generator pair or triple
    std::string message;
};

ValidationReport validate(const RingPresentation& p);

/// Bilinear extension of the structure-constant table. Throws MalformedElement when
/// either argument references an id outside the presentation.
RingElement multiply(const RingPresentation& p, const RingElement& a, const RingElement& b);

}  // namespace symprod
