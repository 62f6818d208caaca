#pragma once

#include "symprod/tensor.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symprod {

/// Combinatorial datum of an additive basis element of H*(Sym^n X; Z)/Tor:
/// distinct odd generators, even generators with multiplicities, and `pad` unit slots.
/// The index with no odd and no even part is the unit of the ring.
struct SymBasisIndex {
    std::vector<BasisId> odd;                        // strictly increasing
    std::vector<std::pair<BasisId, unsigned>> even;  // strictly increasing ids, multiplicity >= 1
    unsigned pad = 0;

    static SymBasisIndex unit(std::size_t n) { return {{}, {}, static_cast<unsigned>(n)}; }

    bool is_unit() const { return odd.empty() && even.empty(); }
    std::size_t arity() const;
    /// The sorted elementary tensor alpha_{i_1} (x) ... (x) beta_{j_1}^{m_1} ... (x) 1 ... 1.
    Slots leading_slots() const;
    /// m_1! ... m_l!, the coefficient of the leading tensor in realize().
    Integer multiplicity_factorial() const;

    friend auto operator<=>(const SymBasisIndex&, const SymBasisIndex&) = default;
    friend bool operator==(const SymBasisIndex&, const SymBasisIndex&) = default;
};

unsigned degree(const RingPresentation& p, const SymBasisIndex& idx);
/// Throws MalformedElement when idx is not a valid datum over (p, n).
void check_index(const RingPresentation& p, std::size_t n, const SymBasisIndex& idx);
/// Reads the datum off a canonical arrangement (see canonical_arrangement).
SymBasisIndex index_of_arrangement(const RingPresentation& p, const Slots& sorted);
std::string to_string(const RingPresentation& p, const SymBasisIndex& idx);

/// Basis indices with k + l >= 1, ordered by (degree, odd, even, pad).
/// `degree` selects one degree; `max_degree` bounds all of them.
std::vector<SymBasisIndex> enumerate_basis(const RingPresentation& p, std::size_t n,
                                           std::optional<unsigned> degree = std::nullopt,
                                           std::optional<unsigned> max_degree = std::nullopt);

TensorElement realize(const RingPresentation& p, const SymBasisIndex& idx);

/// chi(xi_1..xi_k | eta_1..eta_s) = 1/(n-k-s)! sum_sigma sigma^{-1}(xi (x) eta (x) 1 ... 1),
/// extended multilinearly to arbitrary ring elements.
TensorElement chi(const RingPresentation& p, std::size_t n, const std::vector<RingElement>& odd,
                  const std::vector<RingElement>& even);

/// Homology element coeff * (a^{i_1} (x) ... (x) b^{j}... (x) [pt]...). Slots use the ids of the
/// cohomology classes the dual classes pair with (the unit id stands for the point class).
struct DualElement {
    Rational coeff;
    Slots slots;
};

DualElement dual_element(const RingPresentation& p, const SymBasisIndex& idx);
/// Kronecker pairing <a_1 (x) ... (x) a_n, c_1 (x) ... (x) c_n> =
/// (-1)^{sum_{i<j} |c_i||a_j|} prod <a_i, c_i>.
Rational pair(const RingPresentation& p, const TensorElement& t, const DualElement& c);
Rational pair(const RingPresentation& p, const SymBasisIndex& idx, const DualElement& c);

using SymCombination = std::map<SymBasisIndex, Rational>;

/// Coordinates of an invariant tensor in the basis, by eliminating one orbit at a time.
/// Throws NotSymmetric for non-invariant input and InternalInconsistency when a residual
/// survives an invariant input.
SymCombination expand(const RingPresentation& p, const TensorElement& t);
/// Same coordinates computed by pairing against the dual elements.
SymCombination expand_by_pairing(const RingPresentation& p, const TensorElement& t);
TensorElement evaluate(const RingPresentation& p, std::size_t n, const SymCombination& combo);

struct ComputeOptions {
    unsigned jobs = 1;
    std::size_t max_tensor_terms = 0;  // 0 = unbounded
};

/// Integer multiplication table nu^k_{ij} of the basis up to a degree bound.
struct StructureTable {
    std::size_t n = 0;
    unsigned max_degree = 0;
    std::vector<SymBasisIndex> basis;
    /// products[{i, j}] lists (k, nu^k_{ij}) with nonzero nu; present for every pair with
    /// degree(i) + degree(j) <= max_degree.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Integer>>> products;

    std::optional<std::size_t> position(const SymBasisIndex& idx) const;
    /// Product of two combinations through the table (the unit index acts as identity).
    /// Throws std::out_of_range when a needed pair exceeds max_degree.
    SymCombination multiply(const SymCombination& a, const SymCombination& b) const;

    friend bool operator==(const StructureTable&, const StructureTable&) = default;
};

/// Throws TheoremViolation if any nu is not an integer.
StructureTable structure_constants(const RingPresentation& p, std::size_t n, unsigned up_to_degree,
                                   const ComputeOptions& options = {});

}  // namespace symprod
