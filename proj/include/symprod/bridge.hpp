#pragma once

#include "symprod/lattice.hpp"
#include "symprod/macdonald.hpp"
#include "symprod/sym.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symprod {

/// H*(M_g): alpha_1..alpha_2g in degree 1, beta in degree 2,
/// alpha_i alpha_{i+g} = beta = -alpha_{i+g} alpha_i, all other products zero.
RingPresentation surface_ring(unsigned g);

/// How images of monomials are multiplied out: tensors slot by slot, or through the
/// integral structure table of the symmetric product.
enum class Route { direct, table };
std::string to_string(Route r);
Route parse_route(std::string_view text);

/// f: x_i -> xi_i = chi(alpha_i), x'_i -> xi'_i = chi(alpha_{i+g}), y -> eta = chi(beta).
class SurfaceMap {
public:
    SurfaceMap(unsigned g, std::size_t n, Route route = Route::direct, std::size_t max_tensor_terms = 0);

    unsigned g() const { return g_; }
    std::size_t n() const { return n_; }
    const RingPresentation& ring() const { return ring_; }

    SymCombination image(const mac::Monomial& m);
    SymCombination image(const mac::Polynomial& f);
    /// The same image as an invariant tensor (direct route only).
    TensorElement tensor_image(const mac::Monomial& m);

private:
    unsigned g_;
    std::size_t n_;
    Route route_;
    std::size_t max_terms_;
    RingPresentation ring_;
    std::optional<StructureTable> table_;
    std::map<mac::Monomial, TensorElement> tensors_;
    std::map<mac::Monomial, SymCombination> images_;

    TensorElement generator_tensor(unsigned var) const;
    SymCombination generator_combination(unsigned var) const;
};

struct DegreeBlock {
    unsigned degree = 0;
    std::vector<std::string> rows;  // quotient_basis monomials
    std::vector<std::string> cols;  // symmetric-product basis indices
    IntegerMatrix matrix;
    std::vector<Integer> smith;
    Integer betti;
    std::size_t mac_rank = 0;
    std::size_t sym_rank = 0;
    bool square = false;
    bool unimodular = false;

    friend bool operator==(const DegreeBlock&, const DegreeBlock&) = default;
};

struct BridgeLimits {
    std::size_t max_tensor_terms = 0;  // 0 = unbounded
    unsigned jobs = 1;
    unsigned spot_checks = 16;
    std::uint64_t seed = 1;
};

struct BridgeReport {
    unsigned g = 0;
    std::size_t n = 0;
    Route route = Route::direct;
    std::vector<DegreeBlock> blocks;
    std::optional<unsigned> cutoff;  // first degree not computed, when a resource bound was hit
    std::string cutoff_reason;
    std::optional<bool> relations_sound;
    std::optional<bool> multiplicative;
    std::string verdict;  // "isomorphism", "not an isomorphism" or "partial"

    friend bool operator==(const BridgeReport&, const BridgeReport&) = default;
};

BridgeReport check_isomorphism(unsigned g, std::size_t n, Route route = Route::direct, const BridgeLimits& limits = {});

/// Every full-mode Macdonald generator maps to zero.
bool relations_sound(SurfaceMap& f);
/// f(NF(m1 m2)) = f(m1) f(m2) for `samples` random pairs of quotient-basis monomials.
bool multiplicativity_spot_check(SurfaceMap& f, unsigned samples, std::uint64_t seed);

nlohmann::json report_to_json(const BridgeReport& r);
BridgeReport report_from_json(const nlohmann::json& doc);
std::string report_to_text(const BridgeReport& r);

}  // namespace symprod
