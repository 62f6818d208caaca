#pragma once

#include "symprod/ring.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace symprod {

RingPresentation sphere_ring();                 // S^2
RingPresentation s2xs2_ring();                  // intersection form [[0,1],[1,0]]
RingPresentation cp2_conn_cp2bar_ring();        // intersection form [[1,0],[0,-1]]
/// S^{2m} with a 4m-cell attached by a map of Hopf invariant 2k: u^2 = 2k v.
RingPresentation hopf_ring(unsigned m, unsigned k);
/// H^*(M^3)/Tor of the 3-manifold with cup-product form mu(a1,a2,a3) = s.
RingPresentation sullivan_ring(long s);

/// Builds a named fixture; `param` is k for hopf_2k, s for sullivan_mu_s, g for surface.
/// Throws std::invalid_argument for unknown names.
RingPresentation named_fixture(const std::string& name, long param = 1);
std::vector<std::string> fixture_names();

/// $SYMPROD_FIXTURES if set, otherwise the source-tree fixtures directory.
std::filesystem::path fixture_dir();

}  // namespace symprod
