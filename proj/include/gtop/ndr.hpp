#pragma once

#include "gtop/complex.hpp"
#include "gtop/poset.hpp"

#include <optional>

namespace gtop {

struct NdrResult {
    int subdivisions = 0;
    int radius = 0; // 2^(subdivisions - 2)
    SimplicialComplex subdivided_k;
    SimplicialComplex subdivided_l;
    std::optional<GroupAction> action; // on subdivided_k
    SimplicialComplex a;               // subcomplex of subdivided_k
    std::optional<GroupAction> a_action;
    PosetCertificate poset_certificate; // collapse of the poset whose order complex is a
    ComplexCertificate certificate;     // the same removals on a
    bool containment_verified = false;  // nu^radius(subdivided_l) lies in a
    bool certificate_verified = false;  // replaying certificate on a leaves subdivided_l
};

/// Builds a subcomplex A of Sd^r K containing the 2^(r-2)-neighbourhood of
/// Sd^r L together with a strong collapse A -> Sd^r L.
///
/// The first two subdivisions use the poset P of chains of faces of K that
/// meet L, which retracts onto the chains inside L by c -> c n L; every
/// further subdivision replaces A by Sd(A). The certificate is the greedy
/// beat point collapse of the last face poset, replayed on its order complex.
/// Refuses r < 2 and inputs whose Sd^r exceeds cap simplices.
NdrResult ndr_builder(const SimplicialComplex& k, const SimplicialComplex& l, const std::optional<GroupAction>& action,
                      int r, std::size_t cap = 1'000'000);

} // namespace gtop
