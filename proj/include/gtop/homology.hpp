#pragma once

#include "gtop/complex.hpp"
#include "gtop/poset.hpp"

#include <optional>
#include <vector>

namespace gtop {

/// Simplicial chain complex over GF(2), augmented in degree -1.
///
/// cells[d] lists the d-simplices in canonical order. boundary[d][j] is the
/// support (sorted row indices into cells[d-1]) of the boundary of cell j of
/// dimension d; for d = 0 every column is {0}, the augmentation.
struct ChainComplexGF2 {
    std::vector<std::vector<Simplex>> cells;
    std::vector<std::vector<std::vector<int>>> boundary;
    bool truncated = false; // cells above the top dimension exist but were not built
};

/// Chains of K up to dimension top_dim (all dimensions by default).
ChainComplexGF2 chain_complex(const SimplicialComplex& k, std::optional<int> top_dim = std::nullopt);

/// Chain complex of the order complex of p, built from chains of p directly.
ChainComplexGF2 chain_complex(const Poset& p, std::optional<int> top_dim = std::nullopt);

/// Rank over GF(2) of a sparse matrix given by column supports.
std::size_t rank_gf2(std::vector<std::vector<int>> columns);

/// Every boundary of a boundary vanishes.
bool boundary_squared_zero(const ChainComplexGF2& c);

struct DegreeAudit {
    int degree;
    std::size_t cells;
    std::size_t rank_boundary; // rank of the map out of this degree
    std::size_t rank_incoming; // rank of the map into this degree
    std::size_t betti;
};

/// Rank-nullity bookkeeping per degree; betti = cells - rank_boundary - rank_incoming.
/// The top degree is omitted when the complex is truncated.
std::vector<DegreeAudit> homology_audit(const ChainComplexGF2& c);

/// Reduced betti numbers in degrees 0..min(max_dim, dim K).
std::vector<std::size_t> reduced_betti(const SimplicialComplex& k, int max_dim = 4);

/// Reduced betti numbers of the order complex of p.
std::vector<std::size_t> poset_reduced_betti(const Poset& p, int max_dim = 4);

struct HomologyComparison {
    bool equal = false;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
};

/// Compares reduced betti sequences, padding the shorter one with zeros.
HomologyComparison homologically_equal(const SimplicialComplex& a, const SimplicialComplex& b, int max_dim = 4);

long euler_characteristic(const SimplicialComplex& k); // unreduced, from the f-vector

} // namespace gtop
