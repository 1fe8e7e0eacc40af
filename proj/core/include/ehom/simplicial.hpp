#pragma once

#include <vector>

#include "ehom/bitmatrix.hpp"

namespace ehom {

/// A simplex is a sorted list of distinct 0-based vertex indices.
using Simplex = std::vector<int>;

/// Mod-2 Betti numbers indexed by degree; length is dimension + 1.
using BettiVector = std::vector<std::size_t>;

/// Finite abstract simplicial complex, closed under taking faces.
/// Simplices are stored as sorted vertex lists bucketed by dimension and
/// sorted lexicographically inside each bucket, so boundary matrices and
/// all derived data are deterministic. Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the given facets. Idempotent on closed input.
    /// Throws std::invalid_argument on an empty facet, a negative vertex
    /// index, or a repeated vertex inside a facet.
    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

    // Fixture complexes used throughout the test corpus.
    static SimplicialComplex point();
    static SimplicialComplex sphere(int n);            // boundary of the (n+1)-simplex
    static SimplicialComplex projective_plane();       // 6 vertices, 15 edges, 10 triangles
    static SimplicialComplex torus();                  // 7-vertex triangulation
    static SimplicialComplex klein_bottle();           // grid quotient with a flip

    int vertex_count() const { return vertex_count_; }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

    const std::vector<Simplex>& simplices(int dim) const;
    std::size_t simplex_count(int dim) const;
    std::vector<std::size_t> f_vector() const;

    long long euler_characteristic() const;

    /// Mod-2 boundary matrix in degree j >= 1: one row per j-simplex holding
    /// its boundary chain over the (j-1)-simplices.
    BitMatrix boundary_matrix(int j) const;

    /// Mod-2 Betti numbers: dim ker boundary_j − rank boundary_{j+1}.
    BettiVector betti_mod2() const;

    /// One apex vertex joined to every simplex; the cone over the empty
    /// complex is a point.
    SimplicialComplex cone() const;

    /// Vertex-shifted union; the argument's vertices are renumbered upward.
    SimplicialComplex disjoint_union(const SimplicialComplex& other) const;

    /// Maximal simplices, bucketed order.
    std::vector<Simplex> facets() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
};

}  // namespace ehom
