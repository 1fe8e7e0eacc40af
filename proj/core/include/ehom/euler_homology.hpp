#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ehom/bitmatrix.hpp"
#include "ehom/simplicial.hpp"
#include "ehom/stratifold.hpp"

namespace ehom {

/// Element of the graded value group of the theory: chain-level cycle
/// representatives in a fixed reference complex, indexed by
/// (homology degree j, t-exponent k). Zero terms are never stored.
class PolyClass {
public:
    using Key = std::pair<int, int>;  // (degree, t-exponent)

    /// XOR-merges a chain into the term; terms that become zero are erased.
    void add_term(int degree, int t_exp, const BitVector& chain);

    const std::map<Key, BitVector>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PolyClass& operator^=(const PolyClass& other);
    friend PolyClass operator^(PolyClass a, const PolyClass& b) {
        a ^= b;
        return a;
    }

    friend bool operator==(const PolyClass&, const PolyClass&) = default;

private:
    std::map<Key, BitVector> terms_;
};

/// Pushed-forward Poincare duals of the Stiefel-Whitney classes of a closed
/// manifold mapped into a reference complex. classes[j] is a degree-j cycle
/// of the target representing the pushforward of PD w_{dim-j}. The classes
/// are supplied data, not computed from triangulations; that they depend
/// only on the bordism class of the manifold is a property of the inputs
/// this library does not re-verify.
struct SWData {
    int manifold_dim = 0;
    std::map<int, BitVector> classes;

    /// Componentwise XOR; models disjoint union of singular manifolds of
    /// equal dimension.
    SWData& operator^=(const SWData& other);
};

/// Dimension of the degree-n value group over the complex x, for
/// n = 0..n_max: the partial sums of the mod-2 Betti numbers.
std::vector<std::size_t> euler_homology_dims(const SimplicialComplex& x, int n_max);

/// The point-level bordism invariant chi mod 2 of a closed Euler diagram;
/// identical to StratumDiagram::classify_point, exposed as the value of the
/// natural transformation from manifold bordism.
bool bordism_point_class(const StratumDiagram& s);

bool is_cycle(const SimplicialComplex& x, int degree, const BitVector& chain);

/// True iff a and b differ by a boundary in the given degree.
bool homologous(const SimplicialComplex& x, int degree, const BitVector& a, const BitVector& b);

/// Characteristic-class expansion of a singular manifold of dimension i
/// padded to dimension n >= i: term (j, n-j) holds the supplied class in
/// degree j. Throws std::invalid_argument when n < i, when a class lies in
/// a degree above i, or when a supplied vector is not a cycle.
PolyClass sw_poly_class(const SWData& sw, int n, const SimplicialComplex& target);

/// Module action of a closed manifold with the given chi and dimension:
/// the zero map when chi is even, otherwise a shift of every t-exponent.
PolyClass module_action(long long chi_scalar, int dim_shift, const PolyClass& c);

/// SW data of a closed manifold mapped to the one-point complex: only the
/// top class survives the pushforward and equals chi mod 2 in degree 0.
SWData sw_manifold_to_point(long long chi, int dim);

/// SW data of the circle mapped identically onto the hollow triangle;
/// the tangent bundle is trivial, so only the fundamental cycle appears.
SWData sw_circle_identity();

}  // namespace ehom
