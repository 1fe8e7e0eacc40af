#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ehom/permgroup.hpp"
#include "ehom/stratifold.hpp"

namespace ehom {

/// Finite H-CW data: each layer is a finite H-set of cells of one dimension.
struct HCWComplex {
    struct Layer {
        int dim = 0;
        GroupAction cells;
    };
    std::vector<Layer> layers;
};

/// The Burnside ring of a finite permutation group H together with its table
/// of marks. Elements are integer coefficient vectors over the canonical
/// conjugacy classes of subgroups; multiplication goes through the character
/// map and a triangular integer solve. Immutable after construction.
class BurnsideRing {
public:
    explicit BurnsideRing(PermGroup h);

    const PermGroup& group() const { return group_; }
    const std::vector<SubgroupClass>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }

    /// marks()[K][L] = number of cosets in H/K fixed by L. Lower triangular
    /// in the canonical class order with diagonal |N(K)/K|.
    const std::vector<std::vector<long long>>& marks() const { return marks_; }

    /// Stable class label "order:<k>#<i>": i counts classes of equal order.
    std::string class_label(std::size_t k) const;

    /// Index of the class containing the given subgroup.
    std::size_t class_of(const std::vector<int>& subgroup_elements) const;

    std::size_t trivial_class() const { return 0; }
    std::size_t full_class() const { return classes_.size() - 1; }

    /// The basis element [H/K].
    std::vector<long long> basis(std::size_t k) const;

    /// Character map: entry (L) is sum_K a_K * marks[K][L].
    std::vector<long long> character(const std::vector<long long>& a) const;

    /// Inverse of the character map over the integers; throws
    /// std::invalid_argument when chi is not an integral character.
    std::vector<long long> from_character(const std::vector<long long>& chi) const;

    /// Ring multiplication via pointwise product of characters. A
    /// non-integral solve signals a marks-matrix bug (std::logic_error).
    std::vector<long long> multiply(const std::vector<long long>& a,
                                    const std::vector<long long>& b) const;

    /// Class indices with odd |N(K)/K|, in canonical order.
    std::vector<std::size_t> vh_basis() const;

    /// Coefficients mod 2 on the odd classes; even classes are dropped.
    std::vector<std::uint8_t> project_vh(const std::vector<long long>& a) const;

    /// Equivariant Euler characteristic of finite H-CW data: the class-(K)
    /// coefficient is the signed count of cell orbits with stabilizer in (K).
    std::vector<long long> equivariant_chi(const HCWComplex& x) const;

    /// The H-set H/K as a permutation action on coset indices.
    GroupAction coset_action(std::size_t k) const;

    /// Burnside ring of the class representative as a standalone group.
    BurnsideRing subring(std::size_t k) const;

    friend bool operator==(const BurnsideRing& a, const BurnsideRing& b) {
        return a.group_ == b.group_;
    }

private:
    PermGroup group_;
    std::vector<SubgroupClass> classes_;
    std::vector<std::vector<long long>> marks_;
    std::map<std::vector<int>, std::size_t> class_lookup_;
};

/// The coefficient basis of the theory on the orbit of a subgroup: the odd
/// classes of the subgroup itself. Throws when the element list is not a
/// subgroup of g.
std::vector<SubgroupClass> vh_basis_of_subgroup(const PermGroup& g,
                                                const std::vector<int>& h_elements);

/// One isotypical component piece of an equivariant stratum: an orbit-type
/// piece H/K x D with quotient chi, isotropy class, fiber character data over
/// the classes of the isotropy subgroup, and the dimensions of its fixed
/// parts keyed by acting-group class.
struct GStratumComponent {
    long long quotient_chi = 0;
    std::size_t isotropy = 0;
    std::vector<long long> fiber_punctured;  // chi((F \ F0)^L) over classes of K
    std::vector<long long> fiber_full;       // chi(F^L) over classes of K
    std::map<std::size_t, int> fixed_dims;   // acting-group class -> dim of fixed part

    friend bool operator==(const GStratumComponent&, const GStratumComponent&) = default;
};

/// Equivariant stratum diagram over a fixed Burnside ring context.
/// Immutable value type; the ring is shared.
class GStratumDiagram {
public:
    using Strata = std::vector<std::vector<GStratumComponent>>;

    GStratumDiagram(std::shared_ptr<const BurnsideRing> ring, int dim, Strata strata,
                    std::shared_ptr<const GStratumDiagram> boundary = nullptr);

    static GStratumDiagram empty(std::shared_ptr<const BurnsideRing> ring, int dim);

    /// The orbit H/K padded to the given dimension; fibers are trivial.
    static GStratumDiagram orbit(std::shared_ptr<const BurnsideRing> ring, std::size_t k, int dim);

    /// A closed manifold with trivial action: one top-stratum piece with
    /// isotropy the full group and every fixed part of full dimension.
    static GStratumDiagram trivial_manifold(std::shared_ptr<const BurnsideRing> ring,
                                            long long chi, int dim);

    const BurnsideRing& ring() const { return *ring_; }
    std::shared_ptr<const BurnsideRing> ring_ptr() const { return ring_; }
    int dim() const { return dim_; }
    bool closed() const { return boundary_ == nullptr; }
    const Strata& strata() const { return strata_; }
    const GStratumDiagram& boundary() const;
    std::shared_ptr<const GStratumDiagram> boundary_ptr() const { return boundary_; }

    GStratumDiagram pad(int n) const;

    /// Equivariant cone: the apex is fixed by the whole group and its fiber
    /// character records the fixed-set chi of the base per class, so the
    /// result is valid iff the base classifies to zero.
    GStratumDiagram cone() const;

    /// Product with the trivially-acted interval; boundary is two copies.
    GStratumDiagram cylinder() const;

    GStratumDiagram disjoint_union(const GStratumDiagram& other) const;

    /// Glue along the full common boundary; seam pieces carry the boundary
    /// data with negated quotient chi and fixed dimensions shifted by one.
    GStratumDiagram glue(const GStratumDiagram& other) const;

    /// Passes iff every fiber's Burnside element, reconstructed from its
    /// punctured character over the isotropy subring, projects to zero.
    ValidationReport validate_euler() const;

    /// The l-fixed diagram: per component, one non-equivariant piece per
    /// l-fixed coset, with fiber parities taken at the fused class of the
    /// conjugated subgroup. Requires fixed-dimension annotations for every
    /// component with a nonempty fixed part.
    StratumDiagram fixed_diagram(std::size_t l) const;

    /// Total equivariant chi: coefficient of [H/K] sums quotient chis of
    /// the class-(K) pieces over all strata.
    std::vector<long long> equivariant_chi() const;

    /// Class in the coefficient group V_H of a closed valid diagram.
    std::vector<std::uint8_t> classify() const;

    /// chi mod 2 of the underlying non-equivariant diagram.
    bool classify_naive() const;

    friend bool operator==(const GStratumDiagram& a, const GStratumDiagram& b);

private:
    void check_component(const GStratumComponent& c, std::size_t sub_classes) const;

    std::shared_ptr<const BurnsideRing> ring_;
    int dim_ = 0;
    Strata strata_;
    std::shared_ptr<const GStratumDiagram> boundary_;
};

}  // namespace ehom
