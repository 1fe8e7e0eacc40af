#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace ehom {

/// Permutation of {0,...,m-1}, stored as the image list.
class Perm {
public:
    explicit Perm(std::vector<int> images);
    static Perm identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const;
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;

    /// (a then b read right to left): compose(a, b)(x) = a(b(x)).
    friend Perm compose(const Perm& a, const Perm& b);

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> img_;
};

inline constexpr std::size_t kDefaultMaxGroupOrder = 10080;

/// Finite permutation group with a materialized element list, sorted
/// lexicographically by image vectors; element indices refer to that order
/// and the identity is always index 0. Immutable after generation.
class PermGroup {
public:
    /// Closes the generators under composition. Throws std::invalid_argument
    /// on a generator of the wrong degree, or when the closure exceeds
    /// max_order.
    static PermGroup generate(int degree, std::vector<Perm> generators,
                              std::size_t max_order = kDefaultMaxGroupOrder);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }

    /// Index into elements(), or -1 when p is not an element.
    int index_of(const Perm& p) const;

    /// Index arithmetic on elements: composition and inversion.
    int mul(int a, int b) const;
    int inv(int a) const;

    /// True iff the given sorted element-index list is a subgroup.
    bool is_subgroup(const std::vector<int>& element_indices) const;

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.degree_ == b.degree_ && a.elements_ == b.elements_;
    }

private:
    PermGroup() = default;

    int degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
};

/// One conjugacy class of subgroups.
struct SubgroupClass {
    std::vector<int> representative;  // sorted element indices, minimal in its class
    std::size_t order = 0;            // |K|
    std::size_t conjugate_count = 0;  // |G| / |N(K)|
    std::size_t normalizer_order = 0;
    std::size_t norm_quotient = 0;    // |N(K)/K|

    friend bool operator==(const SubgroupClass&, const SubgroupClass&) = default;
};

/// All conjugacy classes of subgroups, sorted by subgroup order and then by
/// the representative's element list; deterministic across runs. Subgroups
/// are enumerated by layered closure: cyclic seeds, then pairwise joins
/// until a fixed point.
std::vector<SubgroupClass> subgroup_classes(const PermGroup& g);

/// {h in g : h k h^-1 = k}, sorted. Throws when k is not a subgroup.
std::vector<int> normalizer(const PermGroup& g, const std::vector<int>& k);

/// Number of cosets xK fixed by every element of l, i.e. with x^-1 l x in k.
std::size_t fixed_coset_count(const PermGroup& g, const std::vector<int>& k,
                              const std::vector<int>& l);

std::vector<int> conjugate_subgroup(const PermGroup& g, const std::vector<int>& k, int by);

/// Lexicographically minimal conjugate of k, the canonical class representative.
std::vector<int> canonical_conjugate(const PermGroup& g, const std::vector<int>& k);

/// Materializes a subgroup (given by element indices) as a standalone group
/// of the same degree.
PermGroup subgroup_as_group(const PermGroup& g, const std::vector<int>& element_indices);

/// A finite g-set: generator images on {0,...,points-1}, one permutation per
/// generator of g, in generator order.
struct GroupAction {
    int points = 0;
    std::vector<Perm> per_generator;
};

/// The full action homomorphism, one permutation per group element aligned
/// with g.elements(). Throws std::invalid_argument when the generator images
/// do not respect the group's relations.
std::vector<Perm> materialize_action(const PermGroup& g, const GroupAction& a);

/// Decomposes the g-set into orbits and counts, per conjugacy class in the
/// given order, the orbits whose point stabilizer lies in that class.
std::vector<std::size_t> orbit_type_counts(const PermGroup& g,
                                           const std::vector<SubgroupClass>& classes,
                                           const GroupAction& a);

}  // namespace ehom
