#pragma once

// Shared fixtures and random recipe generators for the test suites.

#include <memory>
#include <random>
#include <vector>

#include "ehom/burnside.hpp"
#include "ehom/permgroup.hpp"
#include "ehom/simplicial.hpp"
#include "ehom/stratifold.hpp"

namespace fixtures {

inline ehom::PermGroup trivial_group() { return ehom::PermGroup::generate(1, {}); }

inline ehom::PermGroup z2() { return ehom::PermGroup::generate(2, {ehom::Perm({1, 0})}); }

inline ehom::PermGroup z3() { return ehom::PermGroup::generate(3, {ehom::Perm({1, 2, 0})}); }

inline ehom::PermGroup z4() { return ehom::PermGroup::generate(4, {ehom::Perm({1, 2, 3, 0})}); }

inline ehom::PermGroup v4() {
    return ehom::PermGroup::generate(4, {ehom::Perm({1, 0, 2, 3}), ehom::Perm({0, 1, 3, 2})});
}

inline ehom::PermGroup s3() {
    return ehom::PermGroup::generate(3, {ehom::Perm({1, 0, 2}), ehom::Perm({1, 2, 0})});
}

inline ehom::PermGroup d4() {
    return ehom::PermGroup::generate(4, {ehom::Perm({1, 2, 3, 0}), ehom::Perm({2, 1, 0, 3})});
}

// Quaternion group acting on {1,-1,i,-i,j,-j,k,-k} by left multiplication.
inline ehom::PermGroup q8() {
    return ehom::PermGroup::generate(
        8, {ehom::Perm({2, 3, 1, 0, 6, 7, 5, 4}), ehom::Perm({4, 5, 7, 6, 1, 0, 2, 3})});
}

inline ehom::PermGroup a4() {
    return ehom::PermGroup::generate(4, {ehom::Perm({1, 2, 0, 3}), ehom::Perm({1, 0, 3, 2})});
}

inline ehom::PermGroup s4() {
    return ehom::PermGroup::generate(4, {ehom::Perm({1, 0, 2, 3}), ehom::Perm({1, 2, 3, 0})});
}

inline std::vector<ehom::PermGroup> all_groups() {
    return {trivial_group(), z2(), z3(), z4(), v4(), s3(), d4(), q8(), a4(), s4()};
}

// ---------------------------------------------------------------------------
// Random recipes from the combinator grammar.

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random closed Euler diagram of exactly the given dimension.
inline ehom::StratumDiagram random_closed(Rng& rng, int depth, int dim) {
    using ehom::StratumDiagram;
    if (depth <= 0 || dim == 0) {
        switch (pick(rng, 0, 3)) {
            case 0: return StratumDiagram::point(dim);
            case 1: return StratumDiagram::empty(dim);
            case 2: return StratumDiagram::from_closed_manifold(pick(rng, 0, 3), dim);
            default:
                if (dim >= 1) return StratumDiagram::circle().pad(dim);
                return StratumDiagram::point(dim);
        }
    }
    switch (pick(rng, 0, 4)) {
        case 0: {  // pad something smaller
            const int d = pick(rng, 0, dim);
            return random_closed(rng, depth - 1, d).pad(dim);
        }
        case 1: {  // disjoint union
            return random_closed(rng, depth - 1, dim).disjoint_union(random_closed(rng, depth - 1, dim));
        }
        case 2: {  // product
            const int d = pick(rng, 0, dim);
            return random_closed(rng, depth - 1, d).product(random_closed(rng, depth - 1, dim - d));
        }
        case 3: {  // double of a bounded diagram
            if (dim >= 1) {
                ehom::StratumDiagram bounded = [&] {
                    ehom::StratumDiagram base = random_closed(rng, depth - 1, dim - 1);
                    if (pick(rng, 0, 1) == 0) {
                        // cone over an even-chi base
                        if (base.classify_point())
                            base = base.disjoint_union(StratumDiagram::point(dim - 1));
                        return base.cone();
                    }
                    return base.product(StratumDiagram::interval());
                }();
                return bounded.glue(bounded);
            }
            return random_closed(rng, depth - 1, dim);
        }
        default:
            return random_closed(rng, depth - 1, dim);
    }
}

/// Random bounded Euler diagram of exactly the given dimension (>= 1):
/// cylinders, cones over even-chi closed diagrams, disjoint unions.
inline ehom::StratumDiagram random_bounded(Rng& rng, int depth, int dim) {
    using ehom::StratumDiagram;
    switch (depth <= 0 ? pick(rng, 0, 1) : pick(rng, 0, 2)) {
        case 0: {  // cylinder
            return random_closed(rng, depth - 1, dim - 1).product(StratumDiagram::interval());
        }
        case 1: {  // cone over an even-chi closed Euler diagram
            StratumDiagram base = random_closed(rng, depth - 1, dim - 1);
            if (base.classify_point()) base = base.disjoint_union(StratumDiagram::point(dim - 1));
            return base.cone();
        }
        default:
            return random_bounded(rng, depth - 1, dim).disjoint_union(random_bounded(rng, depth - 1, dim));
    }
}

// ---------------------------------------------------------------------------
// Equivariant random recipes.

using RingPtr = std::shared_ptr<const ehom::BurnsideRing>;

/// Random closed valid equivariant diagram of the given dimension.
inline ehom::GStratumDiagram random_g_closed(Rng& rng, const RingPtr& ring, int depth, int dim) {
    using ehom::GStratumDiagram;
    if (depth <= 0 || dim == 0) {
        switch (pick(rng, 0, 2)) {
            case 0: return GStratumDiagram::empty(ring, dim);
            case 1: {
                const std::size_t k =
                    static_cast<std::size_t>(pick(rng, 0, static_cast<int>(ring->class_count()) - 1));
                return GStratumDiagram::orbit(ring, k, dim);
            }
            default:
                if (dim == 0) return GStratumDiagram::trivial_manifold(ring, pick(rng, 0, 3), 0);
                return GStratumDiagram::trivial_manifold(ring, pick(rng, 0, 3), dim);
        }
    }
    switch (pick(rng, 0, 3)) {
        case 0: {
            const int d = pick(rng, 0, dim);
            return random_g_closed(rng, ring, depth - 1, d).pad(dim);
        }
        case 1:
            return random_g_closed(rng, ring, depth - 1, dim)
                .disjoint_union(random_g_closed(rng, ring, depth - 1, dim));
        case 2: {  // double of a bounded diagram
            if (dim >= 1) {
                ehom::GStratumDiagram base = random_g_closed(rng, ring, depth - 1, dim - 1);
                ehom::GStratumDiagram bounded =
                    pick(rng, 0, 1) == 0 ? base.disjoint_union(base).cone() : base.cylinder();
                return bounded.glue(bounded);
            }
            return random_g_closed(rng, ring, depth - 1, dim);
        }
        default:
            return random_g_closed(rng, ring, depth - 1, dim);
    }
}

/// Random bounded valid equivariant diagram: cylinders, cones over
/// doubled bases (always classify to zero), unions.
inline ehom::GStratumDiagram random_g_bounded(Rng& rng, const RingPtr& ring, int depth, int dim) {
    switch (depth <= 0 ? pick(rng, 0, 1) : pick(rng, 0, 2)) {
        case 0:
            return random_g_closed(rng, ring, depth - 1, dim - 1).cylinder();
        case 1: {
            ehom::GStratumDiagram base = random_g_closed(rng, ring, depth - 1, dim - 1);
            return base.disjoint_union(base).cone();
        }
        default:
            return random_g_bounded(rng, ring, depth - 1, dim)
                .disjoint_union(random_g_bounded(rng, ring, depth - 1, dim));
    }
}

}  // namespace fixtures
