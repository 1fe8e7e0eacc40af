#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ehom/bitmatrix.hpp"
#include "ehom/burnside.hpp"
#include "fixtures.hpp"

using ehom::BurnsideRing;
using ehom::GroupAction;
using ehom::GStratumDiagram;
using ehom::HCWComplex;
using ehom::Perm;
using ehom::PermGroup;

namespace {

using fixtures::RingPtr;

RingPtr make_ring(const PermGroup& g) { return std::make_shared<const BurnsideRing>(g); }

// Product of two transitive H-sets as one action on index pairs.
GroupAction product_action(const GroupAction& a, const GroupAction& b) {
    GroupAction p;
    p.points = a.points * b.points;
    for (std::size_t gi = 0; gi < a.per_generator.size(); ++gi) {
        std::vector<int> img(static_cast<std::size_t>(p.points));
        for (int x = 0; x < a.points; ++x)
            for (int y = 0; y < b.points; ++y)
                img[static_cast<std::size_t>(x * b.points + y)] =
                    a.per_generator[gi][x] * b.points + b.per_generator[gi][y];
        p.per_generator.push_back(Perm(std::move(img)));
    }
    return p;
}

// chi of the L-fixed subcomplex by direct cell counting.
long long fixed_cell_chi(const PermGroup& g, const std::vector<int>& l_rep, const HCWComplex& x) {
    long long chi = 0;
    for (const auto& layer : x.layers) {
        const auto act = ehom::materialize_action(g, layer.cells);
        long long fixed = 0;
        for (int p = 0; p < layer.cells.points; ++p) {
            bool all_fix = true;
            for (int e : l_rep)
                if (act[static_cast<std::size_t>(e)][p] != p) {
                    all_fix = false;
                    break;
                }
            if (all_fix) ++fixed;
        }
        chi += (layer.dim % 2 == 0) ? fixed : -fixed;
    }
    return chi;
}

// Minimal exact rational, used only inside the basis-diagram test.
struct Rat {
    long long n = 0, d = 1;
    static long long gcd(long long a, long long b) { return b == 0 ? (a < 0 ? -a : a) : gcd(b, a % b); }
    Rat norm() const {
        long long g = gcd(n, d);
        if (g == 0) return {0, 1};
        long long nn = n / g, dd = d / g;
        if (dd < 0) { nn = -nn; dd = -dd; }
        return {nn, dd};
    }
    friend Rat operator+(Rat a, Rat b) { return Rat{a.n * b.d + b.n * a.d, a.d * b.d}.norm(); }
    friend Rat operator*(Rat a, Rat b) { return Rat{a.n * b.n, a.d * b.d}.norm(); }
};

}  // namespace

TEST_CASE("marks matrices: pinned examples") {
    const BurnsideRing s3{fixtures::s3()};
    const std::vector<std::vector<long long>> expected{
        {6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}};
    CHECK(s3.marks() == expected);

    const BurnsideRing trivial{fixtures::trivial_group()};
    CHECK(trivial.marks() == std::vector<std::vector<long long>>{{1}});

    const BurnsideRing z2{fixtures::z2()};
    CHECK(z2.marks() == std::vector<std::vector<long long>>{{2, 0}, {1, 1}});
}

TEST_CASE("marks matrices are triangular with diagonal |NK/K|") {
    for (const auto& g : fixtures::all_groups()) {
        const BurnsideRing ring{g};
        const auto& m = ring.marks();
        const auto& classes = ring.classes();
        for (std::size_t k = 0; k < classes.size(); ++k) {
            CHECK(m[k][k] == static_cast<long long>(classes[k].norm_quotient));
            for (std::size_t l = 0; l < classes.size(); ++l) {
                if (l > k) CHECK(m[k][l] == 0);
                if (l != k && classes[l].order == classes[k].order) CHECK(m[k][l] == 0);
                CHECK(m[k][l] % static_cast<long long>(classes[k].norm_quotient) == 0);
            }
        }
    }
}

TEST_CASE("character map: pinned examples") {
    const BurnsideRing s3{fixtures::s3()};
    CHECK(s3.character(s3.basis(s3.full_class())) == std::vector<long long>{1, 1, 1, 1});
    CHECK(s3.character(s3.basis(0)) == std::vector<long long>{6, 0, 0, 0});
    std::vector<long long> two_c3{0, 0, 2, 0};
    CHECK(s3.character(two_c3) == std::vector<long long>{4, 0, 4, 0});
    CHECK(s3.from_character(std::vector<long long>{4, 0, 4, 0}) == two_c3);

    CHECK_THROWS_AS(s3.from_character(std::vector<long long>{1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("multiplication: pinned examples") {
    const BurnsideRing s3{fixtures::s3()};
    // [S3/C2]^2 = [S3/e] + [S3/C2]
    const auto sq = s3.multiply(s3.basis(1), s3.basis(1));
    CHECK(sq == std::vector<long long>{1, 1, 0, 0});
    CHECK(s3.character(sq) == std::vector<long long>{9, 1, 0, 0});

    // [H/H] is the identity.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<long long> x(s3.class_count());
        for (auto& v : x) v = static_cast<long long>(rng() % 7) - 3;
        CHECK(s3.multiply(s3.basis(s3.full_class()), x) == x);
    }

    // [H/e] . [H/K] = |H/K| . [H/e]
    for (std::size_t k = 0; k < s3.class_count(); ++k) {
        std::vector<long long> expected(s3.class_count(), 0);
        expected[0] = static_cast<long long>(s3.group().order() / s3.classes()[k].order);
        CHECK(s3.multiply(s3.basis(0), s3.basis(k)) == expected);
    }
}

TEST_CASE("multiplication matches brute-force orbit decomposition") {
    for (const auto& g : fixtures::all_groups()) {
        if (g.order() > 12) continue;
        const BurnsideRing ring{g};
        const auto classes = ring.classes();
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (std::size_t l = k; l < classes.size(); ++l) {
                const auto prod = product_action(ring.coset_action(k), ring.coset_action(l));
                const auto counts = ehom::orbit_type_counts(g, classes, prod);
                std::vector<long long> oracle(counts.begin(), counts.end());
                CAPTURE(g.order());
                CHECK(ring.multiply(ring.basis(k), ring.basis(l)) == oracle);
                CHECK(ring.multiply(ring.basis(l), ring.basis(k)) == oracle);
            }
    }
}

TEST_CASE("multiplication is associative on random elements") {
    const BurnsideRing ring{fixtures::s3()};
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long long> a(ring.class_count()), b(ring.class_count()), c(ring.class_count());
        for (auto* v : {&a, &b, &c})
            for (auto& x : *v) x = static_cast<long long>(rng() % 5) - 2;
        CHECK(ring.multiply(ring.multiply(a, b), c) == ring.multiply(a, ring.multiply(b, c)));
        CHECK(ring.multiply(a, b) == ring.multiply(b, a));
    }
}

TEST_CASE("projection to V_H: pinned examples") {
    const BurnsideRing s3{fixtures::s3()};
    CHECK(s3.vh_basis() == std::vector<std::size_t>{1, 3});  // (C2) and (S3)

    // [S3/C3] dies: |NK/K| = 2.
    CHECK(s3.project_vh(s3.basis(2)) == std::vector<std::uint8_t>{0, 0});
    // [H/H] survives as the last basis vector.
    CHECK(s3.project_vh(s3.basis(3)) == std::vector<std::uint8_t>{0, 1});
    // Doubles vanish.
    std::vector<long long> twice{0, 2, 0, 0};
    CHECK(s3.project_vh(twice) == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("V_H dimensions across the fixture groups") {
    auto dim_v = [](const PermGroup& g) { return BurnsideRing{g}.vh_basis().size(); };
    CHECK(dim_v(fixtures::trivial_group()) == 1);
    CHECK(dim_v(fixtures::z2()) == 1);
    CHECK(dim_v(fixtures::z3()) == 2);
    CHECK(dim_v(fixtures::s3()) == 2);
    CHECK(dim_v(fixtures::z4()) == 1);
    CHECK(dim_v(fixtures::v4()) == 1);
    CHECK(dim_v(fixtures::d4()) == 1);
    CHECK(dim_v(fixtures::q8()) == 1);
    CHECK(dim_v(fixtures::a4()) == 3);
    CHECK(dim_v(fixtures::s4()) == 3);
}

TEST_CASE("vh basis of a subgroup orbit") {
    const auto s3 = fixtures::s3();
    std::vector<int> everything(s3.order());
    std::iota(everything.begin(), everything.end(), 0);
    CHECK(ehom::vh_basis_of_subgroup(s3, everything).size() == 2);
    CHECK(ehom::vh_basis_of_subgroup(s3, {0}).size() == 1);

    const auto s4 = fixtures::s4();
    const auto classes = ehom::subgroup_classes(s4);
    // First order-2 class: a Z/2 inside S4.
    for (const auto& c : classes)
        if (c.order == 2) {
            CHECK(ehom::vh_basis_of_subgroup(s4, c.representative).size() == 1);
            break;
        }
    CHECK_THROWS_AS(ehom::vh_basis_of_subgroup(s4, {1}), std::invalid_argument);
}

TEST_CASE("equivariant chi: pinned examples") {
    // One fixed point: chi = [H/H].
    const BurnsideRing s3{fixtures::s3()};
    HCWComplex pt;
    pt.layers.push_back({0, GroupAction{1, {Perm::identity(1), Perm::identity(1)}}});
    CHECK(s3.equivariant_chi(pt) == s3.basis(s3.full_class()));

    // Z/2 on two swapped points: chi = [H/e], character (2, 0).
    const BurnsideRing z2{fixtures::z2()};
    HCWComplex swapped;
    swapped.layers.push_back({0, GroupAction{2, {Perm({1, 0})}}});
    CHECK(z2.equivariant_chi(swapped) == z2.basis(0));
    CHECK(z2.character(z2.equivariant_chi(swapped)) == std::vector<long long>{2, 0});

    // Z/2 circle: two fixed 0-cells, two swapped 1-cells.
    HCWComplex circle;
    circle.layers.push_back({0, GroupAction{2, {Perm::identity(2)}}});
    circle.layers.push_back({1, GroupAction{2, {Perm({1, 0})}}});
    CHECK(z2.equivariant_chi(circle) == std::vector<long long>{-1, 2});
    CHECK(z2.character(z2.equivariant_chi(circle)) == std::vector<long long>{0, 2});
}

TEST_CASE("character identity on generated H-CW fixtures") {
    std::mt19937_64 rng(90125);
    int fixtures_checked = 0;
    for (const auto& g : {fixtures::z2(), fixtures::z3(), fixtures::s3(), fixtures::z4(),
                          fixtures::v4()}) {
        const BurnsideRing ring{g};
        for (int trial = 0; trial < 5; ++trial) {
            HCWComplex x;
            const int layer_count = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < layer_count; ++i) {
                const std::size_t k = rng() % ring.class_count();
                x.layers.push_back({static_cast<int>(rng() % 4), ring.coset_action(k)});
            }
            const auto chi = ring.equivariant_chi(x);
            const auto ch = ring.character(chi);
            for (std::size_t l = 0; l < ring.class_count(); ++l)
                CHECK(ch[l] == fixed_cell_chi(g, ring.classes()[l].representative, x));
            ++fixtures_checked;
        }
    }
    CHECK(fixtures_checked >= 20);
}

TEST_CASE("basis-diagram square commutes") {
    std::mt19937_64 rng(271828);
    for (const auto& g : fixtures::all_groups()) {
        const BurnsideRing ring{g};
        const std::size_t n = ring.class_count();
        const auto& classes = ring.classes();

        // psi-bar over GF(2): entry (K, L) = marks[K][L] / |NK/K| mod 2.
        ehom::BitMatrix psi_bar_t(n, n);  // transposed: rows L, cols K
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                const long long scaled =
                    ring.marks()[k][l] / static_cast<long long>(classes[k].norm_quotient);
                if (scaled % 2 != 0) psi_bar_t.set(l, k, true);
            }

        for (int trial = 0; trial < 8; ++trial) {
            std::vector<long long> a(n);
            for (auto& v : a) v = static_cast<long long>(rng() % 9) - 4;

            // Route 1: coefficient reduction, embedded into the x-coordinates.
            ehom::BitVector direct(n);
            for (std::size_t k = 0; k < n; ++k)
                if (classes[k].norm_quotient % 2 == 1 && ((a[k] % 2) + 2) % 2 == 1)
                    direct.set(k, true);

            // Route 2: psi-bar^-1 . pr . psi . i with exact rationals.
            ehom::BitVector reduced(n);
            for (std::size_t l = 0; l < n; ++l) {
                Rat sum{0, 1};
                for (std::size_t k = 0; k < n; ++k) {
                    const Rat xk{a[k] * static_cast<long long>(classes[k].norm_quotient), 1};
                    const Rat psi_entry{ring.marks()[k][l],
                                        static_cast<long long>(classes[k].norm_quotient)};
                    sum = sum + xk * psi_entry;
                }
                REQUIRE(sum.d == 1);  // psi . i lands in the integers (it is ch)
                REQUIRE(sum.n == ring.character(a)[l]);
                if (((sum.n % 2) + 2) % 2 == 1) reduced.set(l, true);
            }
            const auto solved = ehom::solve(psi_bar_t, reduced);
            REQUIRE(solved.has_value());
            CHECK(*solved == direct);
        }
    }
}

// ---------------------------------------------------------------------------
// Equivariant stratum diagrams

TEST_CASE("equivariant validation: pinned examples") {
    const auto z2 = make_ring(fixtures::z2());

    // Trivial fibers always pass.
    CHECK(GStratumDiagram::orbit(z2, 0, 2).validate_euler().ok());
    CHECK(GStratumDiagram::trivial_manifold(z2, 3, 1).validate_euler().ok());

    // Cone over the free orbit: fiber class [H/e] dies in V_H.
    const auto free_pair = GStratumDiagram::orbit(z2, 0, 0);
    CHECK(free_pair.cone().validate_euler().ok());

    // Cone over the fixed point: fiber class [H/H] survives.
    const auto fixed_pt = GStratumDiagram::orbit(z2, 1, 0);
    const auto report = fixed_pt.cone().validate_euler();
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].stratum == 0);
}

TEST_CASE("equivariant classification: pinned examples") {
    const auto z2 = make_ring(fixtures::z2());
    // pt_n with trivial action: the (H) basis vector, for every n.
    for (int n = 0; n <= 3; ++n) {
        const auto pt_n = GStratumDiagram::trivial_manifold(z2, 1, 0).pad(n);
        CHECK(pt_n.classify() == std::vector<std::uint8_t>{1});
        CHECK(pt_n.classify_naive());
    }
    // Free orbit: dies.
    CHECK(GStratumDiagram::orbit(z2, 0, 2).classify() == std::vector<std::uint8_t>{0});
    CHECK_FALSE(GStratumDiagram::orbit(z2, 0, 2).classify_naive());

    // Orbits of odd classes hit the V_H basis bijectively.
    for (const auto& g : {fixtures::z2(), fixtures::z3(), fixtures::s3()}) {
        const auto ring = make_ring(g);
        const auto basis = ring->vh_basis();
        std::set<std::vector<std::uint8_t>> seen;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto bits = GStratumDiagram::orbit(ring, basis[i], 2).classify();
            std::vector<std::uint8_t> unit(basis.size(), 0);
            unit[i] = 1;
            CHECK(bits == unit);
            seen.insert(bits);
        }
        CHECK(seen.size() == basis.size());
    }
}

TEST_CASE("fixed diagrams: pinned examples") {
    const auto z2 = make_ring(fixtures::z2());

    // Trivial class: the underlying diagram of the free orbit is two points.
    const auto free_orbit = GStratumDiagram::orbit(z2, 0, 1);
    const auto underlying = free_orbit.fixed_diagram(0);
    CHECK(underlying.dim() == 1);
    CHECK(underlying.strata()[0].size() == 2);
    CHECK(underlying.validate_euler().ok());
    CHECK_FALSE(underlying.classify_point());  // chi = 2

    // Nontrivial class on a free action: empty.
    const auto fixed = free_orbit.fixed_diagram(1);
    for (const auto& bucket : fixed.strata()) CHECK(bucket.empty());

    // Trivial action: fixed diagram of every class is the whole thing.
    const auto triv = GStratumDiagram::trivial_manifold(z2, 1, 2);
    for (std::size_t l = 0; l < 2; ++l) {
        const auto f = triv.fixed_diagram(l);
        CHECK(f.strata()[2].size() == 1);
        CHECK(f.classify_point());
    }
}

TEST_CASE("missing fixed-dimension annotations are an error") {
    const auto z2 = make_ring(fixtures::z2());
    ehom::GStratumComponent c;
    c.quotient_chi = 1;
    c.isotropy = 1;  // fixed by everything, but no annotations
    c.fiber_punctured = {0, 0};
    c.fiber_full = {1, 1};
    GStratumDiagram::Strata strata(1);
    strata[0].push_back(c);
    const GStratumDiagram d(z2, 0, strata);
    CHECK_THROWS_AS(d.fixed_diagram(0), std::invalid_argument);
}

TEST_CASE("fixed-point theorem on generated diagrams") {
    fixtures::Rng rng(1729);
    for (const auto& g : {fixtures::z2(), fixtures::z3(), fixtures::s3()}) {
        const auto ring = make_ring(g);
        for (int trial = 0; trial < 25; ++trial) {
            const auto s = fixtures::random_g_closed(rng, ring, 3, fixtures::pick(rng, 0, 3));
            REQUIRE(s.validate_euler().ok());
            for (std::size_t l = 0; l < ring->class_count(); ++l) {
                const auto f = s.fixed_diagram(l);
                CHECK(f.validate_euler().ok());
            }
        }
        for (int trial = 0; trial < 10; ++trial) {
            const auto t = fixtures::random_g_bounded(rng, ring, 3, fixtures::pick(rng, 1, 3));
            REQUIRE(t.validate_euler().ok());
            for (std::size_t l = 0; l < ring->class_count(); ++l)
                CHECK(t.fixed_diagram(l).validate_euler().ok());
        }
    }
}

TEST_CASE("equivariant boundary classes vanish") {
    fixtures::Rng rng(6174);
    int checked = 0;
    for (const auto& g : {fixtures::z2(), fixtures::z3(), fixtures::s3()}) {
        const auto ring = make_ring(g);
        for (int trial = 0; trial < 40; ++trial) {
            const auto t = fixtures::random_g_bounded(rng, ring, 4, fixtures::pick(rng, 1, 3));
            REQUIRE(t.validate_euler().ok());
            const auto bits = t.boundary().classify();
            for (auto b : bits) CHECK(b == 0);
            ++checked;
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("naive classifier relations") {
    fixtures::Rng rng(314);
    // Union with itself dies.
    const auto ring = make_ring(fixtures::s3());
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = fixtures::random_g_closed(rng, ring, 3, fixtures::pick(rng, 0, 2));
        CHECK_FALSE(s.disjoint_union(s).classify_naive());
    }
    // For odd |H| the naive class is the parity of the V_H coordinates.
    const auto z3 = make_ring(fixtures::z3());
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = fixtures::random_g_closed(rng, z3, 3, fixtures::pick(rng, 0, 2));
        const auto bits = s.classify();
        bool parity = false;
        for (auto b : bits) parity ^= (b != 0);
        CHECK(s.classify_naive() == parity);
    }
}

TEST_CASE("equivariant cone validity mirrors the classifier") {
    fixtures::Rng rng(100003);
    for (const auto& g : {fixtures::z2(), fixtures::s3()}) {
        const auto ring = make_ring(g);
        int nonzero_seen = 0, zero_seen = 0;
        for (int trial = 0; trial < 40; ++trial) {
            const auto s = fixtures::random_g_closed(rng, ring, 3, fixtures::pick(rng, 0, 2));
            const auto bits = s.classify();
            const bool zero = std::all_of(bits.begin(), bits.end(),
                                          [](std::uint8_t b) { return b == 0; });
            CHECK(s.cone().validate_euler().ok() == zero);
            (zero ? zero_seen : nonzero_seen)++;
        }
        CHECK(zero_seen > 0);
        CHECK(nonzero_seen > 0);
    }
}

TEST_CASE("equivariant contract violations") {
    const auto z2 = make_ring(fixtures::z2());
    const auto z3 = make_ring(fixtures::z3());
    const auto a = GStratumDiagram::orbit(z2, 0, 1);
    const auto b = GStratumDiagram::orbit(z3, 0, 1);
    CHECK_THROWS_AS(a.disjoint_union(b), std::invalid_argument);
    CHECK_THROWS_AS(a.cylinder().classify(), std::invalid_argument);
    CHECK_THROWS_AS(a.cylinder().glue(b.cylinder()), std::invalid_argument);
    CHECK_THROWS_AS(GStratumDiagram::orbit(z2, 1, 0).cone().classify(), std::invalid_argument);

    // Invalid diagrams are rejected by the classifier.
    const auto bad = GStratumDiagram::orbit(z2, 1, 0).cone().glue(GStratumDiagram::orbit(z2, 1, 0).cone());
    CHECK_THROWS_AS(bad.classify(), ehom::euler_condition_error);
}
