#include "ehom/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ehom {

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
    std::set<Simplex> all;
    int max_vertex = -1;
    for (const Simplex& facet : facets) {
        if (facet.empty()) throw std::invalid_argument("from_facets: empty facet");
        Simplex f = facet;
        std::sort(f.begin(), f.end());
        if (f.front() < 0) throw std::invalid_argument("from_facets: negative vertex index");
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("from_facets: repeated vertex inside a facet");
        max_vertex = std::max(max_vertex, f.back());
        // Insert every nonempty subset of the facet.
        const std::size_t n = f.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) face.push_back(f[i]);
            all.insert(std::move(face));
        }
    }
    SimplicialComplex c;
    c.vertex_count_ = max_vertex + 1;
    for (const Simplex& s : all) {
        const std::size_t d = s.size() - 1;
        if (c.by_dim_.size() <= d) c.by_dim_.resize(d + 1);
        c.by_dim_[d].push_back(s);
    }
    // std::set iterates lexicographically; per-bucket order inherits that.
    return c;
}

SimplicialComplex SimplicialComplex::point() { return from_facets({{0}}); }

SimplicialComplex SimplicialComplex::sphere(int n) {
    if (n < 0) throw std::invalid_argument("sphere: dimension must be nonnegative");
    // All (n+1)-element subsets of {0,...,n+1}: the boundary of a simplex.
    std::vector<Simplex> facets;
    const int verts = n + 2;
    for (int skip = 0; skip < verts; ++skip) {
        Simplex f;
        for (int v = 0; v < verts; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return from_facets(facets);
}

SimplicialComplex SimplicialComplex::projective_plane() {
    // Antipodal quotient of the icosahedron: each vertex lies in five
    // triangles, every pair of vertices spans an edge.
    return from_facets({{0, 1, 2},
                        {0, 1, 3},
                        {0, 2, 4},
                        {0, 3, 5},
                        {0, 4, 5},
                        {1, 2, 5},
                        {1, 3, 4},
                        {1, 4, 5},
                        {2, 3, 4},
                        {2, 3, 5}});
}

SimplicialComplex SimplicialComplex::torus() {
    // The 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    std::vector<Simplex> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return from_facets(facets);
}

namespace {

// Triangulated m x n grid of squares with both directions wrapped; the
// second wrap reverses orientation when flip is set.
std::vector<Simplex> grid_quotient(int m, int n, bool flip) {
    auto vert = [&](int i, int j) {
        j = ((j % n) + n) % n;
        if (i == m) {
            i = 0;
            if (flip) j = (n - j) % n;
        }
        return i * n + j;
    };
    std::vector<Simplex> facets;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const int a = vert(i, j), b = vert(i + 1, j);
            const int c = vert(i, j + 1), d = vert(i + 1, j + 1);
            facets.push_back({a, b, d});
            facets.push_back({a, c, d});
        }
    return facets;
}

}  // namespace

SimplicialComplex SimplicialComplex::klein_bottle() {
    return from_facets(grid_quotient(4, 4, true));
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    static const std::vector<Simplex> kEmpty;
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return kEmpty;
    return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::simplex_count(int dim) const { return simplices(dim).size(); }

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& bucket : by_dim_) f.push_back(bucket.size());
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        chi += (d % 2 == 0) ? static_cast<long long>(by_dim_[d].size())
                            : -static_cast<long long>(by_dim_[d].size());
    return chi;
}

BitMatrix SimplicialComplex::boundary_matrix(int j) const {
    if (j < 1) throw std::invalid_argument("boundary_matrix: degree must be >= 1");
    const auto& high = simplices(j);
    const auto& low = simplices(j - 1);
    BitMatrix m(high.size(), low.size());
    for (std::size_t r = 0; r < high.size(); ++r) {
        Simplex face = high[r];
        for (std::size_t skip = 0; skip < high[r].size(); ++skip) {
            face = high[r];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(skip));
            const auto it = std::lower_bound(low.begin(), low.end(), face);
            // Closure guarantees the face is present.
            m.set(r, static_cast<std::size_t>(it - low.begin()), true);
        }
    }
    return m;
}

BettiVector SimplicialComplex::betti_mod2() const {
    const int dim = dimension();
    BettiVector b;
    std::size_t rank_above = 0;  // rank of boundary_{j+1}, computed downward
    std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 2, 0);
    for (int j = 1; j <= dim; ++j) ranks[static_cast<std::size_t>(j)] = rank(boundary_matrix(j));
    for (int j = 0; j <= dim; ++j) {
        const std::size_t f = simplex_count(j);
        const std::size_t rank_j = ranks[static_cast<std::size_t>(j)];
        rank_above = (j + 1 <= dim) ? ranks[static_cast<std::size_t>(j) + 1] : 0;
        b.push_back(f - rank_j - rank_above);
    }
    return b;
}

SimplicialComplex SimplicialComplex::cone() const {
    const int apex = vertex_count_;
    std::vector<Simplex> facets;
    bool any = false;
    for (const auto& bucket : by_dim_)
        for (const Simplex& s : bucket) {
            any = true;
            Simplex f = s;
            f.push_back(apex);
            facets.push_back(std::move(f));
        }
    if (!any) return point();
    return from_facets(facets);
}

SimplicialComplex SimplicialComplex::disjoint_union(const SimplicialComplex& other) const {
    std::vector<Simplex> facets = this->facets();
    for (Simplex f : other.facets()) {
        for (int& v : f) v += vertex_count_;
        facets.push_back(std::move(f));
    }
    SimplicialComplex out = from_facets(facets);
    out.vertex_count_ = vertex_count_ + other.vertex_count_;
    return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
        const auto& above = (d + 1 < by_dim_.size()) ? by_dim_[d + 1] : std::vector<Simplex>{};
        for (const Simplex& s : by_dim_[d]) {
            bool maximal = true;
            for (const Simplex& t : above) {
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) out.push_back(s);
        }
    }
    return out;
}

}  // namespace ehom
