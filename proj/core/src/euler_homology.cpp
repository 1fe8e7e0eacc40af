#include "ehom/euler_homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehom {

void PolyClass::add_term(int degree, int t_exp, const BitVector& chain) {
    if (chain.is_zero()) return;
    const Key key{degree, t_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, chain);
        return;
    }
    it->second ^= chain;
    if (it->second.is_zero()) terms_.erase(it);
}

PolyClass& PolyClass::operator^=(const PolyClass& other) {
    for (const auto& [key, chain] : other.terms_) add_term(key.first, key.second, chain);
    return *this;
}

SWData& SWData::operator^=(const SWData& other) {
    if (other.manifold_dim != manifold_dim)
        throw std::invalid_argument("SWData xor: manifold dimensions differ");
    for (const auto& [j, chain] : other.classes) {
        auto it = classes.find(j);
        if (it == classes.end()) {
            classes.emplace(j, chain);
            continue;
        }
        it->second ^= chain;
        if (it->second.is_zero()) classes.erase(it);
    }
    return *this;
}

std::vector<std::size_t> euler_homology_dims(const SimplicialComplex& x, int n_max) {
    if (n_max < 0) throw std::invalid_argument("euler_homology_dims: n_max must be nonnegative");
    const BettiVector b = x.betti_mod2();
    std::vector<std::size_t> dims;
    dims.reserve(static_cast<std::size_t>(n_max) + 1);
    std::size_t acc = 0;
    for (int n = 0; n <= n_max; ++n) {
        if (n < static_cast<int>(b.size())) acc += b[static_cast<std::size_t>(n)];
        dims.push_back(acc);
    }
    return dims;
}

bool bordism_point_class(const StratumDiagram& s) { return s.classify_point(); }

bool is_cycle(const SimplicialComplex& x, int degree, const BitVector& chain) {
    if (chain.size() != x.simplex_count(degree))
        throw std::invalid_argument("is_cycle: chain length does not match simplex count");
    if (degree == 0) return true;
    const BitMatrix bnd = x.boundary_matrix(degree);
    BitVector image(bnd.cols());
    for (std::size_t r = 0; r < bnd.rows(); ++r)
        if (chain.get(r)) image ^= bnd.row(r);
    return image.is_zero();
}

bool homologous(const SimplicialComplex& x, int degree, const BitVector& a, const BitVector& b) {
    if (a.size() != x.simplex_count(degree) || b.size() != x.simplex_count(degree))
        throw std::invalid_argument("homologous: chain length does not match simplex count");
    const BitVector diff = a ^ b;
    if (diff.is_zero()) return true;
    if (degree + 1 > x.dimension()) return false;
    // Is diff a combination of boundaries of (degree+1)-simplices?
    const BitMatrix bnd = x.boundary_matrix(degree + 1);
    return solve(bnd.transpose(), diff).has_value();
}

PolyClass sw_poly_class(const SWData& sw, int n, const SimplicialComplex& target) {
    if (n < sw.manifold_dim)
        throw std::invalid_argument("sw_poly_class: padding degree below manifold dimension");
    PolyClass out;
    for (const auto& [j, chain] : sw.classes) {
        if (j < 0 || j > sw.manifold_dim)
            throw std::invalid_argument("sw_poly_class: class degree outside 0..manifold_dim");
        if (!is_cycle(target, j, chain))
            throw std::invalid_argument("sw_poly_class: supplied class is not a cycle");
        out.add_term(j, n - j, chain);
    }
    return out;
}

PolyClass module_action(long long chi_scalar, int dim_shift, const PolyClass& c) {
    PolyClass out;
    if (((chi_scalar % 2) + 2) % 2 == 0) return out;
    for (const auto& [key, chain] : c.terms()) out.add_term(key.first, key.second + dim_shift, chain);
    return out;
}

SWData sw_manifold_to_point(long long chi, int dim) {
    SWData sw;
    sw.manifold_dim = dim;
    BitVector top(1);
    top.set(0, ((chi % 2) + 2) % 2 == 1);
    if (!top.is_zero()) sw.classes.emplace(0, top);
    return sw;
}

SWData sw_circle_identity() {
    SWData sw;
    sw.manifold_dim = 1;
    sw.classes.emplace(1, BitVector::from_bits({1, 1, 1}));
    return sw;
}

}  // namespace ehom
