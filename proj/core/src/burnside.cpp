#include "ehom/burnside.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ehom {

BurnsideRing::BurnsideRing(PermGroup h) : group_(std::move(h)) {
    classes_ = subgroup_classes(group_);
    const std::size_t n = classes_.size();
    marks_.assign(n, std::vector<long long>(n, 0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            marks_[k][l] = static_cast<long long>(
                fixed_coset_count(group_, classes_[k].representative, classes_[l].representative));
    for (std::size_t k = 0; k < n; ++k) class_lookup_[classes_[k].representative] = k;
}

std::string BurnsideRing::class_label(std::size_t k) const {
    if (k >= classes_.size()) throw std::out_of_range("class_label: class index out of range");
    std::size_t nth = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (classes_[i].order == classes_[k].order) ++nth;
    return "order:" + std::to_string(classes_[k].order) + "#" + std::to_string(nth);
}

std::size_t BurnsideRing::class_of(const std::vector<int>& subgroup_elements) const {
    const auto it = class_lookup_.find(canonical_conjugate(group_, subgroup_elements));
    if (it == class_lookup_.end()) throw std::invalid_argument("class_of: not a subgroup class");
    return it->second;
}

std::vector<long long> BurnsideRing::basis(std::size_t k) const {
    if (k >= classes_.size()) throw std::out_of_range("basis: class index out of range");
    std::vector<long long> a(classes_.size(), 0);
    a[k] = 1;
    return a;
}

std::vector<long long> BurnsideRing::character(const std::vector<long long>& a) const {
    if (a.size() != classes_.size()) throw std::invalid_argument("character: coefficient length mismatch");
    std::vector<long long> chi(classes_.size(), 0);
    for (std::size_t l = 0; l < classes_.size(); ++l)
        for (std::size_t k = 0; k < classes_.size(); ++k) chi[l] += a[k] * marks_[k][l];
    return chi;
}

namespace {

std::vector<long long> solve_character(const std::vector<std::vector<long long>>& marks,
                                       const std::vector<long long>& chi, bool user_input) {
    const std::size_t n = marks.size();
    std::vector<long long> a(n, 0);
    // The marks matrix is lower triangular with positive diagonal in the
    // canonical order, so back-substitute from the largest class down.
    for (std::size_t step = n; step-- > 0;) {
        long long rest = 0;
        for (std::size_t k = step + 1; k < n; ++k) rest += a[k] * marks[k][step];
        const long long numer = chi[step] - rest;
        const long long diag = marks[step][step];
        if (numer % diag != 0) {
            if (user_input)
                throw std::invalid_argument("from_character: not an integral character");
            throw std::logic_error("multiply: non-integral solve, marks matrix is inconsistent");
        }
        a[step] = numer / diag;
    }
    return a;
}

}  // namespace

std::vector<long long> BurnsideRing::from_character(const std::vector<long long>& chi) const {
    if (chi.size() != classes_.size())
        throw std::invalid_argument("from_character: character length mismatch");
    return solve_character(marks_, chi, true);
}

std::vector<long long> BurnsideRing::multiply(const std::vector<long long>& a,
                                              const std::vector<long long>& b) const {
    const std::vector<long long> ca = character(a);
    const std::vector<long long> cb = character(b);
    std::vector<long long> cc(classes_.size(), 0);
    for (std::size_t l = 0; l < classes_.size(); ++l) cc[l] = ca[l] * cb[l];
    return solve_character(marks_, cc, false);
}

std::vector<std::size_t> BurnsideRing::vh_basis() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < classes_.size(); ++k)
        if (classes_[k].norm_quotient % 2 == 1) out.push_back(k);
    return out;
}

std::vector<std::uint8_t> BurnsideRing::project_vh(const std::vector<long long>& a) const {
    if (a.size() != classes_.size())
        throw std::invalid_argument("project_vh: coefficient length mismatch");
    std::vector<std::uint8_t> bits;
    for (std::size_t k : vh_basis()) bits.push_back(static_cast<std::uint8_t>(((a[k] % 2) + 2) % 2));
    return bits;
}

std::vector<long long> BurnsideRing::equivariant_chi(const HCWComplex& x) const {
    std::vector<long long> coeffs(classes_.size(), 0);
    for (const auto& layer : x.layers) {
        if (layer.dim < 0) throw std::invalid_argument("equivariant_chi: negative cell dimension");
        const std::vector<std::size_t> counts = orbit_type_counts(group_, classes_, layer.cells);
        const long long sign = (layer.dim % 2 == 0) ? 1 : -1;
        for (std::size_t k = 0; k < classes_.size(); ++k)
            coeffs[k] += sign * static_cast<long long>(counts[k]);
    }
    return coeffs;
}

GroupAction BurnsideRing::coset_action(std::size_t k) const {
    if (k >= classes_.size()) throw std::out_of_range("coset_action: class index out of range");
    const std::vector<int>& rep = classes_[k].representative;
    const int n = static_cast<int>(group_.order());
    // Canonical coset key: the minimal element index in xK.
    std::vector<int> coset_key(static_cast<std::size_t>(n), -1);
    std::vector<int> keys;
    for (int x = 0; x < n; ++x) {
        if (coset_key[static_cast<std::size_t>(x)] != -1) continue;
        int best = x;
        std::vector<int> members;
        for (int e : rep) {
            const int y = group_.mul(x, e);
            members.push_back(y);
            best = std::min(best, y);
        }
        for (int y : members) coset_key[static_cast<std::size_t>(y)] = best;
        keys.push_back(best);
    }
    std::sort(keys.begin(), keys.end());
    std::map<int, int> point_of;
    for (std::size_t i = 0; i < keys.size(); ++i) point_of[keys[i]] = static_cast<int>(i);

    GroupAction action;
    action.points = static_cast<int>(keys.size());
    for (const Perm& gen : group_.generators()) {
        const int gidx = group_.index_of(gen);
        std::vector<int> img(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i)
            img[i] = point_of.at(coset_key[static_cast<std::size_t>(group_.mul(gidx, keys[i]))]);
        action.per_generator.push_back(Perm(std::move(img)));
    }
    return action;
}

BurnsideRing BurnsideRing::subring(std::size_t k) const {
    if (k >= classes_.size()) throw std::out_of_range("subring: class index out of range");
    return BurnsideRing(subgroup_as_group(group_, classes_[k].representative));
}

std::vector<SubgroupClass> vh_basis_of_subgroup(const PermGroup& g,
                                                const std::vector<int>& h_elements) {
    const BurnsideRing ring(subgroup_as_group(g, h_elements));
    std::vector<SubgroupClass> out;
    for (std::size_t k : ring.vh_basis()) out.push_back(ring.classes()[k]);
    return out;
}

// ---------------------------------------------------------------------------
// GStratumDiagram

namespace {

std::shared_ptr<const GStratumDiagram> share(GStratumDiagram d) {
    return std::make_shared<const GStratumDiagram>(std::move(d));
}

bool parity(long long v) { return ((v % 2) + 2) % 2 == 1; }

}  // namespace

GStratumDiagram::GStratumDiagram(std::shared_ptr<const BurnsideRing> ring, int dim, Strata strata,
                                 std::shared_ptr<const GStratumDiagram> boundary)
    : ring_(std::move(ring)), dim_(dim), strata_(std::move(strata)), boundary_(std::move(boundary)) {
    if (!ring_) throw std::invalid_argument("GStratumDiagram: null ring");
    if (dim_ < 0) throw std::invalid_argument("GStratumDiagram: negative dimension");
    if (strata_.size() != static_cast<std::size_t>(dim_) + 1)
        throw std::invalid_argument("GStratumDiagram: strata list must have dim+1 entries");
    if (boundary_) {
        if (boundary_->dim_ != dim_ - 1)
            throw std::invalid_argument("GStratumDiagram: boundary dimension must be dim-1");
        if (!boundary_->closed())
            throw std::invalid_argument("GStratumDiagram: boundary must itself be closed");
        if (!(boundary_->ring() == *ring_))
            throw std::invalid_argument("GStratumDiagram: boundary acts under a different group");
    }
    std::map<std::size_t, std::size_t> sub_class_counts;
    for (const auto& bucket : strata_)
        for (const GStratumComponent& c : bucket) {
            if (c.isotropy >= ring_->class_count())
                throw std::invalid_argument("GStratumDiagram: isotropy class out of range");
            auto it = sub_class_counts.find(c.isotropy);
            if (it == sub_class_counts.end())
                it = sub_class_counts
                         .emplace(c.isotropy,
                                  subgroup_classes(subgroup_as_group(
                                                       ring_->group(),
                                                       ring_->classes()[c.isotropy].representative))
                                      .size())
                         .first;
            check_component(c, it->second);
        }
}

void GStratumDiagram::check_component(const GStratumComponent& c, std::size_t sub_classes) const {
    if (c.fiber_punctured.size() != sub_classes || c.fiber_full.size() != sub_classes)
        throw std::invalid_argument(
            "GStratumDiagram: fiber character length must match the isotropy subgroup's classes");
    for (const auto& [cls, d] : c.fixed_dims)
        if (cls >= ring_->class_count() || d < 0 || d > dim_)
            throw std::invalid_argument("GStratumDiagram: bad fixed-dimension annotation");
}

GStratumDiagram GStratumDiagram::empty(std::shared_ptr<const BurnsideRing> ring, int dim) {
    return GStratumDiagram(std::move(ring), dim, Strata(static_cast<std::size_t>(dim) + 1));
}

GStratumDiagram GStratumDiagram::orbit(std::shared_ptr<const BurnsideRing> ring, std::size_t k,
                                       int dim) {
    if (!ring) throw std::invalid_argument("orbit: null ring");
    if (k >= ring->class_count()) throw std::out_of_range("orbit: class index out of range");
    const std::size_t sub_classes = ring->subring(k).class_count();
    GStratumComponent c;
    c.quotient_chi = 1;
    c.isotropy = k;
    c.fiber_punctured.assign(sub_classes, 0);
    c.fiber_full.assign(sub_classes, 1);
    for (std::size_t l = 0; l < ring->class_count(); ++l)
        if (ring->marks()[k][l] > 0) c.fixed_dims[l] = 0;
    Strata strata(static_cast<std::size_t>(dim) + 1);
    strata[0].push_back(std::move(c));
    return GStratumDiagram(std::move(ring), dim, std::move(strata));
}

GStratumDiagram GStratumDiagram::trivial_manifold(std::shared_ptr<const BurnsideRing> ring,
                                                  long long chi, int dim) {
    if (!ring) throw std::invalid_argument("trivial_manifold: null ring");
    const std::size_t full = ring->full_class();
    const std::size_t sub_classes = ring->class_count();  // the subring of H is H itself
    GStratumComponent c;
    c.quotient_chi = chi;
    c.isotropy = full;
    c.fiber_punctured.assign(sub_classes, 0);
    c.fiber_full.assign(sub_classes, 1);
    for (std::size_t l = 0; l < ring->class_count(); ++l) c.fixed_dims[l] = dim;
    Strata strata(static_cast<std::size_t>(dim) + 1);
    strata.back().push_back(std::move(c));
    return GStratumDiagram(std::move(ring), dim, std::move(strata));
}

const GStratumDiagram& GStratumDiagram::boundary() const {
    if (!boundary_) throw std::invalid_argument("GStratumDiagram: closed diagram has no boundary");
    return *boundary_;
}

GStratumDiagram GStratumDiagram::pad(int n) const {
    if (!closed()) throw std::invalid_argument("pad: diagram must be closed");
    if (n < dim_) throw std::invalid_argument("pad: target dimension below diagram dimension");
    Strata strata = strata_;
    strata.resize(static_cast<std::size_t>(n) + 1);
    return GStratumDiagram(ring_, n, std::move(strata));
}

namespace {

GStratumComponent shift_fixed_dims(GStratumComponent c) {
    for (auto& [cls, d] : c.fixed_dims) ++d;
    return c;
}

}  // namespace

GStratumDiagram GStratumDiagram::cone() const {
    if (!closed()) throw std::invalid_argument("cone: base must be closed");
    Strata strata(static_cast<std::size_t>(dim_) + 2);
    // Apex: fixed by everything, fiber character = fixed-set chi of the base.
    const std::size_t n_classes = ring_->class_count();
    GStratumComponent apex;
    apex.quotient_chi = 1;
    apex.isotropy = ring_->full_class();
    apex.fiber_punctured.assign(n_classes, 0);
    apex.fiber_full.assign(n_classes, 1);
    for (std::size_t l = 0; l < n_classes; ++l) {
        long long chi_l = 0;
        for (const auto& bucket : strata_)
            for (const GStratumComponent& c : bucket)
                chi_l += c.quotient_chi * ring_->marks()[c.isotropy][l];
        apex.fiber_punctured[l] = chi_l;
        apex.fixed_dims[l] = 0;
    }
    strata[0].push_back(std::move(apex));
    for (int i = 0; i <= dim_; ++i)
        for (const GStratumComponent& c : strata_[static_cast<std::size_t>(i)])
            strata[static_cast<std::size_t>(i) + 1].push_back(shift_fixed_dims(c));
    return GStratumDiagram(ring_, dim_ + 1, std::move(strata), share(*this));
}

GStratumDiagram GStratumDiagram::cylinder() const {
    if (!closed()) throw std::invalid_argument("cylinder: diagram must be closed");
    Strata strata(static_cast<std::size_t>(dim_) + 2);
    for (int i = 0; i <= dim_; ++i)
        for (const GStratumComponent& c : strata_[static_cast<std::size_t>(i)])
            strata[static_cast<std::size_t>(i) + 1].push_back(shift_fixed_dims(c));
    return GStratumDiagram(ring_, dim_ + 1, std::move(strata), share(disjoint_union(*this)));
}

GStratumDiagram GStratumDiagram::disjoint_union(const GStratumDiagram& other) const {
    if (!(*ring_ == other.ring())) throw std::invalid_argument("disjoint_union: acting groups differ");
    if (dim_ != other.dim_) throw std::invalid_argument("disjoint_union: dimension mismatch");
    if (closed() != other.closed())
        throw std::invalid_argument("disjoint_union: both diagrams must be closed or both bounded");
    Strata strata = strata_;
    for (int i = 0; i <= dim_; ++i)
        strata[static_cast<std::size_t>(i)].insert(strata[static_cast<std::size_t>(i)].end(),
                                                   other.strata_[static_cast<std::size_t>(i)].begin(),
                                                   other.strata_[static_cast<std::size_t>(i)].end());
    std::shared_ptr<const GStratumDiagram> bnd;
    if (!closed()) bnd = share(boundary_->disjoint_union(*other.boundary_));
    return GStratumDiagram(ring_, dim_, std::move(strata), std::move(bnd));
}

GStratumDiagram GStratumDiagram::glue(const GStratumDiagram& other) const {
    if (closed() || other.closed()) throw std::invalid_argument("glue: both diagrams must have a boundary");
    if (!(*boundary_ == *other.boundary_))
        throw std::invalid_argument("glue: boundaries must be equal as diagrams");
    Strata strata(static_cast<std::size_t>(dim_) + 1);
    for (int i = 0; i <= dim_; ++i) {
        auto& bucket = strata[static_cast<std::size_t>(i)];
        bucket = strata_[static_cast<std::size_t>(i)];
        const auto& theirs = other.strata_[static_cast<std::size_t>(i)];
        bucket.insert(bucket.end(), theirs.begin(), theirs.end());
        if (i >= 1)
            for (const GStratumComponent& c : boundary_->strata_[static_cast<std::size_t>(i) - 1]) {
                GStratumComponent seam = shift_fixed_dims(c);
                seam.quotient_chi = -seam.quotient_chi;
                bucket.push_back(std::move(seam));
            }
    }
    return GStratumDiagram(ring_, dim_, std::move(strata));
}

ValidationReport GStratumDiagram::validate_euler() const {
    ValidationReport report;
    std::map<std::size_t, BurnsideRing> subrings;
    for (int i = 0; i <= dim_; ++i) {
        const auto& bucket = strata_[static_cast<std::size_t>(i)];
        for (std::size_t c = 0; c < bucket.size(); ++c) {
            auto it = subrings.find(bucket[c].isotropy);
            if (it == subrings.end())
                it = subrings.emplace(bucket[c].isotropy, ring_->subring(bucket[c].isotropy)).first;
            const BurnsideRing& sub = it->second;
            const std::vector<long long> a = sub.from_character(bucket[c].fiber_punctured);
            const std::vector<std::uint8_t> bits = sub.project_vh(a);
            if (std::any_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; }))
                report.failures.push_back({false, i, static_cast<int>(c)});
        }
    }
    if (boundary_) {
        const ValidationReport inner = boundary_->validate_euler();
        for (const auto& f : inner.failures)
            report.failures.push_back({true, f.stratum, f.component});
    }
    return report;
}

StratumDiagram GStratumDiagram::fixed_diagram(std::size_t l) const {
    if (l >= ring_->class_count()) throw std::out_of_range("fixed_diagram: class index out of range");
    const PermGroup& h = ring_->group();
    const std::vector<int>& l_rep = ring_->classes()[l].representative;

    StratumDiagram::Strata out(static_cast<std::size_t>(dim_) + 1);
    std::map<std::size_t, BurnsideRing> subrings;
    for (int i = 0; i <= dim_; ++i)
        for (const GStratumComponent& c : strata_[static_cast<std::size_t>(i)]) {
            if (ring_->marks()[c.isotropy][l] == 0) continue;  // empty fixed part
            const auto ann = c.fixed_dims.find(l);
            if (ann == c.fixed_dims.end())
                throw std::invalid_argument(
                    "fixed_diagram: missing fixed-dimension annotation for a nonempty fixed part");
            if (ann->second > i)
                throw std::invalid_argument("fixed_diagram: fixed part above its stratum dimension");

            auto it = subrings.find(c.isotropy);
            if (it == subrings.end())
                it = subrings.emplace(c.isotropy, ring_->subring(c.isotropy)).first;
            const BurnsideRing& sub = it->second;
            const std::vector<int>& k_rep = ring_->classes()[c.isotropy].representative;
            std::vector<bool> in_k(h.order(), false);
            for (int e : k_rep) in_k[static_cast<std::size_t>(e)] = true;

            // One piece per l-fixed coset xK, with the fiber taken at the
            // class of x^-1 l x inside K.
            std::vector<bool> seen(h.order(), false);
            for (int x = 0; x < static_cast<int>(h.order()); ++x) {
                if (seen[static_cast<std::size_t>(x)]) continue;
                for (int e : k_rep) seen[static_cast<std::size_t>(h.mul(x, e))] = true;
                const int xinv = h.inv(x);
                std::vector<int> fused;
                bool fixed = true;
                for (int e : l_rep) {
                    const int conj = h.mul(h.mul(xinv, e), x);
                    if (!in_k[static_cast<std::size_t>(conj)]) {
                        fixed = false;
                        break;
                    }
                    fused.push_back(conj);
                }
                if (!fixed) continue;
                // Translate the fused subgroup into the subgroup's own indexing.
                std::vector<int> fused_local;
                for (int e : fused)
                    fused_local.push_back(sub.group().index_of(h.elements()[static_cast<std::size_t>(e)]));
                std::sort(fused_local.begin(), fused_local.end());
                fused_local.erase(std::unique(fused_local.begin(), fused_local.end()), fused_local.end());
                const std::size_t j = sub.class_of(fused_local);

                StratumComponent piece;
                piece.chi_parity = parity(c.quotient_chi);
                piece.fiber.punctured_parity = parity(c.fiber_punctured[j]);
                piece.fiber.full_parity = parity(c.fiber_full[j]);
                out[static_cast<std::size_t>(ann->second)].push_back(piece);
            }
        }

    std::shared_ptr<const StratumDiagram> bnd;
    if (boundary_) bnd = std::make_shared<const StratumDiagram>(boundary_->fixed_diagram(l));
    return StratumDiagram(dim_, std::move(out), std::move(bnd));
}

std::vector<long long> GStratumDiagram::equivariant_chi() const {
    std::vector<long long> coeffs(ring_->class_count(), 0);
    for (const auto& bucket : strata_)
        for (const GStratumComponent& c : bucket) coeffs[c.isotropy] += c.quotient_chi;
    return coeffs;
}

std::vector<std::uint8_t> GStratumDiagram::classify() const {
    if (!closed()) throw std::invalid_argument("classify: diagram must be closed");
    if (!validate_euler().ok())
        throw euler_condition_error("classify: diagram fails the equivariant Euler condition");
    return ring_->project_vh(equivariant_chi());
}

bool GStratumDiagram::classify_naive() const {
    if (!closed()) throw std::invalid_argument("classify_naive: diagram must be closed");
    const StratumDiagram underlying = fixed_diagram(ring_->trivial_class());
    if (!underlying.validate_euler().ok())
        throw euler_condition_error("classify_naive: underlying diagram fails the Euler condition");
    return underlying.chi_parity();
}

bool operator==(const GStratumDiagram& a, const GStratumDiagram& b) {
    if (!(a.ring() == b.ring()) || a.dim_ != b.dim_ || a.strata_ != b.strata_) return false;
    if (static_cast<bool>(a.boundary_) != static_cast<bool>(b.boundary_)) return false;
    if (a.boundary_ && !(*a.boundary_ == *b.boundary_)) return false;
    return true;
}

}  // namespace ehom
