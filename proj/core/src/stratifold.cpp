#include "ehom/stratifold.hpp"

#include <utility>

namespace ehom {

namespace {

std::shared_ptr<const StratumDiagram> share(StratumDiagram d) {
    return std::make_shared<const StratumDiagram>(std::move(d));
}

}  // namespace

StratumDiagram::StratumDiagram(int dim, Strata strata,
                               std::shared_ptr<const StratumDiagram> boundary)
    : dim_(dim), strata_(std::move(strata)), boundary_(std::move(boundary)) {
    if (dim_ < 0) throw std::invalid_argument("StratumDiagram: negative dimension");
    if (strata_.size() != static_cast<std::size_t>(dim_) + 1)
        throw std::invalid_argument("StratumDiagram: strata list must have dim+1 entries");
    if (boundary_) {
        if (boundary_->dim_ != dim_ - 1)
            throw std::invalid_argument("StratumDiagram: boundary dimension must be dim-1");
        if (!boundary_->closed())
            throw std::invalid_argument("StratumDiagram: boundary must itself be closed");
    }
    for (const StratumComponent& c : strata_.back())
        if (!(c.fiber == FiberRecord{}))
            throw std::invalid_argument("StratumDiagram: top stratum must carry trivial fibers");
}

StratumDiagram StratumDiagram::empty(int dim) {
    return StratumDiagram(dim, Strata(static_cast<std::size_t>(dim) + 1));
}

StratumDiagram StratumDiagram::from_closed_manifold(long long chi, int dim) {
    Strata strata(static_cast<std::size_t>(dim) + 1);
    strata.back().push_back(StratumComponent{(chi % 2 + 2) % 2 == 1, FiberRecord{}});
    return StratumDiagram(dim, std::move(strata));
}

StratumDiagram StratumDiagram::point(int dim) { return from_closed_manifold(1, 0).pad(dim); }

StratumDiagram StratumDiagram::circle() { return from_closed_manifold(0, 1); }

StratumDiagram StratumDiagram::interval() {
    Strata boundary_strata(1);
    boundary_strata[0].push_back(StratumComponent{true, FiberRecord{}});
    boundary_strata[0].push_back(StratumComponent{true, FiberRecord{}});
    StratumDiagram two_points(0, std::move(boundary_strata));

    Strata strata(2);
    strata[1].push_back(StratumComponent{true, FiberRecord{}});  // chi([0,1]) = 1
    return StratumDiagram(1, std::move(strata), share(std::move(two_points)));
}

const StratumDiagram& StratumDiagram::boundary() const {
    if (!boundary_) throw std::invalid_argument("StratumDiagram: closed diagram has no boundary");
    return *boundary_;
}

StratumDiagram StratumDiagram::pad(int n) const {
    if (!closed()) throw std::invalid_argument("pad: diagram must be closed");
    if (n < dim_) throw std::invalid_argument("pad: target dimension below diagram dimension");
    Strata strata = strata_;
    strata.resize(static_cast<std::size_t>(n) + 1);
    return StratumDiagram(n, std::move(strata));
}

StratumDiagram StratumDiagram::cone() const {
    if (!closed()) throw std::invalid_argument("cone: base must be closed");
    Strata strata(static_cast<std::size_t>(dim_) + 2);
    const bool base_chi = parity_sum();
    StratumComponent apex;
    apex.chi_parity = true;  // the cone point
    apex.fiber.punctured_parity = base_chi;
    apex.fiber.full_parity = !base_chi;
    strata[0].push_back(apex);
    // chi(S_i x (0,1]) = chi(S_i): interior strata keep their records.
    for (int i = 0; i <= dim_; ++i) strata[static_cast<std::size_t>(i) + 1] = strata_[static_cast<std::size_t>(i)];
    return StratumDiagram(dim_ + 1, std::move(strata), share(*this));
}

StratumDiagram StratumDiagram::product(const StratumDiagram& other) const {
    if (!closed() && !other.closed())
        throw std::invalid_argument("product: at most one factor may have a boundary");
    const int n = dim_ + other.dim_;
    Strata strata(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= dim_; ++i)
        for (int j = 0; j <= other.dim_; ++j)
            for (const StratumComponent& a : strata_[static_cast<std::size_t>(i)])
                for (const StratumComponent& b : other.strata_[static_cast<std::size_t>(j)]) {
                    StratumComponent p;
                    p.chi_parity = a.chi_parity && b.chi_parity;
                    const bool ea = a.fiber.punctured_parity, fa = a.fiber.full_parity;
                    const bool eb = b.fiber.punctured_parity, fb = b.fiber.full_parity;
                    p.fiber.punctured_parity = (ea && fb) ^ (fa && eb) ^ (ea && eb);
                    p.fiber.full_parity = fa && fb;
                    strata[static_cast<std::size_t>(i + j)].push_back(p);
                }
    std::shared_ptr<const StratumDiagram> bnd;
    if (!closed())
        bnd = share(boundary_->product(other));
    else if (!other.closed())
        bnd = share(product(*other.boundary_));
    return StratumDiagram(n, std::move(strata), std::move(bnd));
}

StratumDiagram StratumDiagram::disjoint_union(const StratumDiagram& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("disjoint_union: dimension mismatch");
    if (closed() != other.closed())
        throw std::invalid_argument("disjoint_union: both diagrams must be closed or both bounded");
    Strata strata = strata_;
    for (int i = 0; i <= dim_; ++i)
        strata[static_cast<std::size_t>(i)].insert(strata[static_cast<std::size_t>(i)].end(),
                                                   other.strata_[static_cast<std::size_t>(i)].begin(),
                                                   other.strata_[static_cast<std::size_t>(i)].end());
    std::shared_ptr<const StratumDiagram> bnd;
    if (!closed()) bnd = share(boundary_->disjoint_union(*other.boundary_));
    return StratumDiagram(dim_, std::move(strata), std::move(bnd));
}

StratumDiagram StratumDiagram::glue(const StratumDiagram& other) const {
    if (closed() || other.closed()) throw std::invalid_argument("glue: both diagrams must have a boundary");
    if (!(*boundary_ == *other.boundary_))
        throw std::invalid_argument("glue: boundaries must be equal as diagrams");
    Strata strata(static_cast<std::size_t>(dim_) + 1);
    for (int i = 0; i <= dim_; ++i) {
        auto& bucket = strata[static_cast<std::size_t>(i)];
        bucket = strata_[static_cast<std::size_t>(i)];
        const auto& theirs = other.strata_[static_cast<std::size_t>(i)];
        bucket.insert(bucket.end(), theirs.begin(), theirs.end());
        // Seam correction: chi(glued_i) = chi(t1_i) + chi(t2_i) - chi(bnd_{i-1});
        // mod 2 the subtraction is another copy of the boundary components,
        // whose fibers persist along the bicollar.
        if (i >= 1) {
            const auto& seam = boundary_->strata_[static_cast<std::size_t>(i) - 1];
            bucket.insert(bucket.end(), seam.begin(), seam.end());
        }
    }
    return StratumDiagram(dim_, std::move(strata));
}

ValidationReport StratumDiagram::validate_euler() const {
    ValidationReport report;
    for (int i = 0; i <= dim_; ++i) {
        const auto& bucket = strata_[static_cast<std::size_t>(i)];
        for (std::size_t c = 0; c < bucket.size(); ++c)
            if (bucket[c].fiber.punctured_parity)
                report.failures.push_back({false, i, static_cast<int>(c)});
    }
    if (boundary_) {
        const ValidationReport inner = boundary_->validate_euler();
        for (const auto& f : inner.failures)
            report.failures.push_back({true, f.stratum, f.component});
    }
    return report;
}

bool StratumDiagram::parity_sum() const {
    bool parity = false;
    for (const auto& bucket : strata_)
        for (const StratumComponent& c : bucket) parity ^= c.chi_parity;
    return parity;
}

void StratumDiagram::require_euler(const char* what) const {
    if (!validate_euler().ok())
        throw euler_condition_error(std::string(what) + ": diagram fails the Euler condition");
}

bool StratumDiagram::chi_parity() const {
    require_euler("chi_parity");
    return parity_sum();
}

bool StratumDiagram::boundary_chi_parity() const {
    if (closed()) throw std::invalid_argument("boundary_chi_parity: diagram is closed");
    require_euler("boundary_chi_parity");
    // Difference of the two stratum-sum evaluations of chi(T): the
    // with-boundary form adds chi(boundary) to the plain form.
    const bool with_boundary_term = parity_sum() ^ boundary_->parity_sum();
    const bool plain = parity_sum();
    return with_boundary_term ^ plain;
}

bool StratumDiagram::classify_point() const {
    if (!closed()) throw std::invalid_argument("classify_point: diagram must be closed");
    require_euler("classify_point");
    return parity_sum();
}

bool operator==(const StratumDiagram& a, const StratumDiagram& b) {
    if (a.dim_ != b.dim_ || a.strata_ != b.strata_) return false;
    if (static_cast<bool>(a.boundary_) != static_cast<bool>(b.boundary_)) return false;
    if (a.boundary_ && !(*a.boundary_ == *b.boundary_)) return false;
    return true;
}

}  // namespace ehom
