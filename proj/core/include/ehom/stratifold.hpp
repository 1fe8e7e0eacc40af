#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

namespace ehom {

/// Raised when an operation needs the Euler condition and validation fails.
class euler_condition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Local transverse structure at a stratum component: the parities of the
/// Euler characteristics of the link fiber F and of F minus its bottom
/// point F0. The trivial fiber (F = F0, a point) is the default.
struct FiberRecord {
    bool full_parity = true;        // chi(F) mod 2
    bool punctured_parity = false;  // chi(F \ F0) mod 2; zero is the Euler condition

    friend bool operator==(const FiberRecord&, const FiberRecord&) = default;
};

/// One connected component of a stratum.
struct StratumComponent {
    bool chi_parity = false;  // chi of the component mod 2
    FiberRecord fiber;

    friend bool operator==(const StratumComponent&, const StratumComponent&) = default;
};

struct ValidationReport {
    struct Failure {
        bool in_boundary = false;
        int stratum = 0;
        int component = 0;

        friend bool operator==(const Failure&, const Failure&) = default;
    };
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }
};

/// Combinatorial model of a p-stratifold: one component list per stratum
/// dimension 0..dim, plus an optional boundary diagram of dimension dim-1.
/// Only chi parities are tracked; that is exactly the data the boundary
/// parity theorem and the point classifier consume. For bounded diagrams
/// the stored stratum parities refer to the full strata including the
/// boundary collar pieces. Immutable value type.
class StratumDiagram {
public:
    using Strata = std::vector<std::vector<StratumComponent>>;

    /// strata.size() must be dim+1; the boundary, when present, must be a
    /// closed diagram of dimension dim-1; components of the top stratum
    /// must carry the trivial fiber.
    StratumDiagram(int dim, Strata strata, std::shared_ptr<const StratumDiagram> boundary = nullptr);

    /// The empty diagram of the given dimension (closed, Euler, class 0).
    static StratumDiagram empty(int dim);

    /// A closed manifold viewed as a diagram: one top-stratum component of
    /// the given chi parity, everything below empty.
    static StratumDiagram from_closed_manifold(long long chi, int dim);

    /// The point padded with empty strata up to the given dimension.
    static StratumDiagram point(int dim = 0);

    static StratumDiagram circle();

    /// The unit interval as a bounded 1-dimensional diagram; its boundary
    /// is the two-point diagram.
    static StratumDiagram interval();

    int dim() const { return dim_; }
    bool closed() const { return boundary_ == nullptr; }
    const Strata& strata() const { return strata_; }

    const StratumDiagram& boundary() const;
    std::shared_ptr<const StratumDiagram> boundary_ptr() const { return boundary_; }

    /// Appends empty strata up to dimension n. Requires n >= dim and a
    /// closed diagram.
    StratumDiagram pad(int n) const;

    /// Cone over a closed diagram: a bounded diagram one dimension up whose
    /// boundary is this diagram. The cone point's fiber records the chi
    /// parity of the base, so the result is Euler iff chi(base) is even.
    StratumDiagram cone() const;

    /// Product of diagrams; chi parities multiply componentwise and fiber
    /// parities follow the product congruence for punctured fibers.
    /// At most one factor may have a boundary.
    StratumDiagram product(const StratumDiagram& other) const;

    /// Componentwise concatenation per stratum. Requires equal dimensions
    /// and matching boundedness.
    StratumDiagram disjoint_union(const StratumDiagram& other) const;

    /// Glue two bounded diagrams along their full common boundary; the
    /// boundaries must be equal as diagrams. The seam contributes the
    /// boundary components once more per stratum (negation is invisible
    /// mod 2), carrying the boundary fiber records.
    StratumDiagram glue(const StratumDiagram& other) const;

    /// Passes iff every fiber record, in the strata and in the boundary,
    /// has even punctured chi.
    ValidationReport validate_euler() const;

    /// Sum of component chi parities over all strata. Requires the Euler
    /// condition; throws euler_condition_error otherwise.
    bool chi_parity() const;

    /// chi(boundary) mod 2, the difference of the two stratum-sum
    /// evaluations of chi; zero for every genuine Euler diagram. Requires
    /// a bounded Euler diagram.
    bool boundary_chi_parity() const;

    /// The bordism class over a point: 0 for null-bordant, 1 for the class
    /// of the padded point. Requires a closed Euler diagram.
    bool classify_point() const;

    friend bool operator==(const StratumDiagram& a, const StratumDiagram& b);

private:
    bool parity_sum() const;
    void require_euler(const char* what) const;

    int dim_ = 0;
    Strata strata_;
    std::shared_ptr<const StratumDiagram> boundary_;
};

}  // namespace ehom
