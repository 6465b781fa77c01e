#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hofa/factors.hpp"

namespace hofa {

/// The counting bound for the net: p^{C(nt+r-1, r-1) * r * k} * (4/eps^2)^{p^{rk}}.
/// Kept as a natural log (the exact value overflows quickly); value()
/// exponentiates, +inf when out of double range.
struct NetSizeBound {
    double log_e = 0;
    double value() const;
};
NetSizeBound net_size_bound(int p, int t, int n, int r, double eps, int k);

/// One net element: a lattice-valued composition tau(P_1, ..., P_k),
/// stored both as a complex table and as its exact lattice signature.
struct NetElement {
    DenseFn fn;
    std::vector<std::pair<int, int>> lattice_sig;  // per point: (a, b) with value eps*(a+bi)
    std::vector<std::size_t> poly_indices;         // the generating tuple, into NetSpec::polys
    std::vector<int> tau;                          // per atom: index into NetSpec::lattice
};

/// An eps-net under the U^r metric at fixed factor complexity k: every
/// composition of k enumerated degree-<r polynomials with every map from
/// the attainable value-tuples into the in-disk eps-lattice, deduplicated
/// by table.
struct NetSpec {
    FieldPtr field;
    int n = 0;
    int r = 2;
    double eps = 0.5;
    int k = 1;
    std::vector<NCPoly> polys;                  // the degree-<r enumeration used
    std::vector<std::pair<int, int>> lattice;   // (a, b) with |eps*(a+bi)| <= 1
    std::vector<NetElement> elements;
};

/// Materializes the net. Throws BudgetExceeded when the number of
/// tau-assignments to materialize exceeds the budget.
NetSpec build_net(const PointSpace& dom, int r, double eps, int k,
                  std::int64_t budget = kDefaultBudget);

/// In-disk lattice points of eps*(Z+iZ), deterministically ordered.
std::vector<std::pair<int, int>> disk_lattice(double eps);

/// Nearest lattice point of eps*(Z+iZ) inside the closed unit disk
/// (ties break toward the lower lattice index).
std::pair<int, int> round_to_disk_lattice(Complex z, double eps,
                                          const std::vector<std::pair<int, int>>& lattice);

/// The net element minimizing U^r(f - h); ties break by element index.
struct NetProjection {
    std::size_t index = 0;
    double distance = 0;
};
NetProjection nearest_in_net(const DenseFn& f, const NetSpec& net,
                             std::int64_t budget = kDefaultBudget);

/// Covering check over seeded random bounded functions. Each trial records
/// the projection distance, and, when the decomposition fits within the
/// net's complexity k, the two legs of the covering argument: residual
/// U^r <= eps after decomposing, and the rounding error <= 2*eps in sup
/// norm. Passes iff the maximum projection distance is <= 3*eps + 1e-9.
struct CoverTrial {
    double distance = 0;
    bool chain_applicable = false;
    bool residual_ok = false;
    double residual = 0;
    bool rounding_ok = false;
    double rounding = 0;
};
struct CoverReport {
    double max_distance = 0;
    bool pass = true;
    std::int64_t trials = 0;
    std::int64_t chain_checked = 0;  // trials where the chain applied
    bool chain_ok = true;
    std::vector<CoverTrial> detail;
};
CoverReport cover_check(const NetSpec& net, std::int64_t trials, std::uint64_t seed,
                        std::int64_t budget = kDefaultBudget);

}  // namespace hofa
