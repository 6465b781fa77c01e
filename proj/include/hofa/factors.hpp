#pragma once

#include <cstdint>
#include <vector>

#include "hofa/gowers.hpp"
#include "hofa/ncpoly.hpp"

namespace hofa {

/// An ordered list of non-classical polynomials inducing a partition of
/// K^n into level-set atoms. Atom labels are exact torus-value tuples, so
/// cell assignment involves no floating point.
class PolyFactor {
  public:
    PolyFactor(PointSpace dom, std::vector<NCPoly> polys);
    static PolyFactor trivial(const PointSpace& dom);  // one cell

    const PointSpace& dom() const { return dom_; }
    const std::vector<NCPoly>& polys() const { return polys_; }
    /// |B|: the number of defining polynomials.
    int complexity() const { return static_cast<int>(polys_.size()); }
    std::int64_t num_atoms() const { return static_cast<std::int64_t>(atom_sizes_.size()); }
    int atom_of(Point x) const { return atom_of_[static_cast<std::size_t>(x)]; }
    std::int64_t atom_size(int atom) const { return atom_sizes_[static_cast<std::size_t>(atom)]; }
    /// The label tuple (P_1(x), ..., P_k(x)) of an atom.
    const std::vector<TorusValue>& atom_label(int atom) const {
        return atom_labels_[static_cast<std::size_t>(atom)];
    }

  private:
    PointSpace dom_;
    std::vector<NCPoly> polys_;
    std::vector<int> atom_of_;                        // per point
    std::vector<std::int64_t> atom_sizes_;            // per atom
    std::vector<std::vector<TorusValue>> atom_labels_;  // per atom
};

/// E[f|B]: at each point, the average of f over the cell containing it.
DenseFn cond_expect(const DenseFn& f, const PolyFactor& factor);

/// The factor with polys(B) ++ [P]; refines B by construction.
PolyFactor refine(const PolyFactor& factor, const NCPoly& poly);

/// True iff every cell of `fine` is contained in a cell of `coarse`.
bool is_refinement(const PolyFactor& fine, const PolyFactor& coarse);

/// Verifies ||E[f|B_fine]||_2^2 = ||E[f|B]||_2^2 + ||E[f|B_fine]-E[f|B]||_2^2.
/// Requires B_fine to refine B.
struct PythagorasCheck {
    double lhs = 0;
    double rhs = 0;
    double gap = 0;
};
PythagorasCheck pythagoras_check(const DenseFn& f, const PolyFactor& coarse,
                                 const PolyFactor& fine);

/// Exhaustive maximization of |<g, e(P)>| over all degree-<r non-classical
/// polynomials with zero constant term. Ties break toward the lower
/// enumeration index.
struct OracleResult {
    NCPoly poly;
    double correlation = 0;
    std::size_t index = 0;  // enumeration index of the maximizer
};
OracleResult inverse_gowers_oracle(const DenseFn& g, int r, std::int64_t budget = kDefaultBudget);
/// Variant over a precomputed enumeration (phases must match the polys).
OracleResult inverse_gowers_oracle(const DenseFn& g, const std::vector<NCPoly>& polys,
                                   const std::vector<DenseFn>& phases);

enum class DecomposeStatus { Converged, OracleExhausted };

struct DecompositionResult {
    PolyFactor factor;
    DenseFn approximant;           // E[f|B], constant on every cell
    double residual_norm = 0;      // U^r(f - approximant), recomputed post hoc
    int iterations = 0;            // accepted refinement steps
    std::vector<double> correlation_trace;  // per-step oracle correlations
    DecomposeStatus status = DecomposeStatus::Converged;
};

/// Energy-increment decomposition: starting from the trivial factor,
/// repeatedly finds a polynomial correlating with the residual and refines
/// until U^r(f - E[f|B]) <= eps, or surfaces "oracle exhausted" when the
/// best correlation drops below rho_min. Each accepted step is asserted to
/// grow the energy ||E[f|B]||_2^2 by at least rho^2 - 1e-9 (violations
/// throw std::logic_error: they indicate a bug, not a data condition).
/// Iterations never exceed ceil(1/rho_min^2).
DecompositionResult decompose(const DenseFn& f, int r, double eps, double rho_min,
                              std::int64_t budget = kDefaultBudget);

}  // namespace hofa
