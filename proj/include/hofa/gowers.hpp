#pragma once

#include <cstdint>
#include <vector>

#include "hofa/common.hpp"
#include "hofa/fn.hpp"
#include "hofa/rng.hpp"

namespace hofa {

/// Delta_h f(x) = f(x+h) * conj(f(x)).
DenseFn mult_diff(const DenseFn& f, Point h);

/// The Gowers norm of order r: the 2^r-th root of the average of all
/// r-fold multiplicative differences. Exact summation over q^{n(r+1)}
/// terms; throws BudgetExceeded beyond the budget. The pre-root average
/// is a sum of squared box averages, so a real part below -1e-9 or an
/// imaginary residue above 1e-9 signals an implementation bug and throws
/// std::logic_error; smaller residue is discarded. Defined for arbitrary
/// tables (differences of bounded functions exceed modulus 1).
double gowers_norm_exact(const DenseFn& f, int r, std::int64_t budget = kDefaultBudget);

/// Monte-Carlo estimate of the 2^r-th power (unbiased) and its standard
/// error; the norm estimate takes the root after clamping negatives to 0.
/// Bit-identical for a fixed seed.
struct GowersEstimate {
    double norm = 0;
    double power = 0;
    double power_stderr = 0;
    std::int64_t samples = 0;
};
GowersEstimate gowers_norm_mc(const DenseFn& f, int r, std::int64_t samples, std::uint64_t seed);

/// A linear form on m variables: (z_1, ..., z_m) -> sum_i w_i z_i with
/// weights in K.
struct LinearForm {
    std::vector<int> weights;  // field element indices

    bool is_zero() const;
};

/// k+1 linear forms on m variables, pairwise non-proportional over K
/// (verified at construction; throws std::invalid_argument otherwise).
class LinearSystem {
  public:
    LinearSystem(FieldPtr fld, std::vector<LinearForm> forms);

    const FieldPtr& field() const { return fld_; }
    const std::vector<LinearForm>& forms() const { return forms_; }
    int variables() const { return m_; }
    /// k such that the system has k+1 forms; the norm order of the bound.
    int order() const { return static_cast<int>(forms_.size()) - 1; }

  private:
    FieldPtr fld_;
    std::vector<LinearForm> forms_;
    int m_;
};

struct InequalityCheck {
    double lhs = 0;
    double bound = 0;
    bool holds = false;
};

/// lhs = |E_{z_1..z_m}[ prod_i f_i(L_i(z)) ]| computed exactly;
/// bound = min_i U^k(f_i); holds = (lhs <= bound + 1e-9).
/// Functions must be bounded; the z-space q^{nm} must fit the budget.
InequalityCheck von_neumann_check(const LinearSystem& system, const std::vector<DenseFn>& functions,
                                  std::int64_t budget = kDefaultBudget);

/// lhs = |E_{x_1..x_k}[ f(x_1+...+x_k) * prod_i g_i(x_1,...,x_k) ]| with each
/// bounded g_i a table on (K^n)^k certified independent of its own
/// coordinate block (verified exhaustively; throws otherwise);
/// bound = U^k(f).
InequalityCheck box_check(const DenseFn& f, const std::vector<DenseFn>& g_list,
                          std::int64_t budget = kDefaultBudget);

/// True iff g, as a table on (K^n)^k, takes the same value whenever the
/// block-th coordinate block of n components changes.
bool independent_of_block(const DenseFn& g, int n, int k, int block);

}  // namespace hofa
