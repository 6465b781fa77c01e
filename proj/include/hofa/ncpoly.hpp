#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hofa/common.hpp"
#include "hofa/fn.hpp"
#include "hofa/rng.hpp"

namespace hofa {

/// An element of R/Z with a p-power denominator: value = num / p^M (mod 1).
/// Canonical form: 0 <= num < p^M and (num coprime to p or M = 0).
/// All arithmetic is integer arithmetic; nothing here touches floating
/// point until phase().
struct TorusValue {
    std::int64_t num = 0;
    int log_den = 0;  // M
    int p = 2;

    TorusValue() = default;
    TorusValue(std::int64_t numerator, int m, int prime);
    static TorusValue zero(int prime) { return TorusValue(0, 0, prime); }

    bool is_zero() const { return num == 0; }
    TorusValue operator+(const TorusValue& o) const;
    TorusValue operator-(const TorusValue& o) const;
    TorusValue operator-() const;
    bool operator==(const TorusValue& o) const { return num == o.num && log_den == o.log_den; }
    auto operator<=>(const TorusValue& o) const {
        if (auto c = log_den <=> o.log_den; c != 0) return c;
        return num <=> o.num;
    }

    double to_double() const;
};

std::int64_t int_pow(std::int64_t base, int e);

/// A torus-valued table on K^n in the canonical point order.
struct TorusFn {
    PointSpace dom;
    std::vector<TorusValue> values;

    TorusFn(PointSpace d, std::vector<TorusValue> v);
    static TorusFn zero(const PointSpace& dom);
    bool is_zero() const;
    const TorusValue& operator()(Point x) const { return values[static_cast<std::size_t>(x)]; }
};

/// D_h f(x) = f(x+h) - f(x), exact torus subtraction of tables.
TorusFn additive_diff(const TorusFn& f, Point h);

/// One monomial-with-depth slot of the coefficient form: exponents d_{i,j}
/// (flattened i-major over the n*t trace coordinates), depth k, and a
/// coefficient c in {1, ..., p-1}.
struct NCTerm {
    std::vector<int> exponents;  // n*t entries in {0, ..., p-1}, sum > 0
    int depth = 0;
    int coeff = 1;
};

/// A non-classical polynomial K^n -> T in explicit coefficient form:
///   P(x) = theta + sum_terms c * prod_{i,j} |Tr(alpha_j x_i)|^{d_{i,j}} / p^{k+1}
/// with every stored term satisfying 0 < sum d_{i,j} <= degree_bound - k(p-1).
class NCPoly {
  public:
    NCPoly(PointSpace dom, int degree_bound, TorusValue theta, std::vector<NCTerm> terms);

    static NCPoly zero(const PointSpace& dom);
    static NCPoly constant(const PointSpace& dom, TorusValue theta);

    const PointSpace& dom() const { return dom_; }
    int degree_bound() const { return degree_bound_; }
    const TorusValue& theta() const { return theta_; }
    const std::vector<NCTerm>& terms() const { return terms_; }
    /// Maximum depth among stored terms (0 if none).
    int depth() const;

    TorusValue eval(Point x) const;
    TorusFn eval_table() const;

    /// e(P): the table exp(2*pi*i*P(x)); unit modulus pointwise.
    DenseFn phase() const;

  private:
    PointSpace dom_;
    int degree_bound_;
    TorusValue theta_;
    std::vector<NCTerm> terms_;
};

/// True iff all d-fold additive differences of P vanish (degree < d),
/// checked exhaustively over all q^{nd} difference tuples in exact torus
/// arithmetic. Throws BudgetExceeded if q^{n(d+1)} > budget.
bool degree_certify(const NCPoly& poly, int d, std::int64_t budget = kDefaultBudget);

/// Sampled variant for out-of-budget sizes: draws `tuples` uniform
/// difference tuples. A true result is probabilistic; false is conclusive.
struct SampledCertificate {
    bool vanished;
    std::int64_t tuples;
};
SampledCertificate degree_certify_sampled(const NCPoly& poly, int d, std::int64_t tuples,
                                          std::uint64_t seed);

/// Exhaustive when q^{n(d+1)} fits the budget, otherwise 10^4 sampled
/// tuples with the weaker guarantee labeled explicitly.
struct DegreeCertificate {
    bool certified;
    bool exhaustive;       // false marks a probabilistic result
    std::int64_t tuples;   // difference tuples actually examined
};
DegreeCertificate degree_certify_auto(const NCPoly& poly, int d,
                                      std::int64_t budget = kDefaultBudget,
                                      std::uint64_t seed = 0);

/// All distinct functions K^n -> T of degree < r with zero constant term,
/// enumerated over the coefficient form and deduplicated by evaluation
/// table (first occurrence in coefficient-counter order wins). Throws
/// BudgetExceeded if the coefficient space p^{#slots} exceeds the budget.
std::vector<NCPoly> enumerate_ncpolys(const PointSpace& dom, int r,
                                      std::int64_t budget = kDefaultBudget);

/// Number of coefficient slots of the degree-<r form (the exponent of p in
/// the coefficient-space size).
std::int64_t ncpoly_slot_count(const PointSpace& dom, int r);

/// log_p of the coefficient-vector counting bound p^{C(nt+r-1, r-1) * r}.
std::int64_t ncpoly_count_bound_log_p(int n, int t, int r);

/// A classical polynomial K^n -> K as a coefficient table: exponent tuples
/// (individual degrees < q) mapped to nonzero field elements.
struct ClassicalTerm {
    std::vector<int> exponents;  // n entries in {0, ..., q-1}
    int coeff = 1;               // field element index, nonzero
};

/// The depth-0 embedding x -> |Tr(P_classical(x))| / p as an NCPoly in
/// coefficient form; exhaustively verified against direct evaluation at
/// construction.
NCPoly from_classical(const PointSpace& dom, const std::vector<ClassicalTerm>& classical);

}  // namespace hofa
