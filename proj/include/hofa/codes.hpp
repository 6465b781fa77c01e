#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hofa/fn.hpp"
#include "hofa/rng.hpp"

namespace hofa {

/// An affine map x -> Ax + b on K^n. The invertible flag is a verified
/// certificate (full rank over K).
class AffineMap {
  public:
    AffineMap(PointSpace dom, std::vector<int> matrix, std::vector<int> offset);

    const PointSpace& dom() const { return dom_; }
    int entry(int row, int col) const { return matrix_[static_cast<std::size_t>(row * dom_.n() + col)]; }
    const std::vector<int>& matrix() const { return matrix_; }
    const std::vector<int>& offset() const { return offset_; }
    bool invertible() const { return invertible_; }

    Point apply(Point x) const;
    AffineMap compose(const AffineMap& inner) const;  // this after inner: x -> this(inner(x))
    AffineMap inverse() const;                        // requires invertible

  private:
    PointSpace dom_;
    std::vector<int> matrix_;  // row-major n*n field element indices
    std::vector<int> offset_;  // n field element indices
    bool invertible_;
};

AffineMap identity_affine(const PointSpace& dom);
/// Uniform over invertible affine maps, by rejection on the matrix.
AffineMap random_invertible_affine(const PointSpace& dom, Rng& rng);
/// All invertible affine maps (|GL_n(K)| * q^n of them); throws
/// BudgetExceeded when q^{n^2} * q^n exceeds the budget.
std::vector<AffineMap> enumerate_invertible_affines(const PointSpace& dom,
                                                    std::int64_t budget = kDefaultBudget);

/// (w o l)(x) = w(l(x)).
Word apply_affine(const Word& w, const AffineMap& map);
DenseFn apply_affine(const DenseFn& f, const AffineMap& map);

/// One sampled (or enumerated) local-correction query: r distinct points
/// plus the decoding operator for exactly this tuple.
struct LccQuery {
    std::vector<Point> points;
    std::function<int(std::span<const int>)> decode;  // symbols in {1..m} -> symbol
};

/// Per-target-x query distribution with its decoding operators.
class LccQueryModel {
  public:
    virtual ~LccQueryModel() = default;
    virtual int queries() const = 0;
    virtual LccQuery sample(Point x, Rng& rng) const = 0;
    /// The full support of M_x (for exact analyses at desk scale).
    virtual std::vector<LccQuery> enumerate(Point x) const = 0;
};

/// One testing query: r points plus the accept predicate for this tuple.
struct LtcQuery {
    std::vector<Point> points;
    std::function<bool(std::span<const int>)> accept;
};

class LtcQueryModel {
  public:
    virtual ~LtcQueryModel() = default;
    virtual int queries() const = 0;
    virtual LtcQuery sample(Rng& rng) const = 0;
    virtual std::vector<LtcQuery> enumerate() const = 0;
};

/// Empirical LCC certificate: measured correction success under the iid
/// delta-corruption channel. Monte-Carlo evidence, never a proof.
struct LccCertificate {
    int r = 0;
    double delta = 0;
    double tau = 0;
    double measured_success = 0;
    double ci_low = 0, ci_high = 0;  // 95% interval
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
};

/// An enumerated code over the alphabet {1..m} on K^n, with optional query
/// models and an optional empirical certificate.
struct CodeSpec {
    PointSpace dom;
    int m = 1;
    std::vector<Word> codewords;
    std::shared_ptr<const LccQueryModel> lcc;
    std::shared_ptr<const LtcQueryModel> ltc;
    std::optional<LccCertificate> certificate;
    std::string generator;  // provenance tag for serialization, may be empty

    CodeSpec(PointSpace d, int alphabet, std::vector<Word> words);
};

/// True iff w o l is a codeword for all codewords and all invertible
/// affine maps (exhaustive), or for `trials` sampled pairs.
bool affine_invariance_check(const CodeSpec& code, bool exhaustive, std::uint64_t seed,
                             std::int64_t trials = 1000, std::int64_t budget = kDefaultBudget);

/// Evaluation tables of all n-variate polynomials over K of total degree
/// <= d (individual degrees < q); alphabet is K itself.
CodeSpec reed_muller(const PointSpace& dom, int d, std::int64_t budget = kDefaultBudget);

/// The (d+1)-query line corrector for a Reed-Muller code: queries x + t_i y
/// on a random line through x (t_i distinct nonzero scalars, y nonzero) and
/// interpolates the unique degree-<=d univariate back at 0. Needs q > d+1.
std::shared_ptr<const LccQueryModel> rm_line_corrector(const PointSpace& dom, int d);

/// The Hadamard code (all F_2-linear functionals, alphabet {1,2}) with the
/// 3-query linearity test: accept iff w(y) + w(z) = w(y+z).
CodeSpec hadamard_blr(const PointSpace& dom);

/// Multilinear simplex extension of a decoding operator D: Sigma^r -> Sigma:
/// at vertex inputs it reproduces D; in general it returns
/// sum_l e_{D(l)} prod_i (z_i)_{l_i}, a point of the simplex.
Eigen::VectorXd extend_decoder(int m, int r, const std::function<int(std::span<const int>)>& decode,
                               const std::vector<Eigen::VectorXd>& inputs);
/// Same for a testing operator D: Sigma^r -> {0, 1}; returns a value in [0,1].
double extend_tester(int m, int r, const std::function<bool(std::span<const int>)>& accept,
                     const std::vector<Eigen::VectorXd>& inputs);

/// The affine-orbit approximation device: expresses the tuple in terms of a
/// maximal independent subset, then samples images z_0 + sum_j lambda_ij z_j
/// with z uniform. Every K-linear relation of the source tuple is preserved
/// exactly; the fraction of draws with independent z_1..z_t is reported.
struct OrbitSample {
    int rank = 0;
    std::vector<std::vector<int>> lambda;
    std::vector<std::vector<Point>> tuples;
    double independent_fraction = 0;
};
OrbitSample orbit_sampler(const PointSpace& dom, const std::vector<Point>& tuple,
                          std::int64_t count, std::uint64_t seed);

/// Minimum normalized Hamming distance over distinct codeword pairs.
double min_distance(const CodeSpec& code, std::int64_t budget = kDefaultBudget);

/// Corrupts each coordinate independently with probability delta by a
/// uniformly random wrong symbol.
Word corrupt(const Word& w, double delta, Rng& rng);

/// Monte-Carlo correction-success measurement: per trial, a uniform
/// codeword is corrupted at rate delta and the corrector runs at a uniform
/// target. Reports the success rate with a 95% interval.
struct LccSimReport {
    double success = 0;
    double ci_low = 0, ci_high = 0;
    std::int64_t trials = 0;
};
LccSimReport lcc_simulate(const CodeSpec& code, double delta, std::int64_t trials,
                          std::uint64_t seed);

/// Runs lcc_simulate and attaches a certificate when measured success
/// >= 1 - tau. Returns the certificate or nullopt.
std::optional<LccCertificate> certify_lcc(CodeSpec& code, double delta, double tau,
                                          std::int64_t trials, std::uint64_t seed);

/// The minimum-distance consequence of local correction: requires a
/// certificate with tau < 1/2, passes iff min_distance >= 2*delta - 1e-12.
struct DistanceAudit {
    double min_dist = 0;
    bool passes = false;
};
DistanceAudit lcc_distance_audit(const CodeSpec& code, std::int64_t budget = kDefaultBudget);

/// Exact tester acceptance probability of a word, averaged over the full
/// query support.
double ltc_acceptance_exact(const CodeSpec& code, const Word& w);

/// For each distinct codeword pair, the maximum over alphabet coordinates
/// of U^r(f^_i - g^_i); zero diagonal.
Eigen::MatrixXd gowers_separation(const CodeSpec& code, int r, std::int64_t budget = kDefaultBudget);

/// Hybrid-word experiment: samples words H that agree pointwise with f or
/// g (fair coin per point), measures tester acceptance of H o l over random
/// invertible affine l, and the Hamming distance from H to the code.
struct HybridReport {
    std::vector<double> acceptance;  // per sampled H
    std::vector<double> distance;    // per sampled H
    double mean_acceptance = 0;
    double mean_distance = 0;
    double hhat_deviation = 0;  // max |avg of sampled H^ - (f^+g^)/2|
};
HybridReport ltc_hybrid_experiment(const CodeSpec& code, std::size_t f_index, std::size_t g_index,
                                   std::uint64_t seed, std::int64_t trials,
                                   std::int64_t affine_samples = 32);

}  // namespace hofa
