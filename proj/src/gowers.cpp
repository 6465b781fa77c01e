#include "hofa/gowers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hofa {

DenseFn mult_diff(const DenseFn& f, Point h) {
    const auto perm = f.dom.translation(h);
    Eigen::ArrayXcd out(f.values.size());
    for (Point x = 0; x < f.dom.size(); ++x)
        out[static_cast<Eigen::Index>(x)] =
            f.values[static_cast<Eigen::Index>(perm[static_cast<std::size_t>(x)])] *
            std::conj(f.values[static_cast<Eigen::Index>(x)]);
    return DenseFn(f.dom, std::move(out));
}

namespace {

Complex diff_average(const PointSpace& dom, const Eigen::ArrayXcd& tbl,
                     const std::vector<std::vector<Point>>& perms, int depth) {
    if (depth == 0) return tbl.mean();
    Complex acc = 0;
    Eigen::ArrayXcd next(tbl.size());
    for (Point h = 0; h < dom.size(); ++h) {
        const auto& perm = perms[static_cast<std::size_t>(h)];
        for (Point x = 0; x < dom.size(); ++x)
            next[static_cast<Eigen::Index>(x)] =
                tbl[static_cast<Eigen::Index>(perm[static_cast<std::size_t>(x)])] *
                std::conj(tbl[static_cast<Eigen::Index>(x)]);
        acc += diff_average(dom, next, perms, depth - 1);
    }
    return acc / static_cast<double>(dom.size());
}

}  // namespace

double gowers_norm_exact(const DenseFn& f, int r, std::int64_t budget) {
    if (r < 1) throw std::invalid_argument("gowers_norm_exact: order must be >= 1");
    checked_pow(f.dom.size(), r + 1, budget, "gowers_norm_exact");

    std::vector<std::vector<Point>> perms(static_cast<std::size_t>(f.dom.size()));
    for (Point h = 0; h < f.dom.size(); ++h) perms[static_cast<std::size_t>(h)] = f.dom.translation(h);

    // Parallelize over the outermost difference direction; block results
    // are combined in block order, so the sum is thread-count independent.
    const std::int64_t n_pts = f.dom.size();
    Complex average;
    if (r == 1) {
        average = diff_average(f.dom, f.values, perms, 1);
    } else {
        Complex total = parallel_map_reduce<Complex>(
            n_pts, /*block_size=*/1, Complex{0.0, 0.0},
            [&](std::int64_t lo, std::int64_t hi) {
                Complex acc = 0;
                Eigen::ArrayXcd next(f.values.size());
                for (Point h = lo; h < hi; ++h) {
                    const auto& perm = perms[static_cast<std::size_t>(h)];
                    for (Point x = 0; x < n_pts; ++x)
                        next[static_cast<Eigen::Index>(x)] =
                            f.values[static_cast<Eigen::Index>(perm[static_cast<std::size_t>(x)])] *
                            std::conj(f.values[static_cast<Eigen::Index>(x)]);
                    acc += diff_average(f.dom, next, perms, r - 1);
                }
                return acc;
            },
            [](Complex& into, Complex&& part) { into += part; });
        average = total / static_cast<double>(n_pts);
    }

    if (std::abs(average.imag()) > 1e-9)
        throw std::logic_error("gowers_norm_exact: pre-root average has a complex residue");
    if (average.real() < -1e-9)
        throw std::logic_error("gowers_norm_exact: pre-root average is negative");
    double power = std::max(average.real(), 0.0);
    return std::pow(power, 1.0 / std::ldexp(1.0, r));
}

GowersEstimate gowers_norm_mc(const DenseFn& f, int r, std::int64_t samples, std::uint64_t seed) {
    if (r < 1) throw std::invalid_argument("gowers_norm_mc: order must be >= 1");
    if (samples < 1) throw std::invalid_argument("gowers_norm_mc: samples must be >= 1");
    const std::int64_t n_pts = f.dom.size();
    Rng rng(seed);
    double sum = 0, sumsq = 0;
    std::vector<Point> hs(static_cast<std::size_t>(r));
    for (std::int64_t s = 0; s < samples; ++s) {
        Point x = static_cast<Point>(rng.below(static_cast<std::uint64_t>(n_pts)));
        for (int i = 0; i < r; ++i)
            hs[static_cast<std::size_t>(i)] = static_cast<Point>(rng.below(static_cast<std::uint64_t>(n_pts)));
        Complex prod = 1.0;
        for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
            Point pt = x;
            int bits = 0;
            for (int i = 0; i < r; ++i)
                if (mask & (1u << i)) {
                    pt = f.dom.add(pt, hs[static_cast<std::size_t>(i)]);
                    ++bits;
                }
            Complex v = f.values[static_cast<Eigen::Index>(pt)];
            prod *= ((r - bits) % 2 == 1) ? std::conj(v) : v;
        }
        sum += prod.real();
        sumsq += prod.real() * prod.real();
    }
    GowersEstimate est;
    est.samples = samples;
    est.power = sum / static_cast<double>(samples);
    double var = sumsq / static_cast<double>(samples) - est.power * est.power;
    est.power_stderr = samples > 1 ? std::sqrt(std::max(var, 0.0) / static_cast<double>(samples)) : 0.0;
    est.norm = std::pow(std::max(est.power, 0.0), 1.0 / std::ldexp(1.0, r));
    return est;
}

bool LinearForm::is_zero() const {
    for (int w : weights)
        if (w != 0) return false;
    return true;
}

LinearSystem::LinearSystem(FieldPtr fld, std::vector<LinearForm> forms)
    : fld_(std::move(fld)), forms_(std::move(forms)) {
    if (!fld_) throw std::invalid_argument("LinearSystem needs a field");
    if (forms_.size() < 2) throw std::invalid_argument("LinearSystem needs at least two forms");
    m_ = static_cast<int>(forms_.front().weights.size());
    for (const auto& form : forms_) {
        if (static_cast<int>(form.weights.size()) != m_)
            throw std::invalid_argument("LinearSystem: forms of unequal arity");
        if (form.is_zero()) throw std::invalid_argument("LinearSystem: zero form");
        for (int w : form.weights)
            if (w < 0 || w >= fld_->q()) throw std::invalid_argument("LinearSystem: weight out of range");
    }
    for (std::size_t a = 0; a < forms_.size(); ++a)
        for (std::size_t b = a + 1; b < forms_.size(); ++b)
            for (int lambda = 1; lambda < fld_->q(); ++lambda) {
                bool match = true;
                for (int j = 0; j < m_ && match; ++j)
                    match = forms_[a].weights[static_cast<std::size_t>(j)] ==
                            fld_->mul(lambda, forms_[b].weights[static_cast<std::size_t>(j)]);
                if (match)
                    throw std::invalid_argument("LinearSystem: form " + std::to_string(a) +
                                                " is a multiple of form " + std::to_string(b));
            }
}

InequalityCheck von_neumann_check(const LinearSystem& system, const std::vector<DenseFn>& functions,
                                  std::int64_t budget) {
    if (functions.size() != system.forms().size())
        throw std::invalid_argument("von_neumann_check: one function per form required");
    const PointSpace& dom = functions.front().dom;
    for (const auto& f : functions) {
        if (!f.dom.same_domain(dom)) throw std::invalid_argument("von_neumann_check: domain mismatch");
        if (!is_bounded(f)) throw std::invalid_argument("von_neumann_check: functions must be bounded");
    }
    const int m = system.variables();
    const int k = system.order();
    const std::int64_t z_count = checked_pow(dom.size(), m, budget, "von_neumann_check");

    // Scaling permutations per (form, variable) so the z-loop is gather+add.
    std::vector<std::vector<std::vector<Point>>> scaled(system.forms().size());
    for (std::size_t i = 0; i < system.forms().size(); ++i) {
        scaled[i].resize(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j)
            scaled[i][static_cast<std::size_t>(j)] =
                dom.scaling(system.forms()[i].weights[static_cast<std::size_t>(j)]);
    }

    Complex total = parallel_map_reduce<Complex>(
        z_count, /*block_size=*/4096, Complex{0.0, 0.0},
        [&](std::int64_t lo, std::int64_t hi) {
            Complex acc = 0;
            std::vector<Point> z(static_cast<std::size_t>(m));
            for (std::int64_t idx = lo; idx < hi; ++idx) {
                std::int64_t rem = idx;
                for (int j = 0; j < m; ++j) {
                    z[static_cast<std::size_t>(j)] = rem % dom.size();
                    rem /= dom.size();
                }
                Complex prod = 1.0;
                for (std::size_t i = 0; i < functions.size(); ++i) {
                    Point pt = 0;
                    for (int j = 0; j < m; ++j)
                        pt = dom.add(pt, scaled[i][static_cast<std::size_t>(j)]
                                                [static_cast<std::size_t>(z[static_cast<std::size_t>(j)])]);
                    prod *= functions[i].values[static_cast<Eigen::Index>(pt)];
                }
                acc += prod;
            }
            return acc;
        },
        [](Complex& into, Complex&& part) { into += part; });

    InequalityCheck out;
    out.lhs = std::abs(total / static_cast<double>(z_count));
    out.bound = std::numeric_limits<double>::infinity();
    for (const auto& f : functions) out.bound = std::min(out.bound, gowers_norm_exact(f, k, budget));
    out.holds = out.lhs <= out.bound + 1e-9;
    return out;
}

bool independent_of_block(const DenseFn& g, int n, int k, int block) {
    const PointSpace& dom = g.dom;
    if (dom.n() != n * k) throw std::invalid_argument("independent_of_block: table is not on (K^n)^k");
    PointSpace inner(dom.field_ptr(), n);
    const std::int64_t q_n = inner.size();
    const std::int64_t total = dom.size();
    for (std::int64_t idx = 0; idx < total; ++idx) {
        // vary the block-th group of n coordinates, keep the rest
        std::int64_t radix = 1;
        for (int i = 0; i < block * n; ++i) radix *= dom.field().q();
        std::int64_t block_digit = (idx / radix) % q_n;
        if (block_digit != 0) continue;
        Complex base = g.values[static_cast<Eigen::Index>(idx)];
        for (std::int64_t d = 1; d < q_n; ++d) {
            if (g.values[static_cast<Eigen::Index>(idx + d * radix)] != base) return false;
        }
    }
    return true;
}

InequalityCheck box_check(const DenseFn& f, const std::vector<DenseFn>& g_list, std::int64_t budget) {
    const PointSpace& dom = f.dom;
    const int n = dom.n();
    const int k = static_cast<int>(g_list.size());
    if (k < 1) throw std::invalid_argument("box_check: needs at least one g");
    PointSpace tuple_dom(dom.field_ptr(), n * k);
    for (int i = 0; i < k; ++i) {
        const DenseFn& g = g_list[static_cast<std::size_t>(i)];
        if (!g.dom.same_domain(tuple_dom))
            throw std::invalid_argument("box_check: g tables must live on (K^n)^k");
        if (!is_bounded(g)) throw std::invalid_argument("box_check: g functions must be bounded");
        if (!independent_of_block(g, n, k, i))
            throw std::invalid_argument("box_check: g_" + std::to_string(i + 1) +
                                        " depends on its forbidden coordinate");
    }
    const std::int64_t total = checked_pow(dom.size(), k, budget, "box_check");

    Complex sum = parallel_map_reduce<Complex>(
        total, /*block_size=*/4096, Complex{0.0, 0.0},
        [&](std::int64_t lo, std::int64_t hi) {
            Complex acc = 0;
            for (std::int64_t idx = lo; idx < hi; ++idx) {
                std::int64_t rem = idx;
                Point s = 0;
                for (int i = 0; i < k; ++i) {
                    Point xi = rem % dom.size();
                    rem /= dom.size();
                    s = dom.add(s, xi);
                }
                Complex prod = f.values[static_cast<Eigen::Index>(s)];
                for (int i = 0; i < k; ++i)
                    prod *= g_list[static_cast<std::size_t>(i)].values[static_cast<Eigen::Index>(idx)];
                acc += prod;
            }
            return acc;
        },
        [](Complex& into, Complex&& part) { into += part; });

    InequalityCheck out;
    out.lhs = std::abs(sum / static_cast<double>(total));
    out.bound = gowers_norm_exact(f, k, budget);
    out.holds = out.lhs <= out.bound + 1e-9;
    return out;
}

}  // namespace hofa
