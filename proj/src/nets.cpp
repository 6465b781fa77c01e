#include "hofa/nets.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace hofa {

double NetSizeBound::value() const {
    if (log_e > 700.0) return std::numeric_limits<double>::infinity();
    return std::exp(log_e);
}

NetSizeBound net_size_bound(int p, int t, int n, int r, double eps, int k) {
    if (p < 2 || t < 1 || n < 1 || r < 1 || k < 0) throw std::invalid_argument("net_size_bound: bad parameters");
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("net_size_bound: eps must be in (0, 1)");
    NetSizeBound out;
    double coeff_slots = static_cast<double>(ncpoly_count_bound_log_p(n, t, r));
    out.log_e = coeff_slots * k * std::log(static_cast<double>(p)) +
                std::pow(static_cast<double>(p), static_cast<double>(r) * k) * std::log(4.0 / (eps * eps));
    return out;
}

std::vector<std::pair<int, int>> disk_lattice(double eps) {
    const int radius = static_cast<int>(std::floor(1.0 / eps)) + 1;
    std::vector<std::pair<int, int>> pts;
    for (int a = -radius; a <= radius; ++a)
        for (int b = -radius; b <= radius; ++b)
            if (eps * eps * (a * a + b * b) <= 1.0 + 1e-12) pts.emplace_back(a, b);
    return pts;
}

std::pair<int, int> round_to_disk_lattice(Complex z, double eps,
                                          const std::vector<std::pair<int, int>>& lattice) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        Complex v(eps * lattice[i].first, eps * lattice[i].second);
        double d = std::abs(z - v);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return lattice[best];
}

NetSpec build_net(const PointSpace& dom, int r, double eps, int k, std::int64_t budget) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("build_net: eps must be in (0, 1)");
    if (k < 0) throw std::invalid_argument("build_net: k must be >= 0");
    NetSpec net;
    net.field = dom.field_ptr();
    net.n = dom.n();
    net.r = r;
    net.eps = eps;
    net.k = k;
    net.polys = enumerate_ncpolys(dom, r, budget);
    net.lattice = disk_lattice(eps);
    const std::int64_t n_lattice = static_cast<std::int64_t>(net.lattice.size());
    const std::int64_t n_polys = static_cast<std::int64_t>(net.polys.size());

    // k-tuples of enumerated polynomials, with repetition.
    std::int64_t n_tuples = 1;
    for (int i = 0; i < k; ++i) {
        if (n_tuples > budget / std::max<std::int64_t>(n_polys, 1))
            throw BudgetExceeded("build_net: tuple space exceeds budget");
        n_tuples *= n_polys;
    }

    std::map<std::vector<std::pair<int, int>>, std::size_t> seen;
    std::int64_t materialized = 0;
    std::vector<std::size_t> tuple(static_cast<std::size_t>(k), 0);
    for (std::int64_t ti = 0; ti < n_tuples; ++ti) {
        std::vector<NCPoly> chosen;
        chosen.reserve(tuple.size());
        for (std::size_t idx : tuple) chosen.push_back(net.polys[idx]);
        PolyFactor factor(dom, std::move(chosen));
        const std::int64_t atoms = factor.num_atoms();

        // every tau: atoms -> lattice
        double log_assignments = static_cast<double>(atoms) * std::log(static_cast<double>(n_lattice));
        if (log_assignments > std::log(static_cast<double>(budget)) ||
            materialized + static_cast<std::int64_t>(std::llround(std::exp(log_assignments))) > budget)
            throw BudgetExceeded("build_net: tau assignments exceed budget");

        std::vector<int> tau(static_cast<std::size_t>(atoms), 0);
        std::int64_t n_assignments = 1;
        for (std::int64_t a = 0; a < atoms; ++a) n_assignments *= n_lattice;
        for (std::int64_t ai = 0; ai < n_assignments; ++ai) {
            std::vector<std::pair<int, int>> sig(static_cast<std::size_t>(dom.size()));
            for (Point x = 0; x < dom.size(); ++x)
                sig[static_cast<std::size_t>(x)] =
                    net.lattice[static_cast<std::size_t>(tau[static_cast<std::size_t>(factor.atom_of(x))])];
            ++materialized;
            if (seen.emplace(sig, net.elements.size()).second) {
                Eigen::ArrayXcd values(static_cast<Eigen::Index>(dom.size()));
                for (Point x = 0; x < dom.size(); ++x) {
                    auto [a, b] = sig[static_cast<std::size_t>(x)];
                    values[static_cast<Eigen::Index>(x)] = Complex(eps * a, eps * b);
                }
                NetElement el{DenseFn(dom, std::move(values)), std::move(sig), tuple, tau};
                net.elements.push_back(std::move(el));
            }
            // advance tau counter, atom 0 fastest
            for (std::size_t a = 0; a < tau.size(); ++a) {
                if (++tau[a] < static_cast<int>(n_lattice)) break;
                tau[a] = 0;
            }
        }
        // advance tuple counter, position 0 fastest
        for (std::size_t pos = 0; pos < tuple.size(); ++pos) {
            if (++tuple[pos] < static_cast<std::size_t>(n_polys)) break;
            tuple[pos] = 0;
        }
    }
    return net;
}

NetProjection nearest_in_net(const DenseFn& f, const NetSpec& net, std::int64_t budget) {
    if (net.elements.empty()) throw std::invalid_argument("nearest_in_net: empty net");
    NetProjection out;
    out.distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < net.elements.size(); ++i) {
        double d = gowers_norm_exact(f - net.elements[i].fn, net.r, budget);
        if (d < out.distance) {
            out.distance = d;
            out.index = i;
        }
    }
    return out;
}

CoverReport cover_check(const NetSpec& net, std::int64_t trials, std::uint64_t seed,
                        std::int64_t budget) {
    CoverReport report;
    report.trials = trials;
    if (net.elements.empty() && trials > 0) throw std::invalid_argument("cover_check: empty net");
    PointSpace dom(net.field, net.n);
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(trial));
        DenseFn f = random_bounded(dom, rng);
        CoverTrial t;
        t.distance = nearest_in_net(f, net, budget).distance;
        report.max_distance = std::max(report.max_distance, t.distance);

        // Covering-argument legs, checked whenever the decomposition fits
        // within this net's complexity.
        DecompositionResult dec = decompose(f, net.r, net.eps, /*rho_min=*/0.01, budget);
        if (dec.status == DecomposeStatus::Converged && dec.factor.complexity() <= net.k) {
            t.chain_applicable = true;
            t.residual = dec.residual_norm;
            t.residual_ok = dec.residual_norm <= net.eps + 1e-9;
            double worst = 0;
            for (Point x = 0; x < dom.size(); ++x) {
                Complex v = dec.approximant.values[static_cast<Eigen::Index>(x)];
                auto [a, b] = round_to_disk_lattice(v, net.eps, net.lattice);
                worst = std::max(worst, std::abs(v - Complex(net.eps * a, net.eps * b)));
            }
            t.rounding = worst;
            t.rounding_ok = worst <= 2.0 * net.eps + 1e-9;
            ++report.chain_checked;
            if (!t.residual_ok || !t.rounding_ok) report.chain_ok = false;
        }
        report.detail.push_back(t);
    }
    report.pass = report.max_distance <= 3.0 * net.eps + 1e-9;
    return report;
}

}  // namespace hofa
