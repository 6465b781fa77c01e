#include "hofa/factors.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hofa {

PolyFactor::PolyFactor(PointSpace dom, std::vector<NCPoly> polys)
    : dom_(std::move(dom)), polys_(std::move(polys)) {
    for (const auto& poly : polys_)
        if (!poly.dom().same_domain(dom_))
            throw std::invalid_argument("PolyFactor: polynomial on a different domain");

    std::vector<TorusFn> tables;
    tables.reserve(polys_.size());
    for (const auto& poly : polys_) tables.push_back(poly.eval_table());

    atom_of_.resize(static_cast<std::size_t>(dom_.size()));
    std::map<std::vector<TorusValue>, int> ids;
    for (Point x = 0; x < dom_.size(); ++x) {
        std::vector<TorusValue> label;
        label.reserve(tables.size());
        for (const auto& tbl : tables) label.push_back(tbl(x));
        auto [it, inserted] = ids.emplace(label, static_cast<int>(atom_labels_.size()));
        if (inserted) {
            atom_labels_.push_back(std::move(label));
            atom_sizes_.push_back(0);
        }
        atom_of_[static_cast<std::size_t>(x)] = it->second;
        ++atom_sizes_[static_cast<std::size_t>(it->second)];
    }
}

PolyFactor PolyFactor::trivial(const PointSpace& dom) { return PolyFactor(dom, {}); }

DenseFn cond_expect(const DenseFn& f, const PolyFactor& factor) {
    if (!f.dom.same_domain(factor.dom())) throw std::invalid_argument("cond_expect: domain mismatch");
    std::vector<Complex> mean(static_cast<std::size_t>(factor.num_atoms()), Complex{0, 0});
    for (Point x = 0; x < f.dom.size(); ++x)
        mean[static_cast<std::size_t>(factor.atom_of(x))] += f.values[static_cast<Eigen::Index>(x)];
    for (std::int64_t a = 0; a < factor.num_atoms(); ++a)
        mean[static_cast<std::size_t>(a)] /= static_cast<double>(factor.atom_size(static_cast<int>(a)));
    Eigen::ArrayXcd out(f.values.size());
    for (Point x = 0; x < f.dom.size(); ++x)
        out[static_cast<Eigen::Index>(x)] = mean[static_cast<std::size_t>(factor.atom_of(x))];
    return DenseFn(f.dom, std::move(out));
}

PolyFactor refine(const PolyFactor& factor, const NCPoly& poly) {
    auto polys = factor.polys();
    polys.push_back(poly);
    return PolyFactor(factor.dom(), std::move(polys));
}

bool is_refinement(const PolyFactor& fine, const PolyFactor& coarse) {
    if (!fine.dom().same_domain(coarse.dom())) return false;
    std::vector<int> image(static_cast<std::size_t>(fine.num_atoms()), -1);
    for (Point x = 0; x < fine.dom().size(); ++x) {
        int fa = fine.atom_of(x);
        int ca = coarse.atom_of(x);
        auto& slot = image[static_cast<std::size_t>(fa)];
        if (slot == -1)
            slot = ca;
        else if (slot != ca)
            return false;
    }
    return true;
}

namespace {
double l2_sq(const DenseFn& f) {
    double v = lp_norm(f, 2.0);
    return v * v;
}
}  // namespace

PythagorasCheck pythagoras_check(const DenseFn& f, const PolyFactor& coarse, const PolyFactor& fine) {
    if (!is_refinement(fine, coarse))
        throw std::invalid_argument("pythagoras_check: fine factor does not refine the coarse one");
    DenseFn ef = cond_expect(f, fine);
    DenseFn ec = cond_expect(f, coarse);
    PythagorasCheck out;
    out.lhs = l2_sq(ef);
    out.rhs = l2_sq(ec) + l2_sq(ef - ec);
    out.gap = std::abs(out.lhs - out.rhs);
    return out;
}

OracleResult inverse_gowers_oracle(const DenseFn& g, const std::vector<NCPoly>& polys,
                                   const std::vector<DenseFn>& phases) {
    if (polys.empty() || polys.size() != phases.size())
        throw std::invalid_argument("inverse_gowers_oracle: empty or mismatched enumeration");
    std::size_t best = 0;
    double best_rho = -1.0;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        double rho = std::abs(inner_product(g, phases[i]));
        if (rho > best_rho) {
            best_rho = rho;
            best = i;
        }
    }
    return {polys[best], best_rho, best};
}

OracleResult inverse_gowers_oracle(const DenseFn& g, int r, std::int64_t budget) {
    auto polys = enumerate_ncpolys(g.dom, r, budget);
    std::vector<DenseFn> phases;
    phases.reserve(polys.size());
    for (const auto& poly : polys) phases.push_back(poly.phase());
    return inverse_gowers_oracle(g, polys, phases);
}

DecompositionResult decompose(const DenseFn& f, int r, double eps, double rho_min,
                              std::int64_t budget) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("decompose: eps must be in (0, 1)");
    if (!(rho_min > 0.0 && rho_min <= 1.0))
        throw std::invalid_argument("decompose: rho_min must be in (0, 1]");
    if (!is_bounded(f)) throw std::invalid_argument("decompose: f must be bounded");

    auto polys = enumerate_ncpolys(f.dom, r, budget);
    std::vector<DenseFn> phases;
    phases.reserve(polys.size());
    for (const auto& poly : polys) phases.push_back(poly.phase());

    const int max_iter = static_cast<int>(std::ceil(1.0 / (rho_min * rho_min)));
    PolyFactor factor = PolyFactor::trivial(f.dom);
    DenseFn approx = cond_expect(f, factor);
    double energy = l2_sq(approx);

    DecompositionResult res{factor, approx, 0.0, 0, {}, DecomposeStatus::Converged};
    for (;;) {
        DenseFn residual = f - approx;
        double res_norm = gowers_norm_exact(residual, r, budget);
        if (res_norm <= eps) {
            res.status = DecomposeStatus::Converged;
            break;
        }
        OracleResult step = inverse_gowers_oracle(residual, polys, phases);
        if (step.correlation < rho_min) {
            // Surfaced, never swallowed: at this scale a residual above eps
            // with no correlating polynomial would witness an inverse-norm
            // violation.
            res.status = DecomposeStatus::OracleExhausted;
            break;
        }
        if (res.iterations >= max_iter)
            throw std::logic_error("decompose: exceeded the 1/rho_min^2 energy cap");

        PolyFactor refined = refine(factor, step.poly);
        DenseFn new_approx = cond_expect(f, refined);
        double new_energy = l2_sq(new_approx);
        if (new_energy - energy < step.correlation * step.correlation - 1e-9)
            throw std::logic_error("decompose: energy increment below rho^2");

        factor = std::move(refined);
        approx = std::move(new_approx);
        energy = new_energy;
        res.correlation_trace.push_back(step.correlation);
        ++res.iterations;
    }

    if (lp_inf_norm(approx) > 1.0 + 1e-12)
        throw std::logic_error("decompose: approximant escaped the unit ball");
    res.factor = std::move(factor);
    res.approximant = std::move(approx);
    res.residual_norm = gowers_norm_exact(f - res.approximant, r, budget);
    return res;
}

}  // namespace hofa
