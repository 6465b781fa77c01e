#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hofa/nets.hpp"

using namespace hofa;

TEST_CASE("net size bound arithmetic") {
    // p=2, t=1, n=1, r=2, k=1, eps=1/2: 16 polynomials * 16^4 tau maps
    NetSizeBound b = net_size_bound(2, 1, 1, 2, 0.5, 1);
    CHECK(b.value() == doctest::Approx(1048576.0).epsilon(1e-9));

    // k = 0: only the lattice constants remain
    NetSizeBound c = net_size_bound(2, 1, 1, 2, 0.5, 0);
    CHECK(c.value() == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("log bound doubling ratios approach 2^{r-1}") {
    // The asymptotic 4x-per-doubling shows through at large t; small-n
    // binomial offsets keep the t=1 ratios lower (frozen as regression
    // values below).
    auto log_bound = [](int t, int n) { return net_size_bound(2, t, n, 3, 0.5, 1).log_e; };
    double r1 = log_bound(6, 8) / log_bound(6, 4);
    double r2 = log_bound(6, 16) / log_bound(6, 8);
    CHECK(std::abs(r1 - 4.0) <= 0.4);
    CHECK(std::abs(r2 - 4.0) <= 0.4);

    CHECK(log_bound(1, 8) / log_bound(1, 4) == doctest::Approx(2.169).epsilon(1e-3));
    CHECK(log_bound(1, 16) / log_bound(1, 8) == doctest::Approx(2.940).epsilon(1e-3));
}

TEST_CASE("the in-disk lattice") {
    auto pts = disk_lattice(0.5);
    CHECK(pts.size() == 13);
    auto pts4 = disk_lattice(0.4);
    CHECK(pts4.size() == 21);  // a^2 + b^2 <= 6.25, corners excluded
}

TEST_CASE("build_net at k = 0 materializes the lattice constants") {
    PointSpace dom(Field::make(2, 1), 1);
    NetSpec net = build_net(dom, 2, 0.5, 0);
    CHECK(net.elements.size() == 13);
    for (const auto& el : net.elements) {
        CHECK(lp_inf_norm(el.fn) <= 1.0 + 1e-12);
        CHECK(std::abs(el.fn(0) - el.fn(1)) == 0.0);
    }
}

TEST_CASE("build_net contains the sign character at eps = 1/2") {
    PointSpace dom(Field::make(2, 1), 1);
    NetSpec net = build_net(dom, 2, 0.5, 1);
    bool found = false;
    for (const auto& el : net.elements)
        if (std::abs(el.fn(0) - Complex{1.0, 0.0}) < 1e-12 &&
            std::abs(el.fn(1) - Complex{-1.0, 0.0}) < 1e-12)
            found = true;
    CHECK(found);
    CHECK(static_cast<double>(net.elements.size()) <= net_size_bound(2, 1, 1, 2, 0.5, 1).value());
}

TEST_CASE("net elements are bounded, measurable, and deduplicated") {
    PointSpace dom(Field::make(2, 1), 1);
    NetSpec net = build_net(dom, 2, 0.4, 1);
    CHECK(static_cast<double>(net.elements.size()) <= net_size_bound(2, 1, 1, 2, 0.4, 1).value());
    std::set<std::vector<std::pair<int, int>>> sigs;
    for (const auto& el : net.elements) {
        CHECK(lp_inf_norm(el.fn) <= 1.0 + 1e-12);
        CHECK(sigs.insert(el.lattice_sig).second);
        // measurable w.r.t. the generating factor: constant on its atoms
        std::vector<NCPoly> polys;
        for (std::size_t pi : el.poly_indices) polys.push_back(net.polys[pi]);
        PolyFactor factor(dom, std::move(polys));
        for (Point x = 0; x < dom.size(); ++x)
            for (Point y = 0; y < dom.size(); ++y)
                if (factor.atom_of(x) == factor.atom_of(y))
                    CHECK(el.fn(x) == el.fn(y));
    }
    // self-distance is zero and projection is idempotent
    for (std::size_t i = 0; i < net.elements.size(); i += 7) {
        auto proj = nearest_in_net(net.elements[i].fn, net);
        CHECK(proj.distance <= 1e-12);
        CHECK(proj.index == i);
    }
}

TEST_CASE("nearest_in_net on the zero function stays within eps") {
    PointSpace dom(Field::make(2, 1), 1);
    NetSpec net = build_net(dom, 2, 0.4, 1);
    auto proj = nearest_in_net(DenseFn::zero(dom), net);
    CHECK(proj.distance <= 0.4);

    NetSpec empty;
    empty.field = dom.field_ptr();
    empty.n = 1;
    CHECK_THROWS_AS(nearest_in_net(DenseFn::zero(dom), empty), std::invalid_argument);
}

TEST_CASE("disk rounding never strays past 2*eps for in-disk values") {
    auto lattice = disk_lattice(0.4);
    Rng rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        double re = 2.0 * rng.real01() - 1.0;
        double im = 2.0 * rng.real01() - 1.0;
        if (re * re + im * im > 1.0) continue;
        auto [a, b] = round_to_disk_lattice(Complex{re, im}, 0.4, lattice);
        CHECK(std::abs(Complex{re, im} - Complex{0.4 * a, 0.4 * b}) <= 2.0 * 0.4 + 1e-12);
    }
}

TEST_CASE("cover check: vacuous, covering, and adversarial phases") {
    PointSpace dom(Field::make(2, 1), 1);
    NetSpec net = build_net(dom, 2, 0.4, 1);

    CoverReport vacuous = cover_check(net, 0, 1);
    CHECK(vacuous.max_distance == 0.0);
    CHECK(vacuous.pass);

    CoverReport report = cover_check(net, 200, 20250101);
    CHECK(report.pass);
    CHECK(report.max_distance <= 3.0 * 0.4 + 1e-9);
    CHECK(report.chain_ok);
    CHECK(report.chain_checked > 0);

    // adversarial inputs: phases of enumerated degree-<2 polynomials
    for (const auto& poly : enumerate_ncpolys(dom, 2)) {
        auto proj = nearest_in_net(poly.phase(), net);
        CHECK(proj.distance <= 3.0 * 0.4 + 1e-9);
    }
}

TEST_CASE("build_net refuses out-of-budget requests") {
    PointSpace dom(Field::make(2, 1), 2);
    CHECK_THROWS_AS(build_net(dom, 3, 0.1, 2, /*budget=*/10000), BudgetExceeded);
}
