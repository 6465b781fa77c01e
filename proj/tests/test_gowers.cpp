#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "hofa/factors.hpp"
#include "hofa/gowers.hpp"
#include "hofa/ncpoly.hpp"

using namespace hofa;

namespace {

// Direct-definition oracle for U^2 on F_2^n: a 64-term (n=2) nested sum
// with its own xor point arithmetic, independent of the library recursion.
double u2_oracle_f2(const Eigen::ArrayXcd& f, int n) {
    const int size = 1 << n;
    Complex acc = 0;
    for (int x = 0; x < size; ++x)
        for (int h1 = 0; h1 < size; ++h1)
            for (int h2 = 0; h2 < size; ++h2)
                acc += f[x ^ h1 ^ h2] * std::conj(f[x ^ h1]) * std::conj(f[x ^ h2]) * f[x];
    acc /= static_cast<double>(size) * size * size;
    return std::pow(acc.real(), 0.25);
}

DenseFn sign_of_x1x2(const PointSpace& dom) {
    Eigen::ArrayXcd v(4);
    for (Point x = 0; x < 4; ++x) {
        auto c = dom.components(x);
        v[static_cast<Eigen::Index>(x)] = (c[0] * c[1]) ? -1.0 : 1.0;
    }
    return DenseFn(dom, v);
}

}  // namespace

TEST_CASE("multiplicative differencing") {
    PointSpace dom(Field::make(2, 1), 1);
    DenseFn one = DenseFn::constant(dom, 1.0);
    for (Point h = 0; h < dom.size(); ++h) {
        DenseFn d = mult_diff(one, h);
        CHECK(d(0) == Complex{1.0, 0.0});
        CHECK(d(1) == Complex{1.0, 0.0});
    }

    Eigen::ArrayXcd v(2);
    v << Complex{0.6, 0.3}, Complex{-0.2, 0.9};
    DenseFn f(dom, v);
    DenseFn at_zero = mult_diff(f, 0);
    for (Point x = 0; x < 2; ++x)
        CHECK(std::abs(at_zero(x) - Complex{std::norm(f(x)), 0.0}) <= 1e-15);

    Eigen::ArrayXcd chi(2);
    chi << 1.0, -1.0;
    DenseFn d = mult_diff(DenseFn(dom, chi), 1);
    CHECK(d(0) == Complex{-1.0, 0.0});
    CHECK(d(1) == Complex{-1.0, 0.0});
}

TEST_CASE("U^r of a unimodular constant is 1") {
    PointSpace dom(Field::make(3, 1), 1);
    DenseFn c = DenseFn::constant(dom, std::polar(1.0, 0.7));
    for (int r = 1; r <= 3; ++r) CHECK(gowers_norm_exact(c, r) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("U^1 equals the absolute mean") {
    PointSpace dom(Field::make(2, 1), 2);
    Rng rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        DenseFn f = random_bounded(dom, rng);
        CHECK(gowers_norm_exact(f, 1) == doctest::Approx(std::abs(f.values.mean())).epsilon(1e-12));
    }
}

TEST_CASE("U^2 of the bilinear sign function matches the direct summation oracle") {
    PointSpace dom(Field::make(2, 1), 2);
    DenseFn f = sign_of_x1x2(dom);
    const double expected = std::pow(4.0, -0.25);
    CHECK(u2_oracle_f2(f.values, 2) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(gowers_norm_exact(f, 2) == doctest::Approx(expected).epsilon(1e-9));
    // degree-2 phase structure: U^3 is exactly 1
    CHECK(gowers_norm_exact(f, 3) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("U^2 agrees with the oracle on random bounded tables") {
    PointSpace dom(Field::make(2, 1), 2);
    Rng rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        DenseFn f = random_bounded(dom, rng);
        CHECK(gowers_norm_exact(f, 2) == doctest::Approx(u2_oracle_f2(f.values, 2)).epsilon(1e-9));
    }
}

TEST_CASE("phase polynomials of degree < r have unit U^r norm") {
    for (int n : {1, 2}) {
        PointSpace dom(Field::make(2, 1), n);
        for (int r : {2, 3})
            for (const auto& poly : enumerate_ncpolys(dom, r))
                CHECK(gowers_norm_exact(poly.phase(), r) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("U^2 power equals the fourth-moment of the character spectrum") {
    // Standard Fourier identity as an independent cross-check.
    PointSpace dom(Field::make(2, 1), 3);
    Rng rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        DenseFn f = random_bounded(dom, rng);
        double sum4 = 0;
        for (Point a = 0; a < dom.size(); ++a) {
            Complex coeff = 0;
            for (Point x = 0; x < dom.size(); ++x) {
                int dot = 0;
                for (int i = 0; i < 3; ++i) dot ^= dom.component(a, i) & dom.component(x, i);
                coeff += f(x) * (dot ? -1.0 : 1.0);
            }
            coeff /= static_cast<double>(dom.size());
            sum4 += std::pow(std::abs(coeff), 4.0);
        }
        double u2 = gowers_norm_exact(f, 2);
        CHECK(std::pow(u2, 4.0) == doctest::Approx(sum4).epsilon(1e-9));
    }
}

TEST_CASE("monotonicity chain U^1 <= U^2 <= U^3 <= sup") {
    for (auto [p, n] : {std::pair{2, 3}, std::pair{3, 2}}) {
        PointSpace dom(Field::make(p, 1), n);
        for (int rep = 0; rep < 25; ++rep) {
            Rng rng = Rng::substream(31, static_cast<std::uint64_t>(100 * p + rep));
            DenseFn f = random_bounded(dom, rng);
            double u1 = gowers_norm_exact(f, 1);
            double u2 = gowers_norm_exact(f, 2);
            double u3 = gowers_norm_exact(f, 3);
            CHECK(u1 <= u2 + 1e-9);
            CHECK(u2 <= u3 + 1e-9);
            CHECK(u3 <= lp_inf_norm(f) + 1e-9);
        }
    }
}

TEST_CASE("U^r is invariant under translation and under degree-<r phase twists") {
    PointSpace dom(Field::make(2, 1), 2);
    Rng rng(41);
    for (int rep = 0; rep < 5; ++rep) {
        DenseFn f = random_bounded(dom, rng);
        for (int r : {2, 3}) {
            double base = gowers_norm_exact(f, r);
            for (Point a = 0; a < dom.size(); ++a)
                CHECK(gowers_norm_exact(translate(f, a), r) == doctest::Approx(base).epsilon(1e-9));
            for (const auto& poly : enumerate_ncpolys(dom, r))
                CHECK(gowers_norm_exact(poly.phase() * f, r) == doctest::Approx(base).epsilon(1e-9));
        }
    }
}

TEST_CASE("U^r satisfies the triangle inequality for r >= 2") {
    PointSpace dom(Field::make(2, 1), 2);
    for (int rep = 0; rep < 100; ++rep) {
        Rng rng = Rng::substream(47, static_cast<std::uint64_t>(rep));
        DenseFn f = random_bounded(dom, rng);
        DenseFn g = random_bounded(dom, rng);
        for (int r : {2, 3})
            CHECK(gowers_norm_exact(f + g, r) <=
                  gowers_norm_exact(f, r) + gowers_norm_exact(g, r) + 1e-9);
    }
}

TEST_CASE("exact norm refuses out-of-budget domains") {
    PointSpace dom(Field::make(2, 1), 4);
    CHECK_THROWS_AS(gowers_norm_exact(DenseFn::zero(dom), 3, /*budget=*/1000), BudgetExceeded);
}

TEST_CASE("Monte-Carlo estimator") {
    PointSpace dom(Field::make(2, 1), 3);

    DenseFn one = DenseFn::constant(dom, 1.0);
    GowersEstimate est = gowers_norm_mc(one, 2, 100, 7);
    CHECK(est.norm == doctest::Approx(1.0));
    CHECK(est.power_stderr == doctest::Approx(0.0));

    // agreement with the exact norm within 3 standard errors
    Rng rng(53);
    DenseFn f = random_bounded(dom, rng);
    double exact_power = std::pow(gowers_norm_exact(f, 2), 4.0);
    GowersEstimate mc = gowers_norm_mc(f, 2, 100000, 99);
    CHECK(std::abs(mc.power - exact_power) <= 3.0 * mc.power_stderr);

    // fixed seed: bit-identical
    GowersEstimate again = gowers_norm_mc(f, 2, 100000, 99);
    CHECK(mc.power == again.power);
    CHECK(mc.norm == again.norm);
    CHECK(mc.power_stderr == again.power_stderr);
}

TEST_CASE("linear systems reject proportional or zero forms") {
    auto f4 = Field::make(2, 2);
    CHECK_THROWS_AS(LinearSystem(f4, {{{1, 0}}, {{0, 0}}}), std::invalid_argument);
    // (w^2, w) = w * (w, 1)
    CHECK_THROWS_AS(LinearSystem(f4, {{{2, 1}}, {{3, 2}}}), std::invalid_argument);
    CHECK_NOTHROW(LinearSystem(f4, {{{1, 0}}, {{0, 1}}, {{1, 1}}}));
}

TEST_CASE("von Neumann with independent forms is a product of averages") {
    PointSpace dom(Field::make(2, 1), 1);
    auto fld = dom.field_ptr();
    LinearSystem sys(fld, {{{1, 0}}, {{0, 1}}});
    Rng rng(61);
    DenseFn f0 = random_bounded(dom, rng);
    DenseFn f1 = random_bounded(dom, rng);
    auto res = von_neumann_check(sys, {f0, f1});
    double prod = std::abs(f0.values.mean()) * std::abs(f1.values.mean());
    CHECK(res.lhs == doctest::Approx(prod).epsilon(1e-12));
    CHECK(res.holds);

    // equality case: equal unimodular averages meet the min-U^1 bound
    DenseFn c = DenseFn::constant(dom, std::polar(1.0, 0.3));
    auto eq = von_neumann_check(sys, {c, c});
    CHECK(eq.lhs == doctest::Approx(eq.bound).epsilon(1e-12));
    CHECK(eq.holds);
}

TEST_CASE("von Neumann on the 3-term progression system over F_3") {
    PointSpace dom(Field::make(3, 1), 1);
    auto fld = dom.field_ptr();
    LinearSystem ap(fld, {{{1, 0}}, {{1, 1}}, {{1, 2}}});
    for (int rep = 0; rep < 20; ++rep) {
        Rng rng = Rng::substream(67, static_cast<std::uint64_t>(rep));
        std::vector<DenseFn> fns{random_sign(dom, rng), random_sign(dom, rng), random_sign(dom, rng)};
        auto res = von_neumann_check(ap, fns);
        CHECK(res.holds);
    }
}

TEST_CASE("von Neumann bound is 1 for degree-<k phase inputs") {
    PointSpace dom(Field::make(2, 1), 1);
    auto fld = dom.field_ptr();
    LinearSystem sys(fld, {{{1, 0}}, {{0, 1}}, {{1, 1}}});  // k = 2
    auto polys = enumerate_ncpolys(dom, 2);
    for (const auto& poly : polys) {
        std::vector<DenseFn> fns{poly.phase(), poly.phase(), poly.phase()};
        auto res = von_neumann_check(sys, fns);
        CHECK(res.bound == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(res.holds);
    }
}

TEST_CASE("von Neumann rejects unbounded inputs and size mismatches") {
    PointSpace dom(Field::make(2, 1), 1);
    auto fld = dom.field_ptr();
    LinearSystem sys(fld, {{{1, 0}}, {{0, 1}}});
    DenseFn big = DenseFn::constant(dom, 2.0);
    DenseFn ok = DenseFn::constant(dom, 0.5);
    CHECK_THROWS_AS(von_neumann_check(sys, {big, ok}), std::invalid_argument);
    CHECK_THROWS_AS(von_neumann_check(sys, {ok}), std::invalid_argument);
}

TEST_CASE("box inequality: k = 1 reduces to the mean") {
    PointSpace dom(Field::make(2, 1), 1);
    Rng rng(71);
    DenseFn f = random_bounded(dom, rng);
    DenseFn g1 = DenseFn::constant(dom, 1.0);  // independent of its only coordinate: constant
    auto res = box_check(f, {g1});
    CHECK(res.lhs == doctest::Approx(std::abs(f.values.mean())).epsilon(1e-12));
    CHECK(res.bound == doctest::Approx(gowers_norm_exact(f, 1)).epsilon(1e-12));
    CHECK(res.holds);
}

TEST_CASE("box inequality at k = 2 over F_2") {
    PointSpace dom(Field::make(2, 1), 1);
    PointSpace pair_dom(dom.field_ptr(), 2);
    for (int rep = 0; rep < 20; ++rep) {
        Rng rng = Rng::substream(73, static_cast<std::uint64_t>(rep));
        DenseFn f = random_bounded(dom, rng);
        // g_1 depends only on x_2, g_2 only on x_1
        DenseFn a = random_bounded(dom, rng);
        DenseFn b = random_bounded(dom, rng);
        Eigen::ArrayXcd g1(4), g2(4);
        for (Point idx = 0; idx < 4; ++idx) {
            g1[static_cast<Eigen::Index>(idx)] = a(pair_dom.component(idx, 1));
            g2[static_cast<Eigen::Index>(idx)] = b(pair_dom.component(idx, 0));
        }
        auto res = box_check(f, {DenseFn(pair_dom, g1), DenseFn(pair_dom, g2)});
        CHECK(res.holds);
    }

    // f == 1: the average is dominated by the bound, with arbitrary valid g
    DenseFn one = DenseFn::constant(dom, 1.0);
    Rng rng(79);
    DenseFn a = random_bounded(dom, rng);
    Eigen::ArrayXcd g1(4), g2(4);
    for (Point idx = 0; idx < 4; ++idx) {
        g1[static_cast<Eigen::Index>(idx)] = a(pair_dom.component(idx, 1));
        g2[static_cast<Eigen::Index>(idx)] = a(pair_dom.component(idx, 0));
    }
    auto res = box_check(one, {DenseFn(pair_dom, g1), DenseFn(pair_dom, g2)});
    CHECK(res.bound == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.holds);
}

TEST_CASE("box inequality rejects a g depending on its forbidden coordinate") {
    PointSpace dom(Field::make(2, 1), 1);
    PointSpace pair_dom(dom.field_ptr(), 2);
    Eigen::ArrayXcd g1(4), g2(4);
    for (Point idx = 0; idx < 4; ++idx) {
        g1[static_cast<Eigen::Index>(idx)] = pair_dom.component(idx, 0) ? -1.0 : 1.0;  // depends on x_1
        g2[static_cast<Eigen::Index>(idx)] = 1.0;
    }
    DenseFn f = DenseFn::constant(dom, 1.0);
    CHECK_THROWS_AS(box_check(f, {DenseFn(pair_dom, g1), DenseFn(pair_dom, g2)}),
                    std::invalid_argument);
}
