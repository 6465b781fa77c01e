#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hofa/fn.hpp"

using namespace hofa;

TEST_CASE("canonical point order is little-endian with x_1 fastest") {
    PointSpace dom(Field::make(2, 1), 2);
    CHECK(dom.size() == 4);
    CHECK(dom.components(0) == std::vector<int>{0, 0});
    CHECK(dom.components(1) == std::vector<int>{1, 0});
    CHECK(dom.components(2) == std::vector<int>{0, 1});
    CHECK(dom.components(3) == std::vector<int>{1, 1});
    CHECK(dom.add(1, 2) == 3);
    CHECK(dom.add(3, 3) == 0);
}

TEST_CASE("inner product basics") {
    PointSpace dom(Field::make(2, 1), 1);
    DenseFn ones = DenseFn::constant(dom, 1.0);
    CHECK(inner_product(ones, ones) == Complex{1.0, 0.0});

    DenseFn eye = DenseFn::constant(dom, Complex{0.0, 1.0});
    CHECK(inner_product(ones, eye) == Complex{0.0, 1.0});

    Eigen::ArrayXcd chi(2);
    chi << 1.0, -1.0;  // (-1)^{x_1}
    CHECK(inner_product(DenseFn(dom, chi), ones) == Complex{0.0, 0.0});
}

TEST_CASE("lp norms") {
    PointSpace dom(Field::make(2, 1), 1);
    DenseFn c = DenseFn::constant(dom, Complex{0.0, -0.75});
    for (double p : {1.0, 2.0, 4.0}) CHECK(lp_norm(c, p) == doctest::Approx(0.75));
    CHECK(lp_inf_norm(c) == doctest::Approx(0.75));

    Eigen::ArrayXcd ind(2);
    ind << 1.0, 0.0;
    DenseFn f(dom, ind);
    CHECK(lp_norm(f, 1.0) == doctest::Approx(0.5));
    CHECK(lp_inf_norm(f) == doctest::Approx(1.0));

    Eigen::ArrayXcd sgn(2);
    sgn << 1.0, -1.0;
    CHECK(lp_norm(DenseFn(dom, sgn), 2.0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(lp_norm(f, 0.5), std::invalid_argument);
}

TEST_CASE("lp norm is monotone in the exponent") {
    PointSpace dom(Field::make(2, 1), 3);
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        DenseFn f = random_bounded(dom, rng);
        double l1 = lp_norm(f, 1.0), l2 = lp_norm(f, 2.0), l4 = lp_norm(f, 4.0), li = lp_inf_norm(f);
        CHECK(l1 <= l2 + 1e-12);
        CHECK(l2 <= l4 + 1e-12);
        CHECK(l4 <= li + 1e-12);
    }
}

TEST_CASE("hamming distance") {
    PointSpace dom(Field::make(2, 1), 2);
    Eigen::ArrayXi a(4), b(4);
    a << 1, 2, 1, 2;
    b << 1, 2, 1, 2;
    Word w1(dom, 2, a), w2(dom, 2, b);
    CHECK(hamming(w1, w2) == 0.0);

    b << 1, 2, 2, 2;
    CHECK(hamming(w1, Word(dom, 2, b)) == doctest::Approx(0.25));

    b << 2, 1, 2, 1;
    CHECK(hamming(w1, Word(dom, 2, b)) == 1.0);
}

TEST_CASE("simplex extension embeds symbols as coordinate vectors") {
    PointSpace dom(Field::make(2, 1), 1);
    Eigen::ArrayXi syms(2);
    syms << 2, 3;
    SimplexFn ext = simplex_extend(Word(dom, 3, syms));
    CHECK(ext.values(0, 0) == 0.0);
    CHECK(ext.values(0, 1) == 1.0);
    CHECK(ext.values(0, 2) == 0.0);

    Eigen::ArrayXi ones(2);
    ones << 1, 1;
    SimplexFn unit = simplex_extend(Word(dom, 1, ones));
    CHECK(unit.values(0, 0) == 1.0);
    CHECK(unit.values(1, 0) == 1.0);
}

TEST_CASE("word symbols are range-checked") {
    PointSpace dom(Field::make(2, 1), 1);
    Eigen::ArrayXi syms(2);
    syms << 0, 1;
    CHECK_THROWS_AS(Word(dom, 2, syms), std::invalid_argument);
    syms << 1, 3;
    CHECK_THROWS_AS(Word(dom, 2, syms), std::invalid_argument);
}

TEST_CASE("hamming distance equals one minus the simplex overlap") {
    // 100 seeded random word pairs, m <= 4, q^n <= 64, to 1e-12
    struct Config {
        int p, t, n, m;
    };
    const Config configs[] = {{2, 1, 3, 2}, {2, 2, 2, 4}, {3, 1, 2, 3}, {2, 1, 6, 4}, {3, 2, 1, 2}};
    int done = 0;
    for (const auto& cfg : configs) {
        PointSpace dom(Field::make(cfg.p, cfg.t), cfg.n);
        for (int rep = 0; rep < 20; ++rep, ++done) {
            Rng rng = Rng::substream(99, static_cast<std::uint64_t>(done));
            Word w1 = random_word(dom, cfg.m, rng);
            Word w2 = random_word(dom, cfg.m, rng);
            double direct = hamming(w1, w2);
            double analytic = 1.0 - simplex_overlap(simplex_extend(w1), simplex_extend(w2));
            CHECK(std::abs(direct - analytic) <= 1e-12);
        }
    }
    CHECK(done == 100);
}

TEST_CASE("coordinate slices of a simplex extension sum to one") {
    PointSpace dom(Field::make(3, 1), 2);
    Rng rng(11);
    Word w = random_word(dom, 3, rng);
    SimplexFn ext = simplex_extend(w);
    DenseFn total = ext.coordinate_slice(1);
    for (int i = 2; i <= ext.m; ++i) total = total + ext.coordinate_slice(i);
    for (Point x = 0; x < dom.size(); ++x)
        CHECK(std::abs(total(x) - Complex{1.0, 0.0}) <= 1e-12);
}

TEST_CASE("dimension mismatches are rejected") {
    PointSpace a(Field::make(2, 1), 1), b(Field::make(2, 1), 2);
    CHECK_THROWS_AS(inner_product(DenseFn::zero(a), DenseFn::zero(b)), std::invalid_argument);
    Eigen::ArrayXi s1 = Eigen::ArrayXi::Constant(2, 1), s2 = Eigen::ArrayXi::Constant(4, 1);
    CHECK_THROWS_AS(hamming(Word(a, 2, s1), Word(b, 2, s2)), std::invalid_argument);
}
