#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hofa/field.hpp"

using namespace hofa;

namespace {

// Frobenius-orbit oracle for the trace: sums x^{p^i} with exponentiation by
// repeated multiplication, independent of the table the Field precomputes.
int trace_oracle(const Field& fld, int x) {
    int acc = 0;
    std::int64_t e = 1;
    for (int i = 0; i < fld.t(); ++i) {
        int term = 1;
        for (std::int64_t s = 0; s < e; ++s) term = fld.mul(term, x);
        acc = fld.add(acc, term);
        e *= fld.p();
    }
    return acc;
}

}  // namespace

TEST_CASE("trace on F_4 sums the Frobenius orbit") {
    auto f4 = Field::make(2, 2);
    const int omega = 2;  // coordinates (0, 1)
    CHECK(trace_oracle(*f4, omega) == 1);
    CHECK(f4->trace(omega) == 1);
    CHECK(f4->trace(0) == 0);
}

TEST_CASE("trace of i vanishes on F_9") {
    auto f9 = Field::make(3, 2);  // modulus x^2 + 1, so element (0,1) squares to -1
    const int i_elem = 3;         // coordinates (0, 1)
    CHECK(f9->mul(i_elem, i_elem) == f9->neg(1));
    CHECK(trace_oracle(*f9, i_elem) == 0);
    CHECK(f9->trace(i_elem) == 0);
}

TEST_CASE("trace matches the orbit oracle everywhere") {
    for (auto fld : {Field::make(2, 2), Field::make(2, 3), Field::make(3, 2)})
        for (int x = 0; x < fld->q(); ++x) CHECK(fld->trace(x) == trace_oracle(*fld, x));
}

TEST_CASE("trace is F_p-linear and lands in the prime subfield") {
    for (auto fld : {Field::make(2, 1), Field::make(2, 2), Field::make(2, 3), Field::make(3, 1),
                     Field::make(3, 2)}) {
        for (int a = 0; a < fld->p(); ++a)
            for (int b = 0; b < fld->p(); ++b)
                for (int x = 0; x < fld->q(); ++x)
                    for (int y = 0; y < fld->q(); ++y) {
                        int lhs = fld->trace(fld->add(fld->mul(a, x), fld->mul(b, y)));
                        int rhs = (a * fld->trace(x) + b * fld->trace(y)) % fld->p();
                        CHECK(lhs == rhs);
                    }
        for (int x = 0; x < fld->q(); ++x) {
            int tr = fld->trace(x);
            CHECK(fld->pow(tr, fld->p()) == tr);
            CHECK(tr < fld->p());
        }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
    for (auto fld : {Field::make(2, 1), Field::make(3, 1), Field::make(5, 1), Field::make(7, 1),
                     Field::make(2, 2), Field::make(2, 3), Field::make(3, 2)}) {
        const int q = fld->q();
        for (int a = 0; a < q; ++a) {
            CHECK(fld->add(a, 0) == a);
            CHECK(fld->mul(a, 1) == a);
            CHECK(fld->add(a, fld->neg(a)) == 0);
            if (a != 0) CHECK(fld->mul(a, fld->inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(fld->add(a, b) == fld->add(b, a));
                CHECK(fld->mul(a, b) == fld->mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(fld->add(fld->add(a, b), c) == fld->add(a, fld->add(b, c)));
                    CHECK(fld->mul(fld->mul(a, b), c) == fld->mul(a, fld->mul(b, c)));
                    CHECK(fld->mul(a, fld->add(b, c)) == fld->add(fld->mul(a, b), fld->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field(4, 1, {0, 1}), std::invalid_argument);         // 4 not prime
    CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), std::invalid_argument);      // x^2+1 reducible over F_2
    CHECK_THROWS_AS(Field(2, 2, {1, 1}), std::invalid_argument);         // degree mismatch
    CHECK_THROWS_AS(Field(3, 2, {1, 0, 2}), std::invalid_argument);      // not monic
    CHECK_THROWS_AS(Field::make(5, 2), std::invalid_argument);           // no canonical modulus shipped
    CHECK_NOTHROW(Field(3, 2, {2, 2, 1}));                               // another F_9 modulus
}

TEST_CASE("canonical enumeration order") {
    auto f4 = Field::make(2, 2);
    CHECK(f4->enumerate() == std::vector<int>{0, 1, 2, 3});
    CHECK(f4->coeffs(2) == std::vector<int>{0, 1});  // omega
    CHECK(f4->coeffs(3) == std::vector<int>{1, 1});  // omega + 1
    auto f3 = Field::make(3, 1);
    CHECK(f3->enumerate() == std::vector<int>{0, 1, 2});
    auto f2 = Field::make(2, 1);
    CHECK(f2->enumerate() == std::vector<int>{0, 1});
}

TEST_CASE("rank_and_solve on the standard F_2 example") {
    auto f2 = Field::make(2, 1);
    auto sol = rank_and_solve(*f2, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(sol.rank == 2);
    CHECK(sol.basis_indices == std::vector<std::size_t>{0, 1});
    CHECK(sol.lambda[2] == std::vector<int>{1, 1});  // third = v_1 + v_2
}

TEST_CASE("rank_and_solve on the zero vector") {
    auto f4 = Field::make(2, 2);
    auto sol = rank_and_solve(*f4, {{0, 0, 0}});
    CHECK(sol.rank == 0);
    CHECK(sol.basis_indices.empty());
    CHECK(sol.lambda[0].empty());
}

TEST_CASE("rank_and_solve detects proportional F_4 vectors") {
    auto f4 = Field::make(2, 2);
    const int w = 2, w2 = f4->mul(2, 2);
    // (w^2, w) = w * (w, 1)
    auto sol = rank_and_solve(*f4, {{w, 1}, {w2, w}});
    CHECK(sol.rank == 1);
    CHECK(sol.basis_indices == std::vector<std::size_t>{0});
    CHECK(sol.lambda[1] == std::vector<int>{w});
}

TEST_CASE("rank_and_solve reconstruction is exact on pseudorandom inputs") {
    auto f9 = Field::make(3, 2);
    std::uint64_t state = 12345;
    auto next = [&state](int bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
    };
    for (int rep = 0; rep < 50; ++rep) {
        int n = 1 + next(4);
        int count = 1 + next(5);
        std::vector<std::vector<int>> vecs(static_cast<std::size_t>(count),
                                           std::vector<int>(static_cast<std::size_t>(n)));
        for (auto& v : vecs)
            for (auto& e : v) e = next(f9->q());
        auto sol = rank_and_solve(*f9, vecs);
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            std::vector<int> recon(static_cast<std::size_t>(n), 0);
            for (std::size_t j = 0; j < sol.basis_indices.size(); ++j)
                for (int c = 0; c < n; ++c)
                    recon[static_cast<std::size_t>(c)] = f9->add(
                        recon[static_cast<std::size_t>(c)],
                        f9->mul(sol.lambda[i][j],
                                vecs[sol.basis_indices[j]][static_cast<std::size_t>(c)]));
            CHECK(recon == vecs[i]);
        }
    }
}
