#include "hofa/ncpoly.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace hofa {

std::int64_t int_pow(std::int64_t base, int e) {
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

TorusValue::TorusValue(std::int64_t numerator, int m, int prime) : num(numerator), log_den(m), p(prime) {
    if (m < 0) throw std::invalid_argument("TorusValue: negative denominator exponent");
    std::int64_t den = int_pow(p, log_den);
    num %= den;
    if (num < 0) num += den;
    while (log_den > 0 && num % p == 0) {
        num /= p;
        --log_den;
    }
}

TorusValue TorusValue::operator+(const TorusValue& o) const {
    if (p != o.p) throw std::invalid_argument("TorusValue: mixed characteristics");
    int m = std::max(log_den, o.log_den);
    std::int64_t a = num * int_pow(p, m - log_den);
    std::int64_t b = o.num * int_pow(p, m - o.log_den);
    return TorusValue(a + b, m, p);
}

TorusValue TorusValue::operator-(const TorusValue& o) const { return *this + (-o); }

TorusValue TorusValue::operator-() const {
    return TorusValue(int_pow(p, log_den) - num, log_den, p);
}

double TorusValue::to_double() const {
    return static_cast<double>(num) / static_cast<double>(int_pow(p, log_den));
}

TorusFn::TorusFn(PointSpace d, std::vector<TorusValue> v) : dom(std::move(d)), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(dom.size()))
        throw std::invalid_argument("TorusFn: table size must be q^n");
}

TorusFn TorusFn::zero(const PointSpace& dom) {
    return TorusFn(dom, std::vector<TorusValue>(static_cast<std::size_t>(dom.size()),
                                                TorusValue::zero(dom.field().p())));
}

bool TorusFn::is_zero() const {
    for (const auto& v : values)
        if (!v.is_zero()) return false;
    return true;
}

TorusFn additive_diff(const TorusFn& f, Point h) {
    const auto perm = f.dom.translation(h);
    std::vector<TorusValue> out(f.values.size());
    for (std::size_t x = 0; x < f.values.size(); ++x)
        out[x] = f.values[static_cast<std::size_t>(perm[x])] - f.values[x];
    return TorusFn(f.dom, std::move(out));
}

NCPoly::NCPoly(PointSpace dom, int degree_bound, TorusValue theta, std::vector<NCTerm> terms)
    : dom_(std::move(dom)), degree_bound_(degree_bound), theta_(theta), terms_(std::move(terms)) {
    const Field& fld = dom_.field();
    if (theta_.p != fld.p()) theta_ = TorusValue(theta_.num, theta_.log_den, fld.p());
    const int nt = dom_.n() * fld.t();
    for (const auto& term : terms_) {
        if (static_cast<int>(term.exponents.size()) != nt)
            throw std::invalid_argument("NCPoly: exponent vector has wrong length");
        int total = 0;
        for (int e : term.exponents) {
            if (e < 0 || e >= fld.p()) throw std::invalid_argument("NCPoly: exponent out of range");
            total += e;
        }
        if (term.depth < 0) throw std::invalid_argument("NCPoly: negative depth");
        if (term.coeff < 1 || term.coeff >= fld.p())
            throw std::invalid_argument("NCPoly: coefficient out of range");
        if (total <= 0 || total > degree_bound_ - term.depth * (fld.p() - 1))
            throw std::invalid_argument("NCPoly: term violates the degree/depth constraint");
    }
}

NCPoly NCPoly::zero(const PointSpace& dom) {
    return NCPoly(dom, 0, TorusValue::zero(dom.field().p()), {});
}

NCPoly NCPoly::constant(const PointSpace& dom, TorusValue theta) {
    return NCPoly(dom, 0, theta, {});
}

int NCPoly::depth() const {
    int k = 0;
    for (const auto& term : terms_) k = std::max(k, term.depth);
    return k;
}

TorusValue NCPoly::eval(Point x) const {
    const Field& fld = dom_.field();
    const int p = fld.p(), t = fld.t(), n = dom_.n();
    // trace coordinates u_{i,j} = |Tr(alpha_j x_i)|
    std::vector<int> u(static_cast<std::size_t>(n * t));
    for (int i = 0; i < n; ++i) {
        int xi = dom_.component(x, i);
        for (int j = 0; j < t; ++j)
            u[static_cast<std::size_t>(i * t + j)] = fld.trace_residue(fld.mul(fld.basis(j + 1), xi));
    }
    TorusValue acc = theta_;
    for (const auto& term : terms_) {
        const std::int64_t den = int_pow(p, term.depth + 1);
        std::int64_t numer = term.coeff;
        for (std::size_t s = 0; s < u.size(); ++s)
            for (int e = 0; e < term.exponents[s]; ++e) numer = (numer * u[s]) % den;
        acc = acc + TorusValue(numer, term.depth + 1, p);
    }
    return acc;
}

TorusFn NCPoly::eval_table() const {
    std::vector<TorusValue> out(static_cast<std::size_t>(dom_.size()));
    for (Point x = 0; x < dom_.size(); ++x) out[static_cast<std::size_t>(x)] = eval(x);
    return TorusFn(dom_, std::move(out));
}

DenseFn NCPoly::phase() const {
    TorusFn tbl = eval_table();
    Eigen::ArrayXcd v(static_cast<Eigen::Index>(tbl.values.size()));
    for (std::size_t i = 0; i < tbl.values.size(); ++i)
        v[static_cast<Eigen::Index>(i)] =
            std::polar(1.0, 2.0 * std::numbers::pi * tbl.values[i].to_double());
    return DenseFn(dom_, std::move(v));
}

namespace {

bool diffs_vanish(const TorusFn& tbl, int d) {
    if (d == 0) return tbl.is_zero();
    for (Point h = 0; h < tbl.dom.size(); ++h)
        if (!diffs_vanish(additive_diff(tbl, h), d - 1)) return false;
    return true;
}

}  // namespace

bool degree_certify(const NCPoly& poly, int d, std::int64_t budget) {
    if (d < 0) throw std::invalid_argument("degree_certify: d must be >= 0");
    checked_pow(poly.dom().size(), d + 1, budget, "degree_certify");
    return diffs_vanish(poly.eval_table(), d);
}

SampledCertificate degree_certify_sampled(const NCPoly& poly, int d, std::int64_t tuples,
                                          std::uint64_t seed) {
    Rng rng(seed);
    TorusFn base = poly.eval_table();
    for (std::int64_t trial = 0; trial < tuples; ++trial) {
        TorusFn tbl = base;
        for (int i = 0; i < d; ++i)
            tbl = additive_diff(tbl, static_cast<Point>(rng.below(static_cast<std::uint64_t>(poly.dom().size()))));
        if (!tbl.is_zero()) return {false, trial + 1};
    }
    return {true, tuples};
}

DegreeCertificate degree_certify_auto(const NCPoly& poly, int d, std::int64_t budget,
                                      std::uint64_t seed) {
    try {
        checked_pow(poly.dom().size(), d + 1, budget, "degree_certify");
    } catch (const BudgetExceeded&) {
        constexpr std::int64_t kSampledTuples = 10000;
        SampledCertificate sampled = degree_certify_sampled(poly, d, kSampledTuples, seed);
        return {sampled.vanished, false, sampled.tuples};
    }
    std::int64_t tuples = 1;
    for (int i = 0; i < d; ++i) tuples *= poly.dom().size();
    return {degree_certify(poly, d, budget), true, tuples};
}

namespace {

// All (exponent vector, depth) slots of the degree-<r form, in canonical
// order: depth ascending, then exponent vectors in mixed-radix counting
// order (first coordinate fastest).
std::vector<std::pair<std::vector<int>, int>> term_slots(const PointSpace& dom, int r) {
    const Field& fld = dom.field();
    const int p = fld.p();
    const int nt = dom.n() * fld.t();
    const int d = r - 1;  // degree bound
    std::vector<std::pair<std::vector<int>, int>> slots;
    for (int k = 0; d - k * (p - 1) >= 1; ++k) {
        const int max_total = d - k * (p - 1);
        std::vector<int> exps(static_cast<std::size_t>(nt), 0);
        for (;;) {
            // advance mixed-radix counter
            int pos = 0;
            while (pos < nt) {
                if (++exps[static_cast<std::size_t>(pos)] < p) break;
                exps[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == nt) break;
            int total = 0;
            for (int e : exps) total += e;
            if (total >= 1 && total <= max_total) slots.emplace_back(exps, k);
        }
    }
    return slots;
}

std::vector<std::pair<std::int64_t, int>> table_signature(const TorusFn& tbl) {
    std::vector<std::pair<std::int64_t, int>> sig;
    sig.reserve(tbl.values.size());
    for (const auto& v : tbl.values) sig.emplace_back(v.num, v.log_den);
    return sig;
}

}  // namespace

std::int64_t ncpoly_slot_count(const PointSpace& dom, int r) {
    return static_cast<std::int64_t>(term_slots(dom, r).size());
}

std::int64_t ncpoly_count_bound_log_p(int n, int t, int r) {
    // C(nt + r - 1, r - 1) * r
    std::int64_t binom = 1;
    for (int i = 1; i <= r - 1; ++i) binom = binom * (n * t + r - 1 - (r - 1) + i) / i;
    return binom * r;
}

std::vector<NCPoly> enumerate_ncpolys(const PointSpace& dom, int r, std::int64_t budget) {
    if (r < 1) throw std::invalid_argument("enumerate_ncpolys: r must be >= 1");
    const Field& fld = dom.field();
    const int p = fld.p();
    const auto slots = term_slots(dom, r);
    checked_pow(p, static_cast<int>(slots.size()), budget, "enumerate_ncpolys");
    const std::int64_t total = int_pow(p, static_cast<int>(slots.size()));

    std::vector<NCPoly> out;
    std::map<std::vector<std::pair<std::int64_t, int>>, std::size_t> seen;
    std::vector<int> coeffs(slots.size(), 0);
    for (std::int64_t counter = 0; counter < total; ++counter) {
        std::vector<NCTerm> terms;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (coeffs[s] != 0) terms.push_back({slots[s].first, slots[s].second, coeffs[s]});
        NCPoly poly(dom, r - 1, TorusValue::zero(p), std::move(terms));
        auto sig = table_signature(poly.eval_table());
        if (seen.emplace(std::move(sig), out.size()).second) out.push_back(std::move(poly));
        // advance coefficient counter, slot 0 fastest
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (++coeffs[s] < p) break;
            coeffs[s] = 0;
        }
    }
    return out;
}

namespace {

// Inverse of the p x p Vandermonde matrix V[a][b] = a^b over F_p.
std::vector<std::vector<int>> inverse_vandermonde(int p) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(p),
                                    std::vector<int>(static_cast<std::size_t>(2 * p), 0));
    for (int a = 0; a < p; ++a) {
        int pw = 1;
        for (int b = 0; b < p; ++b) {
            m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = pw;
            pw = (pw * a) % p;
        }
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(p + a)] = 1;
    }
    auto inv_mod = [p](int x) {
        for (int y = 1; y < p; ++y)
            if ((x * y) % p == 1) return y;
        throw std::logic_error("not invertible mod p");
    };
    for (int col = 0; col < p; ++col) {
        int pivot = col;
        while (m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
        int s = inv_mod(m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
        for (auto& x : m[static_cast<std::size_t>(col)]) x = (x * s) % p;
        for (int row = 0; row < p; ++row) {
            if (row == col) continue;
            int c = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < 2 * p; ++j) {
                auto& x = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                x = ((x - c * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
    }
    std::vector<std::vector<int>> inv(static_cast<std::size_t>(p),
                                      std::vector<int>(static_cast<std::size_t>(p)));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            inv[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                m[static_cast<std::size_t>(a)][static_cast<std::size_t>(p + b)];
    return inv;
}

}  // namespace

NCPoly from_classical(const PointSpace& dom, const std::vector<ClassicalTerm>& classical) {
    const Field& fld = dom.field();
    const int p = fld.p(), t = fld.t(), n = dom.n(), q = fld.q();
    for (const auto& term : classical) {
        if (static_cast<int>(term.exponents.size()) != n)
            throw std::invalid_argument("from_classical: exponent tuple has wrong length");
        for (int e : term.exponents)
            if (e < 0 || e >= q) throw std::invalid_argument("from_classical: individual degree must be < q");
        if (term.coeff < 0 || term.coeff >= q)
            throw std::invalid_argument("from_classical: coefficient out of range");
    }
    int classical_degree = 0;
    for (const auto& term : classical) {
        if (term.coeff == 0) continue;
        int total = 0;
        for (int e : term.exponents) total += e;
        classical_degree = std::max(classical_degree, total);
    }

    // g(x) = |Tr(P_classical(x))| on the full domain.
    auto eval_classical = [&](Point x) {
        int acc = 0;
        for (const auto& term : classical) {
            if (term.coeff == 0) continue;
            int v = term.coeff;
            for (int i = 0; i < n; ++i)
                v = fld.mul(v, fld.pow(dom.component(x, i), term.exponents[static_cast<std::size_t>(i)]));
            acc = fld.add(acc, v);
        }
        return fld.trace_residue(acc);
    };

    // The trace-coordinate map x_i -> (|Tr(alpha_j x_i)|)_j is an F_p-linear
    // bijection; invert it by scanning the q elements once.
    const int nt = n * t;
    std::vector<int> elem_of_u(static_cast<std::size_t>(int_pow(p, t)), -1);
    for (int a = 0; a < q; ++a) {
        int key = 0, mult = 1;
        for (int j = 0; j < t; ++j) {
            key += fld.trace_residue(fld.mul(fld.basis(j + 1), a)) * mult;
            mult *= p;
        }
        elem_of_u[static_cast<std::size_t>(key)] = a;
    }

    // Tabulate g over u-space, then interpolate axis by axis with the
    // inverse Vandermonde to get the reduced F_p-polynomial coefficients.
    const std::int64_t u_count = int_pow(p, nt);
    std::vector<int> table(static_cast<std::size_t>(u_count));
    for (std::int64_t u = 0; u < u_count; ++u) {
        std::int64_t rem = u;
        std::vector<int> comps(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            int key = static_cast<int>(rem % int_pow(p, t));
            rem /= int_pow(p, t);
            comps[static_cast<std::size_t>(i)] = elem_of_u[static_cast<std::size_t>(key)];
        }
        table[static_cast<std::size_t>(u)] = eval_classical(dom.from_components(comps));
    }
    const auto vinv = inverse_vandermonde(p);
    std::vector<int> vals(static_cast<std::size_t>(p));
    std::int64_t stride = 1;
    for (int axis = 0; axis < nt; ++axis) {
        for (std::int64_t base = 0; base < u_count; ++base) {
            if ((base / stride) % p != 0) continue;
            for (int a = 0; a < p; ++a)
                vals[static_cast<std::size_t>(a)] = table[static_cast<std::size_t>(base + a * stride)];
            for (int b = 0; b < p; ++b) {
                int acc = 0;
                for (int a = 0; a < p; ++a)
                    acc = (acc + vinv[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] *
                                     vals[static_cast<std::size_t>(a)]) %
                          p;
                table[static_cast<std::size_t>(base + b * stride)] = acc;
            }
        }
        stride *= p;
    }

    TorusValue theta(table[0], 1, p);
    std::vector<NCTerm> terms;
    int u_degree = 0;
    for (std::int64_t u = 1; u < u_count; ++u) {
        int c = table[static_cast<std::size_t>(u)];
        if (c == 0) continue;
        std::vector<int> exps(static_cast<std::size_t>(nt));
        std::int64_t rem = u;
        int total = 0;
        for (int s = 0; s < nt; ++s) {
            exps[static_cast<std::size_t>(s)] = static_cast<int>(rem % p);
            total += exps[static_cast<std::size_t>(s)];
            rem /= p;
        }
        u_degree = std::max(u_degree, total);
        terms.push_back({std::move(exps), 0, c});
    }
    if (u_degree > classical_degree)
        throw std::logic_error("from_classical: interpolated degree exceeds the classical degree");

    NCPoly out(dom, u_degree, theta, std::move(terms));
    for (Point x = 0; x < dom.size(); ++x) {
        TorusValue expect(eval_classical(x), 1, p);
        if (!(out.eval(x) == expect))
            throw std::logic_error("from_classical: coefficient form disagrees with direct evaluation");
    }
    return out;
}

}  // namespace hofa
