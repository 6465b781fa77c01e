#include "hofa/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hofa {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, low degree first.
using Poly = std::vector<int>;

int poly_degree(const Poly& a) {
    for (int d = static_cast<int>(a.size()) - 1; d >= 0; --d)
        if (a[static_cast<std::size_t>(d)] != 0) return d;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = poly_degree(m);
    for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) {
        int c = a[static_cast<std::size_t>(d)];
        for (int j = 0; j <= dm; ++j) {
            auto& x = a[static_cast<std::size_t>(d - dm + j)];
            x = ((x - c * m[static_cast<std::size_t>(j)]) % p + p) % p;
        }
    }
    a.resize(static_cast<std::size_t>(dm));
    return a;
}

bool poly_is_zero(const Poly& a) { return poly_degree(a) < 0; }

// Brute-force irreducibility: no monic factor of degree 1..t/2 divides m.
bool is_irreducible(const Poly& m, int p) {
    int t = poly_degree(m);
    if (t < 1) return false;
    for (int d = 1; 2 * d <= t; ++d) {
        // enumerate monic candidates of degree d
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t c = 0; c < count; ++c) {
            Poly g(static_cast<std::size_t>(d) + 1, 0);
            std::int64_t v = c;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
                v /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_is_zero(poly_mod(m, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int t, std::vector<int> modulus) : p_(p), t_(t), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p_));
    if (t_ < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (static_cast<int>(modulus_.size()) != t_ + 1 || modulus_[static_cast<std::size_t>(t_)] != 1)
        throw std::invalid_argument("modulus must be monic of degree t with t+1 coefficients");
    for (auto& c : modulus_) c = ((c % p_) + p_) % p_;
    if (t_ > 1 && !is_irreducible(modulus_, p_))
        throw std::invalid_argument("modulus polynomial is reducible over F_p");

    std::int64_t q64 = 1;
    for (int i = 0; i < t_; ++i) q64 *= p_;
    if (q64 > 4096) throw std::invalid_argument("field too large for table-driven arithmetic");
    q_ = static_cast<int>(q64);

    auto to_poly = [&](int a) {
        Poly c(static_cast<std::size_t>(t_), 0);
        for (int j = 0; j < t_; ++j) {
            c[static_cast<std::size_t>(j)] = a % p_;
            a /= p_;
        }
        return c;
    };
    auto from_poly = [&](const Poly& c) {
        int a = 0;
        for (int j = t_ - 1; j >= 0; --j) a = a * p_ + c[static_cast<std::size_t>(j)];
        return a;
    };

    add_.assign(static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_), 0);
    mul_.assign(add_.size(), 0);
    neg_.assign(static_cast<std::size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = to_poly(a);
        Poly na(pa.size());
        for (std::size_t j = 0; j < pa.size(); ++j) na[j] = (p_ - pa[j]) % p_;
        neg_[static_cast<std::size_t>(a)] = from_poly(na);
        for (int b = 0; b < q_; ++b) {
            Poly pb = to_poly(b);
            Poly s(pa.size());
            for (std::size_t j = 0; j < pa.size(); ++j) s[j] = (pa[j] + pb[j]) % p_;
            add_[idx(a, b)] = from_poly(s);
            Poly m = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
            m.resize(static_cast<std::size_t>(t_), 0);
            mul_[idx(a, b)] = from_poly(m);
        }
    }

    inv_.assign(static_cast<std::size_t>(q_), 0);
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(a, b)] == 1) {
                inv_[static_cast<std::size_t>(a)] = b;
                break;
            }
    for (int a = 1; a < q_; ++a)
        if (inv_[static_cast<std::size_t>(a)] == 0)
            throw std::invalid_argument("modulus polynomial is reducible over F_p (no inverse)");

    frob_.assign(static_cast<std::size_t>(q_), 0);
    trace_.assign(static_cast<std::size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        int f = a;
        for (int i = 1; i < p_; ++i) f = mul_[idx(f, a)];
        frob_[static_cast<std::size_t>(a)] = f;
    }
    for (int a = 0; a < q_; ++a) {
        int acc = a, term = a;
        for (int i = 1; i < t_; ++i) {
            term = frob_[static_cast<std::size_t>(term)];
            acc = add_[idx(acc, term)];
        }
        // trace lies in the prime subfield: coordinates (c, 0, ..., 0)
        if (acc >= p_) throw std::logic_error("trace left the prime subfield");
        trace_[static_cast<std::size_t>(a)] = acc;
    }
}

std::shared_ptr<const Field> Field::make(int p, int t, std::vector<int> modulus) {
    return std::make_shared<const Field>(p, t, std::move(modulus));
}

std::shared_ptr<const Field> Field::make(int p, int t) {
    if (t == 1) {
        return make(p, 1, {0, 1});  // K = F_p, modulus x
    }
    if (p == 2 && t == 2) return make(2, 2, {1, 1, 1});
    if (p == 2 && t == 3) return make(2, 3, {1, 1, 0, 1});
    if (p == 3 && t == 2) return make(3, 2, {1, 0, 1});
    throw std::invalid_argument("no canonical modulus shipped for p=" + std::to_string(p) +
                                ", t=" + std::to_string(t) + "; supply one explicitly");
}

int Field::inv(int a) const {
    if (a == 0) throw std::domain_error("division by zero in field");
    return inv_[static_cast<std::size_t>(a)];
}

int Field::pow(int a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    int acc = 1, base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int Field::coeff(int a, int j) const {
    for (int i = 0; i < j; ++i) a /= p_;
    return a % p_;
}

std::vector<int> Field::coeffs(int a) const {
    std::vector<int> c(static_cast<std::size_t>(t_));
    for (int j = 0; j < t_; ++j) {
        c[static_cast<std::size_t>(j)] = a % p_;
        a /= p_;
    }
    return c;
}

int Field::from_coeffs(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != t_) throw std::invalid_argument("coefficient list has wrong length");
    int a = 0;
    for (int j = t_ - 1; j >= 0; --j) {
        int r = ((c[static_cast<std::size_t>(j)] % p_) + p_) % p_;
        a = a * p_ + r;
    }
    return a;
}

int Field::basis(int j) const {
    if (j < 1 || j > t_) throw std::invalid_argument("basis index out of range");
    int a = 1;
    for (int i = 1; i < j; ++i) a *= p_;
    return a;
}

std::vector<int> Field::enumerate() const {
    std::vector<int> out(static_cast<std::size_t>(q_));
    for (int a = 0; a < q_; ++a) out[static_cast<std::size_t>(a)] = a;
    return out;
}

RankSolve rank_and_solve(const Field& fld, const std::vector<std::vector<int>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("rank_and_solve needs at least one vector");
    const std::size_t n = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != n) throw std::invalid_argument("rank_and_solve: vectors of unequal dimension");

    RankSolve out;
    // Echelon rows and, alongside, each row's expression in the chosen basis.
    std::vector<std::vector<int>> echelon;        // reduced rows
    std::vector<std::vector<int>> expr;           // echelon row = sum expr[r][j] * basis vector j
    std::vector<std::size_t> pivot_col;

    for (std::size_t i = 0; i < vectors.size(); ++i) {
        std::vector<int> row = vectors[i];
        std::vector<int> combo(out.basis_indices.size(), 0);
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            int c = row[pivot_col[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) row[j] = fld.sub(row[j], fld.mul(c, echelon[r][j]));
            for (std::size_t j = 0; j < combo.size(); ++j)
                combo[j] = fld.add(combo[j], fld.mul(c, expr[r][j]));
        }
        std::size_t lead = n;
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] != 0) {
                lead = j;
                break;
            }
        if (lead == n) {
            out.lambda.push_back(std::move(combo));
            continue;
        }
        // New independent vector: vectors[i] joins the basis.
        int lead_inv = fld.inv(row[lead]);
        for (std::size_t j = 0; j < n; ++j) row[j] = fld.mul(row[j], lead_inv);
        // row = (vectors[i] - sum combo_j * basis_j) * lead_inv
        std::vector<int> row_expr(out.basis_indices.size() + 1, 0);
        for (std::size_t j = 0; j < combo.size(); ++j)
            row_expr[j] = fld.mul(fld.neg(combo[j]), lead_inv);
        row_expr.back() = lead_inv;
        for (auto& e : expr) e.push_back(0);
        echelon.push_back(std::move(row));
        expr.push_back(std::move(row_expr));
        pivot_col.push_back(lead);
        out.basis_indices.push_back(i);
        std::vector<int> self(out.basis_indices.size(), 0);
        self.back() = 1;
        out.lambda.push_back(std::move(self));
    }
    out.rank = static_cast<int>(out.basis_indices.size());
    for (auto& lam : out.lambda) lam.resize(static_cast<std::size_t>(out.rank), 0);
    return out;
}

int rank_over_field(const Field& fld, const std::vector<std::vector<int>>& vectors) {
    if (vectors.empty()) return 0;
    return rank_and_solve(fld, vectors).rank;
}

}  // namespace hofa
