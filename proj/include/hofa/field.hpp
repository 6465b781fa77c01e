#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hofa {

/// A finite field K = F_{p^t} with a fixed monic irreducible modulus
/// polynomial over F_p and the power basis alpha_j = x^{j-1}.
///
/// Elements are small integer indices 0..q-1. The index encodes the
/// power-basis coordinates little-endian: index = c_0 + c_1 p + ... +
/// c_{t-1} p^{t-1}, so index 0 is the zero element and index 1 the one
/// element, and ascending index order is the canonical enumeration order.
/// All arithmetic is table-driven and exact.
class Field {
  public:
    /// modulus holds c_0..c_t with c_t = 1 (monic, degree t).
    /// Throws std::invalid_argument if p is not prime, the modulus is not
    /// monic of degree t, or it is reducible over F_p (checked by brute
    /// force over all monic factors of degree <= t/2).
    Field(int p, int t, std::vector<int> modulus);

    /// Field with a shipped canonical modulus: any p at t = 1, and
    /// F_4 (w^2+w+1), F_8 (x^3+x+1), F_9 (x^2+1). Other (p, t) need an
    /// explicit modulus.
    static std::shared_ptr<const Field> make(int p, int t);
    static std::shared_ptr<const Field> make(int p, int t, std::vector<int> modulus);

    int p() const { return p_; }
    int t() const { return t_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    // Arithmetic on element indices.
    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add_[idx(a, neg_[b])]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int inv(int a) const;  // throws std::domain_error on 0
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, std::int64_t e) const;

    /// Frobenius endomorphism a -> a^p.
    int frobenius(int a) const { return frob_[a]; }

    /// Trace onto the prime subfield: a + a^p + ... + a^{p^{t-1}},
    /// returned as a field element (its coordinates are (c, 0, ..., 0)).
    int trace(int a) const { return trace_[a]; }

    /// |Tr(a)| in {0, ..., p-1}.
    int trace_residue(int a) const { return trace_[a]; }

    /// j-th power-basis coordinate of a, j in [0, t).
    int coeff(int a, int j) const;
    std::vector<int> coeffs(int a) const;
    int from_coeffs(std::span<const int> c) const;

    /// The prime-subfield element with residue c in {0, ..., p-1}.
    int from_residue(int c) const { return c % p_; }

    /// Basis element alpha_j = x^{j-1}, j in [1, t].
    int basis(int j) const;

    /// All q elements in canonical order (identity on indices).
    std::vector<int> enumerate() const;

  private:
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
               static_cast<std::size_t>(b);
    }

    int p_, t_, q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_;  // q*q tables
    std::vector<int> neg_, inv_, frob_, trace_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Result of Gaussian elimination over K on a list of vectors in K^n:
/// the rank, the indices of a maximal independent subset (in input order),
/// and for every input vector i the coefficients lambda[i] with
/// y_i = sum_j lambda[i][j] * vectors[basis_indices[j]], exactly.
struct RankSolve {
    int rank = 0;
    std::vector<std::size_t> basis_indices;
    std::vector<std::vector<int>> lambda;
};

RankSolve rank_and_solve(const Field& fld, const std::vector<std::vector<int>>& vectors);

/// Rank over K of a list of vectors (rows) in K^n.
int rank_over_field(const Field& fld, const std::vector<std::vector<int>>& vectors);

}  // namespace hofa
