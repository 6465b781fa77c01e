#pragma once

#include <Eigen/Dense>
#include <complex>

#include "hofa/common.hpp"
#include "hofa/domain.hpp"
#include "hofa/rng.hpp"

namespace hofa {

using Complex = std::complex<double>;

/// A complex-valued function on K^n stored as a full table of q^n values
/// in the canonical point order.
struct DenseFn {
    PointSpace dom;
    Eigen::ArrayXcd values;

    DenseFn(PointSpace d, Eigen::ArrayXcd v);
    static DenseFn constant(const PointSpace& dom, Complex c);
    static DenseFn zero(const PointSpace& dom) { return constant(dom, {0.0, 0.0}); }

    Complex operator()(Point x) const { return values[static_cast<Eigen::Index>(x)]; }
};

DenseFn operator+(const DenseFn& f, const DenseFn& g);
DenseFn operator-(const DenseFn& f, const DenseFn& g);
DenseFn operator*(const DenseFn& f, const DenseFn& g);  // pointwise
DenseFn operator*(Complex c, const DenseFn& f);

/// <f,g> = E_x[conj(f(x)) g(x)].
Complex inner_product(const DenseFn& f, const DenseFn& g);

/// Expectation-normalized L_p norm, p >= 1; lp_inf_norm gives max modulus.
double lp_norm(const DenseFn& f, double p_exp);
double lp_inf_norm(const DenseFn& f);

bool is_bounded(const DenseFn& f, double tol = 1e-12);

/// f(x + a) as a new table.
DenseFn translate(const DenseFn& f, Point a);

/// Uniform draw from the set of bounded functions: each value independent
/// uniform on the closed unit disk.
DenseFn random_bounded(const PointSpace& dom, Rng& rng);
/// Each value independent uniform on {-1, +1}.
DenseFn random_sign(const PointSpace& dom, Rng& rng);

/// A word over the alphabet {1, ..., m}, one symbol per point of K^n.
struct Word {
    PointSpace dom;
    int m;
    Eigen::ArrayXi symbols;

    Word(PointSpace d, int alphabet, Eigen::ArrayXi syms);
    int operator()(Point x) const { return symbols[static_cast<Eigen::Index>(x)]; }
};

/// Normalized Hamming distance: fraction of points where the symbols differ.
double hamming(const Word& w1, const Word& w2);

/// A function into the probability simplex on m symbols: one row per point.
struct SimplexFn {
    PointSpace dom;
    int m;
    Eigen::MatrixXd values;  // q^n rows, m columns

    SimplexFn(PointSpace d, int alphabet, Eigen::MatrixXd v);

    /// i-th coordinate function (1-based symbol), as a real-valued DenseFn.
    DenseFn coordinate_slice(int i) const;
};

/// Embeds each symbol i as the i-th coordinate vector e_i.
SimplexFn simplex_extend(const Word& w);

/// E_x <f^(x), g^(x)>; hamming(w1, w2) == 1 - this, exactly.
double simplex_overlap(const SimplexFn& f, const SimplexFn& g);

Word random_word(const PointSpace& dom, int m, Rng& rng);

}  // namespace hofa
