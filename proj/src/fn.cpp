#include "hofa/fn.hpp"

#include <cmath>
#include <stdexcept>

namespace hofa {

namespace {
void require_same_domain(const PointSpace& a, const PointSpace& b, const char* op) {
    if (!a.same_domain(b)) throw std::invalid_argument(std::string(op) + ": domain mismatch");
}
}  // namespace

DenseFn::DenseFn(PointSpace d, Eigen::ArrayXcd v) : dom(std::move(d)), values(std::move(v)) {
    if (values.size() != static_cast<Eigen::Index>(dom.size()))
        throw std::invalid_argument("DenseFn: table size must be q^n");
}

DenseFn DenseFn::constant(const PointSpace& dom, Complex c) {
    return DenseFn(dom, Eigen::ArrayXcd::Constant(static_cast<Eigen::Index>(dom.size()), c));
}

DenseFn operator+(const DenseFn& f, const DenseFn& g) {
    require_same_domain(f.dom, g.dom, "operator+");
    return DenseFn(f.dom, f.values + g.values);
}

DenseFn operator-(const DenseFn& f, const DenseFn& g) {
    require_same_domain(f.dom, g.dom, "operator-");
    return DenseFn(f.dom, f.values - g.values);
}

DenseFn operator*(const DenseFn& f, const DenseFn& g) {
    require_same_domain(f.dom, g.dom, "operator*");
    return DenseFn(f.dom, f.values * g.values);
}

DenseFn operator*(Complex c, const DenseFn& f) { return DenseFn(f.dom, c * f.values); }

Complex inner_product(const DenseFn& f, const DenseFn& g) {
    require_same_domain(f.dom, g.dom, "inner_product");
    return (f.values.conjugate() * g.values).mean();
}

double lp_norm(const DenseFn& f, double p_exp) {
    if (!(p_exp >= 1.0)) throw std::invalid_argument("lp_norm: exponent must be >= 1");
    if (std::isinf(p_exp)) return lp_inf_norm(f);
    return std::pow(f.values.abs().pow(p_exp).mean(), 1.0 / p_exp);
}

double lp_inf_norm(const DenseFn& f) { return f.values.abs().maxCoeff(); }

bool is_bounded(const DenseFn& f, double tol) { return lp_inf_norm(f) <= 1.0 + tol; }

DenseFn translate(const DenseFn& f, Point a) {
    const auto perm = f.dom.translation(a);
    Eigen::ArrayXcd out(f.values.size());
    for (Point x = 0; x < f.dom.size(); ++x)
        out[static_cast<Eigen::Index>(x)] = f.values[static_cast<Eigen::Index>(perm[static_cast<std::size_t>(x)])];
    return DenseFn(f.dom, std::move(out));
}

DenseFn random_bounded(const PointSpace& dom, Rng& rng) {
    Eigen::ArrayXcd v(static_cast<Eigen::Index>(dom.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        for (;;) {
            double re = 2.0 * rng.real01() - 1.0;
            double im = 2.0 * rng.real01() - 1.0;
            if (re * re + im * im <= 1.0) {
                v[i] = Complex(re, im);
                break;
            }
        }
    }
    return DenseFn(dom, std::move(v));
}

DenseFn random_sign(const PointSpace& dom, Rng& rng) {
    Eigen::ArrayXcd v(static_cast<Eigen::Index>(dom.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.below(2) ? 1.0 : -1.0;
    return DenseFn(dom, std::move(v));
}

Word::Word(PointSpace d, int alphabet, Eigen::ArrayXi syms)
    : dom(std::move(d)), m(alphabet), symbols(std::move(syms)) {
    if (m < 1) throw std::invalid_argument("Word: alphabet size must be >= 1");
    if (symbols.size() != static_cast<Eigen::Index>(dom.size()))
        throw std::invalid_argument("Word: table size must be q^n");
    if ((symbols < 1).any() || (symbols > m).any())
        throw std::invalid_argument("Word: symbols must lie in {1, ..., m}");
}

double hamming(const Word& w1, const Word& w2) {
    require_same_domain(w1.dom, w2.dom, "hamming");
    if (w1.m != w2.m) throw std::invalid_argument("hamming: alphabet mismatch");
    return (w1.symbols != w2.symbols).cast<double>().mean();
}

SimplexFn::SimplexFn(PointSpace d, int alphabet, Eigen::MatrixXd v)
    : dom(std::move(d)), m(alphabet), values(std::move(v)) {
    if (values.rows() != static_cast<Eigen::Index>(dom.size()) || values.cols() != m)
        throw std::invalid_argument("SimplexFn: table must be q^n x m");
}

DenseFn SimplexFn::coordinate_slice(int i) const {
    if (i < 1 || i > m) throw std::invalid_argument("coordinate_slice: symbol out of range");
    Eigen::ArrayXcd out = values.col(i - 1).array().cast<Complex>();
    return DenseFn(dom, std::move(out));
}

SimplexFn simplex_extend(const Word& w) {
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(w.symbols.size(), w.m);
    for (Eigen::Index x = 0; x < w.symbols.size(); ++x) v(x, w.symbols[x] - 1) = 1.0;
    return SimplexFn(w.dom, w.m, std::move(v));
}

double simplex_overlap(const SimplexFn& f, const SimplexFn& g) {
    require_same_domain(f.dom, g.dom, "simplex_overlap");
    if (f.m != g.m) throw std::invalid_argument("simplex_overlap: alphabet mismatch");
    return (f.values.array() * g.values.array()).rowwise().sum().mean();
}

Word random_word(const PointSpace& dom, int m, Rng& rng) {
    Eigen::ArrayXi syms(static_cast<Eigen::Index>(dom.size()));
    for (Eigen::Index i = 0; i < syms.size(); ++i)
        syms[i] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    return Word(dom, m, std::move(syms));
}

}  // namespace hofa
