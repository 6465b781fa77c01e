#include "hofa/codes.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "hofa/common.hpp"
#include "hofa/gowers.hpp"

namespace hofa {

AffineMap::AffineMap(PointSpace dom, std::vector<int> matrix, std::vector<int> offset)
    : dom_(std::move(dom)), matrix_(std::move(matrix)), offset_(std::move(offset)) {
    const int n = dom_.n();
    if (static_cast<int>(matrix_.size()) != n * n || static_cast<int>(offset_.size()) != n)
        throw std::invalid_argument("AffineMap: shape mismatch");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)] =
            std::vector<int>(matrix_.begin() + i * n, matrix_.begin() + (i + 1) * n);
    invertible_ = n == 0 || rank_over_field(dom_.field(), rows) == n;
}

Point AffineMap::apply(Point x) const {
    const Field& fld = dom_.field();
    const int n = dom_.n();
    std::vector<int> comps = dom_.components(x);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int acc = offset_[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            acc = fld.add(acc, fld.mul(entry(i, j), comps[static_cast<std::size_t>(j)]));
        out[static_cast<std::size_t>(i)] = acc;
    }
    return dom_.from_components(out);
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
    const Field& fld = dom_.field();
    const int n = dom_.n();
    std::vector<int> mat(static_cast<std::size_t>(n * n), 0);
    std::vector<int> off(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int l = 0; l < n; ++l) acc = fld.add(acc, fld.mul(entry(i, l), inner.entry(l, j)));
            mat[static_cast<std::size_t>(i * n + j)] = acc;
        }
        int acc = offset_[static_cast<std::size_t>(i)];
        for (int l = 0; l < n; ++l)
            acc = fld.add(acc, fld.mul(entry(i, l), inner.offset_[static_cast<std::size_t>(l)]));
        off[static_cast<std::size_t>(i)] = acc;
    }
    return AffineMap(dom_, std::move(mat), std::move(off));
}

AffineMap AffineMap::inverse() const {
    if (!invertible_) throw std::domain_error("AffineMap: not invertible");
    const Field& fld = dom_.field();
    const int n = dom_.n();
    // Gauss-Jordan on [A | I] over K
    std::vector<std::vector<int>> aug(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(i, j);
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (aug[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
        std::swap(aug[static_cast<std::size_t>(pivot)], aug[static_cast<std::size_t>(col)]);
        int s = fld.inv(aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
        for (auto& x : aug[static_cast<std::size_t>(col)]) x = fld.mul(x, s);
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            int c = aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < 2 * n; ++j)
                aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                    fld.sub(aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)],
                            fld.mul(c, aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]));
        }
    }
    std::vector<int> inv_mat(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv_mat[static_cast<std::size_t>(i * n + j)] =
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    // x -> A^{-1} x - A^{-1} b
    std::vector<int> inv_off(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int acc = 0;
        for (int j = 0; j < n; ++j)
            acc = fld.add(acc, fld.mul(inv_mat[static_cast<std::size_t>(i * n + j)],
                                       offset_[static_cast<std::size_t>(j)]));
        inv_off[static_cast<std::size_t>(i)] = fld.neg(acc);
    }
    return AffineMap(dom_, std::move(inv_mat), std::move(inv_off));
}

AffineMap identity_affine(const PointSpace& dom) {
    const int n = dom.n();
    std::vector<int> mat(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) mat[static_cast<std::size_t>(i * n + i)] = 1;
    return AffineMap(dom, std::move(mat), std::vector<int>(static_cast<std::size_t>(n), 0));
}

AffineMap random_invertible_affine(const PointSpace& dom, Rng& rng) {
    const int n = dom.n();
    const int q = dom.field().q();
    for (;;) {
        std::vector<int> mat(static_cast<std::size_t>(n * n));
        for (auto& e : mat) e = static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
        std::vector<int> off(static_cast<std::size_t>(n));
        for (auto& e : off) e = static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
        AffineMap map(dom, std::move(mat), std::move(off));
        if (map.invertible()) return map;
    }
}

std::vector<AffineMap> enumerate_invertible_affines(const PointSpace& dom, std::int64_t budget) {
    const int n = dom.n();
    const int q = dom.field().q();
    const std::int64_t mats = checked_pow(q, n * n, budget, "enumerate_invertible_affines");
    if (mats > budget / dom.size()) throw BudgetExceeded("enumerate_invertible_affines: offsets exceed budget");
    std::vector<AffineMap> out;
    for (std::int64_t mi = 0; mi < mats; ++mi) {
        std::vector<int> mat(static_cast<std::size_t>(n * n));
        std::int64_t rem = mi;
        for (auto& e : mat) {
            e = static_cast<int>(rem % q);
            rem /= q;
        }
        AffineMap probe(dom, mat, std::vector<int>(static_cast<std::size_t>(n), 0));
        if (!probe.invertible()) continue;
        for (Point b = 0; b < dom.size(); ++b)
            out.emplace_back(dom, mat, dom.components(b));
    }
    return out;
}

Word apply_affine(const Word& w, const AffineMap& map) {
    Eigen::ArrayXi out(w.symbols.size());
    for (Point x = 0; x < w.dom.size(); ++x)
        out[static_cast<Eigen::Index>(x)] = w.symbols[static_cast<Eigen::Index>(map.apply(x))];
    return Word(w.dom, w.m, std::move(out));
}

DenseFn apply_affine(const DenseFn& f, const AffineMap& map) {
    Eigen::ArrayXcd out(f.values.size());
    for (Point x = 0; x < f.dom.size(); ++x)
        out[static_cast<Eigen::Index>(x)] = f.values[static_cast<Eigen::Index>(map.apply(x))];
    return DenseFn(f.dom, std::move(out));
}

CodeSpec::CodeSpec(PointSpace d, int alphabet, std::vector<Word> words)
    : dom(std::move(d)), m(alphabet), codewords(std::move(words)) {
    std::set<std::vector<int>> seen;
    for (const auto& w : codewords) {
        if (!w.dom.same_domain(dom) || w.m != m) throw std::invalid_argument("CodeSpec: word shape mismatch");
        std::vector<int> key(w.symbols.data(), w.symbols.data() + w.symbols.size());
        if (!seen.insert(std::move(key)).second)
            throw std::invalid_argument("CodeSpec: duplicate codeword");
    }
}

namespace {

std::set<std::vector<int>> codeword_index(const CodeSpec& code) {
    std::set<std::vector<int>> index;
    for (const auto& w : code.codewords)
        index.insert(std::vector<int>(w.symbols.data(), w.symbols.data() + w.symbols.size()));
    return index;
}

bool is_codeword(const std::set<std::vector<int>>& index, const Word& w) {
    return index.count(std::vector<int>(w.symbols.data(), w.symbols.data() + w.symbols.size())) > 0;
}

}  // namespace

bool affine_invariance_check(const CodeSpec& code, bool exhaustive, std::uint64_t seed,
                             std::int64_t trials, std::int64_t budget) {
    auto index = codeword_index(code);
    if (exhaustive) {
        auto maps = enumerate_invertible_affines(code.dom, budget);
        for (const auto& map : maps)
            for (const auto& w : code.codewords)
                if (!is_codeword(index, apply_affine(w, map))) return false;
        return true;
    }
    Rng rng(seed);
    for (std::int64_t i = 0; i < trials; ++i) {
        const Word& w = code.codewords[rng.below(code.codewords.size())];
        AffineMap map = random_invertible_affine(code.dom, rng);
        if (!is_codeword(index, apply_affine(w, map))) return false;
    }
    return true;
}

CodeSpec reed_muller(const PointSpace& dom, int d, std::int64_t budget) {
    const Field& fld = dom.field();
    const int q = fld.q(), n = dom.n();
    if (d < 0) throw std::invalid_argument("reed_muller: degree must be >= 0");
    // monomials with total degree <= d and individual degrees < q
    std::vector<std::vector<int>> monomials;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (;;) {
        int total = 0;
        for (int e : exps) total += e;
        if (total <= d) monomials.push_back(exps);
        int pos = 0;
        while (pos < n) {
            if (++exps[static_cast<std::size_t>(pos)] < q) break;
            exps[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    const int dim = static_cast<int>(monomials.size());
    const std::int64_t count = checked_pow(q, dim, budget, "reed_muller");

    // evaluation tables of the monomials, reused across codewords
    std::vector<std::vector<int>> mono_eval(monomials.size(),
                                            std::vector<int>(static_cast<std::size_t>(dom.size())));
    for (std::size_t mi = 0; mi < monomials.size(); ++mi)
        for (Point x = 0; x < dom.size(); ++x) {
            int v = 1;
            for (int i = 0; i < n; ++i)
                v = fld.mul(v, fld.pow(dom.component(x, i), monomials[mi][static_cast<std::size_t>(i)]));
            mono_eval[mi][static_cast<std::size_t>(x)] = v;
        }

    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(count));
    std::vector<int> coeff(monomials.size(), 0);
    for (std::int64_t ci = 0; ci < count; ++ci) {
        Eigen::ArrayXi syms(static_cast<Eigen::Index>(dom.size()));
        for (Point x = 0; x < dom.size(); ++x) {
            int acc = 0;
            for (std::size_t mi = 0; mi < monomials.size(); ++mi)
                if (coeff[mi] != 0)
                    acc = fld.add(acc, fld.mul(coeff[mi], mono_eval[mi][static_cast<std::size_t>(x)]));
            syms[static_cast<Eigen::Index>(x)] = acc + 1;
        }
        words.emplace_back(dom, q, std::move(syms));
        for (std::size_t mi = 0; mi < monomials.size(); ++mi) {
            if (++coeff[mi] < q) break;
            coeff[mi] = 0;
        }
    }
    CodeSpec code(dom, q, std::move(words));
    code.generator = "reed_muller(d=" + std::to_string(d) + ")";
    return code;
}

namespace {

class RmLineModel final : public LccQueryModel {
  public:
    RmLineModel(PointSpace dom, int d) : dom_(std::move(dom)), d_(d) {
        if (dom_.field().q() <= d_ + 1)
            throw std::invalid_argument("rm_line_corrector: need q > d+1 distinct nonzero scalars");
    }

    int queries() const override { return d_ + 1; }

    LccQuery sample(Point x, Rng& rng) const override {
        const Field& fld = dom_.field();
        Point y = 1 + static_cast<Point>(rng.below(static_cast<std::uint64_t>(dom_.size() - 1)));
        // d+1 distinct nonzero scalars by partial Fisher-Yates
        std::vector<int> pool(static_cast<std::size_t>(fld.q() - 1));
        for (int i = 0; i < fld.q() - 1; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
        std::vector<int> scalars;
        for (int i = 0; i <= d_; ++i) {
            std::size_t j = static_cast<std::size_t>(i) + rng.below(pool.size() - static_cast<std::size_t>(i));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            scalars.push_back(pool[static_cast<std::size_t>(i)]);
        }
        return make_query(x, y, scalars);
    }

    std::vector<LccQuery> enumerate(Point x) const override {
        const Field& fld = dom_.field();
        std::vector<LccQuery> out;
        std::vector<int> nonzero;
        for (int s = 1; s < fld.q(); ++s) nonzero.push_back(s);
        std::vector<int> scalars(static_cast<std::size_t>(d_ + 1));
        // ordered tuples of distinct nonzero scalars
        std::vector<int> pick(static_cast<std::size_t>(d_ + 1), 0);
        for (Point y = 1; y < dom_.size(); ++y) {
            std::function<void(int, std::vector<int>&)> rec = [&](int depth, std::vector<int>& acc) {
                if (depth == d_ + 1) {
                    out.push_back(make_query(x, y, acc));
                    return;
                }
                for (int s : nonzero) {
                    if (std::find(acc.begin(), acc.end(), s) != acc.end()) continue;
                    acc.push_back(s);
                    rec(depth + 1, acc);
                    acc.pop_back();
                }
            };
            std::vector<int> acc;
            rec(0, acc);
        }
        return out;
    }

  private:
    LccQuery make_query(Point x, Point y, std::vector<int> scalars) const {
        const Field* fld = &dom_.field();
        LccQuery query;
        query.points.reserve(scalars.size());
        for (int s : scalars) query.points.push_back(dom_.add(x, dom_.scale(s, y)));
#ifndef NDEBUG
        for (std::size_t i = 0; i < query.points.size(); ++i) {
            assert(query.points[i] != x);
            for (std::size_t j = i + 1; j < query.points.size(); ++j)
                assert(query.points[i] != query.points[j]);
        }
#endif
        query.decode = [fld, scalars = std::move(scalars)](std::span<const int> symbols) {
            // Lagrange interpolation through (t_i, w(x + t_i y)), value at 0:
            // P(0) = sum_i v_i * prod_{j != i} t_j / (t_j - t_i)
            int acc = 0;
            for (std::size_t i = 0; i < scalars.size(); ++i) {
                int term = symbols[i] - 1;
                for (std::size_t j = 0; j < scalars.size(); ++j) {
                    if (j == i) continue;
                    term = fld->mul(term, fld->div(scalars[j], fld->sub(scalars[j], scalars[i])));
                }
                acc = fld->add(acc, term);
            }
            return acc + 1;
        };
        return query;
    }

    PointSpace dom_;
    int d_;
};

}  // namespace

std::shared_ptr<const LccQueryModel> rm_line_corrector(const PointSpace& dom, int d) {
    return std::make_shared<RmLineModel>(dom, d);
}

namespace {

class BlrModel final : public LtcQueryModel {
  public:
    explicit BlrModel(PointSpace dom) : dom_(std::move(dom)) {}

    int queries() const override { return 3; }

    LtcQuery sample(Rng& rng) const override {
        Point y = static_cast<Point>(rng.below(static_cast<std::uint64_t>(dom_.size())));
        Point z = static_cast<Point>(rng.below(static_cast<std::uint64_t>(dom_.size())));
        return make_query(y, z);
    }

    std::vector<LtcQuery> enumerate() const override {
        std::vector<LtcQuery> out;
        out.reserve(static_cast<std::size_t>(dom_.size() * dom_.size()));
        for (Point y = 0; y < dom_.size(); ++y)
            for (Point z = 0; z < dom_.size(); ++z) out.push_back(make_query(y, z));
        return out;
    }

  private:
    LtcQuery make_query(Point y, Point z) const {
        LtcQuery query;
        query.points = {y, z, dom_.add(y, z)};
        query.accept = [](std::span<const int> s) {
            return ((s[0] - 1) ^ (s[1] - 1)) == (s[2] - 1);
        };
        return query;
    }

    PointSpace dom_;
};

}  // namespace

CodeSpec hadamard_blr(const PointSpace& dom) {
    const Field& fld = dom.field();
    if (fld.q() != 2) throw std::invalid_argument("hadamard_blr: base field must be F_2");
    std::vector<Word> words;
    for (Point a = 0; a < dom.size(); ++a) {
        Eigen::ArrayXi syms(static_cast<Eigen::Index>(dom.size()));
        for (Point x = 0; x < dom.size(); ++x) {
            int acc = 0;
            for (int i = 0; i < dom.n(); ++i)
                acc ^= dom.component(a, i) & dom.component(x, i);
            syms[static_cast<Eigen::Index>(x)] = acc + 1;
        }
        words.emplace_back(dom, 2, std::move(syms));
    }
    CodeSpec code(dom, 2, std::move(words));
    code.ltc = std::make_shared<BlrModel>(dom);
    code.generator = "hadamard";
    return code;
}

Eigen::VectorXd extend_decoder(int m, int r, const std::function<int(std::span<const int>)>& decode,
                               const std::vector<Eigen::VectorXd>& inputs) {
    if (static_cast<int>(inputs.size()) != r) throw std::invalid_argument("extend_decoder: need r inputs");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(m);
    std::vector<int> symbols(static_cast<std::size_t>(r), 1);
    for (;;) {
        double weight = 1.0;
        for (int i = 0; i < r; ++i)
            weight *= inputs[static_cast<std::size_t>(i)][symbols[static_cast<std::size_t>(i)] - 1];
        if (weight != 0.0) out[decode(symbols) - 1] += weight;
        int pos = 0;
        while (pos < r) {
            if (++symbols[static_cast<std::size_t>(pos)] <= m) break;
            symbols[static_cast<std::size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == r) break;
    }
    return out;
}

double extend_tester(int m, int r, const std::function<bool(std::span<const int>)>& accept,
                     const std::vector<Eigen::VectorXd>& inputs) {
    if (static_cast<int>(inputs.size()) != r) throw std::invalid_argument("extend_tester: need r inputs");
    double out = 0.0;
    std::vector<int> symbols(static_cast<std::size_t>(r), 1);
    for (;;) {
        double weight = 1.0;
        for (int i = 0; i < r; ++i)
            weight *= inputs[static_cast<std::size_t>(i)][symbols[static_cast<std::size_t>(i)] - 1];
        if (weight != 0.0 && accept(symbols)) out += weight;
        int pos = 0;
        while (pos < r) {
            if (++symbols[static_cast<std::size_t>(pos)] <= m) break;
            symbols[static_cast<std::size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == r) break;
    }
    return out;
}

OrbitSample orbit_sampler(const PointSpace& dom, const std::vector<Point>& tuple, std::int64_t count,
                          std::uint64_t seed) {
    if (tuple.empty()) throw std::invalid_argument("orbit_sampler: empty tuple");
    std::vector<std::vector<int>> vectors;
    vectors.reserve(tuple.size());
    for (Point y : tuple) vectors.push_back(dom.components(y));
    RankSolve solved = rank_and_solve(dom.field(), vectors);

    OrbitSample out;
    out.rank = solved.rank;
    out.lambda = solved.lambda;
    out.tuples.reserve(static_cast<std::size_t>(count));
    Rng rng(seed);
    std::int64_t independent = 0;
    const int t = solved.rank;
    for (std::int64_t s = 0; s < count; ++s) {
        Point z0 = static_cast<Point>(rng.below(static_cast<std::uint64_t>(dom.size())));
        std::vector<Point> zs(static_cast<std::size_t>(t));
        for (int j = 0; j < t; ++j)
            zs[static_cast<std::size_t>(j)] = static_cast<Point>(rng.below(static_cast<std::uint64_t>(dom.size())));
        if (t == 0 || [&] {
                std::vector<std::vector<int>> zvecs;
                zvecs.reserve(zs.size());
                for (Point z : zs) zvecs.push_back(dom.components(z));
                return rank_over_field(dom.field(), zvecs) == t;
            }())
            ++independent;
        std::vector<Point> image(tuple.size());
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            Point pt = z0;
            for (int j = 0; j < t; ++j)
                pt = dom.add(pt, dom.scale(solved.lambda[i][static_cast<std::size_t>(j)],
                                           zs[static_cast<std::size_t>(j)]));
            image[i] = pt;
        }
        out.tuples.push_back(std::move(image));
    }
    out.independent_fraction = count > 0 ? static_cast<double>(independent) / static_cast<double>(count) : 0.0;
    return out;
}

double min_distance(const CodeSpec& code, std::int64_t budget) {
    const std::int64_t count = static_cast<std::int64_t>(code.codewords.size());
    if (count < 2) throw std::invalid_argument("min_distance: needs at least two codewords");
    const std::int64_t pairs = count * (count - 1) / 2;
    if (pairs > budget) throw BudgetExceeded("min_distance: pairwise scan exceeds budget");

    double min_d = parallel_map_reduce<double>(
        count, /*block_size=*/8, 2.0,
        [&](std::int64_t lo, std::int64_t hi) {
            double local = 2.0;
            for (std::int64_t i = lo; i < hi; ++i)
                for (std::int64_t j = i + 1; j < count; ++j)
                    local = std::min(local, hamming(code.codewords[static_cast<std::size_t>(i)],
                                                    code.codewords[static_cast<std::size_t>(j)]));
            return local;
        },
        [](double& into, double&& part) { into = std::min(into, part); });
    return min_d;
}

Word corrupt(const Word& w, double delta, Rng& rng) {
    Eigen::ArrayXi syms = w.symbols;
    for (Eigen::Index i = 0; i < syms.size(); ++i) {
        if (rng.real01() >= delta) continue;
        if (w.m < 2) continue;  // no wrong symbol exists
        int shift = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(w.m - 1)));
        syms[i] = 1 + (syms[i] - 1 + shift) % w.m;
    }
    return Word(w.dom, w.m, std::move(syms));
}

LccSimReport lcc_simulate(const CodeSpec& code, double delta, std::int64_t trials,
                          std::uint64_t seed) {
    if (!code.lcc) throw std::invalid_argument("lcc_simulate: code has no corrector");
    std::int64_t successes = parallel_map_reduce<std::int64_t>(
        trials, /*block_size=*/256, std::int64_t{0},
        [&](std::int64_t lo, std::int64_t hi) {
            std::int64_t acc = 0;
            std::vector<int> symbols;
            for (std::int64_t trial = lo; trial < hi; ++trial) {
                Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(trial));
                const Word& cw = code.codewords[rng.below(code.codewords.size())];
                Word received = corrupt(cw, delta, rng);
                Point x = static_cast<Point>(rng.below(static_cast<std::uint64_t>(code.dom.size())));
                LccQuery query = code.lcc->sample(x, rng);
                symbols.clear();
                for (Point pt : query.points) symbols.push_back(received(pt));
                if (query.decode(symbols) == cw(x)) ++acc;
            }
            return acc;
        },
        [](std::int64_t& into, std::int64_t&& part) { into += part; });

    LccSimReport report;
    report.trials = trials;
    report.success = static_cast<double>(successes) / static_cast<double>(trials);
    double half = 1.96 * std::sqrt(report.success * (1.0 - report.success) / static_cast<double>(trials));
    report.ci_low = std::max(0.0, report.success - half);
    report.ci_high = std::min(1.0, report.success + half);
    return report;
}

std::optional<LccCertificate> certify_lcc(CodeSpec& code, double delta, double tau,
                                          std::int64_t trials, std::uint64_t seed) {
    if (!code.lcc) throw std::invalid_argument("certify_lcc: code has no corrector");
    LccSimReport sim = lcc_simulate(code, delta, trials, seed);
    if (sim.success < 1.0 - tau) return std::nullopt;
    LccCertificate cert;
    cert.r = code.lcc->queries();
    cert.delta = delta;
    cert.tau = tau;
    cert.measured_success = sim.success;
    cert.ci_low = sim.ci_low;
    cert.ci_high = sim.ci_high;
    cert.trials = trials;
    cert.seed = seed;
    code.certificate = cert;
    return cert;
}

DistanceAudit lcc_distance_audit(const CodeSpec& code, std::int64_t budget) {
    if (!code.certificate) throw std::invalid_argument("lcc_distance_audit: certification absent");
    if (!(code.certificate->tau < 0.5))
        throw std::invalid_argument("lcc_distance_audit: requires tau < 1/2");
    DistanceAudit out;
    out.min_dist = min_distance(code, budget);
    out.passes = out.min_dist >= 2.0 * code.certificate->delta - 1e-12;
    return out;
}

double ltc_acceptance_exact(const CodeSpec& code, const Word& w) {
    if (!code.ltc) throw std::invalid_argument("ltc_acceptance_exact: code has no tester");
    auto queries = code.ltc->enumerate();
    std::int64_t accepted = 0;
    std::vector<int> symbols;
    for (const auto& query : queries) {
        symbols.clear();
        for (Point pt : query.points) symbols.push_back(w(pt));
        if (query.accept(symbols)) ++accepted;
    }
    return static_cast<double>(accepted) / static_cast<double>(queries.size());
}

Eigen::MatrixXd gowers_separation(const CodeSpec& code, int r, std::int64_t budget) {
    const std::size_t count = code.codewords.size();
    std::vector<std::vector<DenseFn>> slices;
    slices.reserve(count);
    for (const auto& w : code.codewords) {
        SimplexFn ext = simplex_extend(w);
        std::vector<DenseFn> per_word;
        per_word.reserve(static_cast<std::size_t>(code.m));
        for (int i = 1; i <= code.m; ++i) per_word.push_back(ext.coordinate_slice(i));
        slices.push_back(std::move(per_word));
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(count),
                                                static_cast<Eigen::Index>(count));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            double sep = 0;
            for (int s = 0; s < code.m; ++s)
                sep = std::max(sep, gowers_norm_exact(slices[i][static_cast<std::size_t>(s)] -
                                                          slices[j][static_cast<std::size_t>(s)],
                                                      r, budget));
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sep;
            out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = sep;
        }
    return out;
}

HybridReport ltc_hybrid_experiment(const CodeSpec& code, std::size_t f_index, std::size_t g_index,
                                   std::uint64_t seed, std::int64_t trials,
                                   std::int64_t affine_samples) {
    if (!code.ltc) throw std::invalid_argument("ltc_hybrid_experiment: code has no tester");
    if (f_index >= code.codewords.size() || g_index >= code.codewords.size())
        throw std::invalid_argument("ltc_hybrid_experiment: codeword index out of range");
    const Word& f = code.codewords[f_index];
    const Word& g = code.codewords[g_index];

    HybridReport report;
    Eigen::MatrixXd hhat_sum = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(code.dom.size()), code.m);
    std::vector<int> symbols;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(trial));
        Eigen::ArrayXi syms(f.symbols.size());
        for (Eigen::Index i = 0; i < syms.size(); ++i)
            syms[i] = rng.below(2) ? g.symbols[i] : f.symbols[i];
        Word h(code.dom, code.m, std::move(syms));
        hhat_sum += simplex_extend(h).values;

        double acc_sum = 0;
        for (std::int64_t a = 0; a < affine_samples; ++a) {
            AffineMap map = random_invertible_affine(code.dom, rng);
            acc_sum += ltc_acceptance_exact(code, apply_affine(h, map));
        }
        report.acceptance.push_back(acc_sum / static_cast<double>(affine_samples));

        double dist = 2.0;
        for (const auto& cw : code.codewords) dist = std::min(dist, hamming(h, cw));
        report.distance.push_back(dist);
    }
    if (trials > 0) {
        for (double a : report.acceptance) report.mean_acceptance += a;
        report.mean_acceptance /= static_cast<double>(trials);
        for (double d : report.distance) report.mean_distance += d;
        report.mean_distance /= static_cast<double>(trials);
        Eigen::MatrixXd expect =
            (simplex_extend(f).values + simplex_extend(g).values) / 2.0;
        report.hhat_deviation =
            ((hhat_sum / static_cast<double>(trials)) - expect).array().abs().maxCoeff();
    }
    return report;
}

}  // namespace hofa
