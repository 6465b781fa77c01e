#include "hofa/domain.hpp"

#include <stdexcept>

namespace hofa {

PointSpace::PointSpace(FieldPtr fld, int n) : fld_(std::move(fld)), n_(n) {
    if (!fld_) throw std::invalid_argument("PointSpace needs a field");
    if (n_ < 0) throw std::invalid_argument("dimension must be nonnegative");
    size_ = 1;
    for (int i = 0; i < n_; ++i) {
        if (size_ > (std::int64_t{1} << 40) / fld_->q())
            throw std::invalid_argument("domain too large to index");
        size_ *= fld_->q();
    }
}

int PointSpace::component(Point x, int i) const {
    for (int j = 0; j < i; ++j) x /= fld_->q();
    return static_cast<int>(x % fld_->q());
}

std::vector<int> PointSpace::components(Point x) const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(x % fld_->q());
        x /= fld_->q();
    }
    return out;
}

Point PointSpace::from_components(std::span<const int> comps) const {
    if (static_cast<int>(comps.size()) != n_) throw std::invalid_argument("wrong number of coordinates");
    Point x = 0;
    for (int i = n_ - 1; i >= 0; --i) x = x * fld_->q() + comps[static_cast<std::size_t>(i)];
    return x;
}

Point PointSpace::add(Point a, Point b) const {
    Point out = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        int ea = static_cast<int>(a % fld_->q());
        int eb = static_cast<int>(b % fld_->q());
        out += static_cast<Point>(fld_->add(ea, eb)) * mult;
        mult *= fld_->q();
        a /= fld_->q();
        b /= fld_->q();
    }
    return out;
}

Point PointSpace::sub(Point a, Point b) const { return add(a, neg(b)); }

Point PointSpace::neg(Point a) const {
    Point out = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        int ea = static_cast<int>(a % fld_->q());
        out += static_cast<Point>(fld_->neg(ea)) * mult;
        mult *= fld_->q();
        a /= fld_->q();
    }
    return out;
}

Point PointSpace::scale(int s, Point a) const {
    Point out = 0, mult = 1;
    for (int i = 0; i < n_; ++i) {
        int ea = static_cast<int>(a % fld_->q());
        out += static_cast<Point>(fld_->mul(s, ea)) * mult;
        mult *= fld_->q();
        a /= fld_->q();
    }
    return out;
}

std::vector<Point> PointSpace::translation(Point h) const {
    std::vector<Point> perm(static_cast<std::size_t>(size_));
    for (Point x = 0; x < size_; ++x) perm[static_cast<std::size_t>(x)] = add(x, h);
    return perm;
}

std::vector<Point> PointSpace::scaling(int s) const {
    std::vector<Point> perm(static_cast<std::size_t>(size_));
    for (Point x = 0; x < size_; ++x) perm[static_cast<std::size_t>(x)] = scale(s, x);
    return perm;
}

}  // namespace hofa
