#pragma once

#include <cstdint>
#include <vector>

#include "hofa/field.hpp"

namespace hofa {

using Point = std::int64_t;  // index into the canonical point order of K^n

/// The domain K^n with its canonical point order: a point index encodes
/// the coordinate tuple mixed-radix little-endian over the field's element
/// order, so x_1 varies fastest. Tables in every module are laid out in
/// this order; it is fixed once so serialized experiments stay comparable.
class PointSpace {
  public:
    PointSpace(FieldPtr fld, int n);

    const Field& field() const { return *fld_; }
    const FieldPtr& field_ptr() const { return fld_; }
    int n() const { return n_; }
    std::int64_t size() const { return size_; }

    bool same_domain(const PointSpace& other) const {
        return n_ == other.n_ && fld_->p() == other.fld_->p() && fld_->t() == other.fld_->t() &&
               fld_->modulus() == other.fld_->modulus();
    }

    /// i-th coordinate (0-based) of the point, as a field element index.
    int component(Point x, int i) const;
    std::vector<int> components(Point x) const;
    Point from_components(std::span<const int> comps) const;

    Point add(Point a, Point b) const;
    Point sub(Point a, Point b) const;
    Point neg(Point a) const;
    /// Componentwise scalar multiplication by the field element s.
    Point scale(int s, Point a) const;

    /// Permutation perm[x] = index of x + h.
    std::vector<Point> translation(Point h) const;
    /// Permutation perm[x] = index of s * x.
    std::vector<Point> scaling(int s) const;

  private:
    FieldPtr fld_;
    int n_;
    std::int64_t size_;
};

}  // namespace hofa
