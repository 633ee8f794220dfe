// Finite unions of closed intervals in [0,1] with quadratic-surd endpoints,
// kept sorted, disjoint and non-abutting.  Membership predicates are exact;
// boundary points (which carry no measure) are the only places where the
// closed storage differs from the open sets it represents.
#pragma once

#include <optional>
#include <vector>

#include "diolab/surd.hpp"

namespace diolab {

struct Interval {
    QuadraticSurd lo, hi;  // closed [lo, hi], lo <= hi; lo == hi is a point
};

struct MeasureResult {
    // value is exact when `exact` is set; otherwise a 256-bit evaluation of
    // the surd endpoints, well below 1e-12 absolute error for our set sizes.
    double value = 0.0;
    std::optional<Rat> exact;
};

class IntervalSet {
public:
    IntervalSet() = default;

    // Input must be sorted by lo; overlapping or abutting pieces are merged.
    static IntervalSet from_sorted(std::vector<Interval> pieces);
    static IntervalSet from_unsorted(std::vector<Interval> pieces);

    const std::vector<Interval>& pieces() const { return pieces_; }
    std::size_t count() const { return pieces_.size(); }
    bool empty() const { return pieces_.empty(); }

    MeasureResult measure() const;

    bool contains(const Rat& x) const;
    bool contains(const QuadraticSurd& x) const;

    struct SubsetResult {
        bool ok = true;
        std::optional<QuadraticSurd> witness;  // a point of *this outside other
    };
    SubsetResult subset_of(const IntervalSet& other) const;

    // Dyadic outer approximation: endpoints pushed outward to multiples of
    // 2^-bits.  Contains the original set; all endpoints become rational.
    IntervalSet snap_outward(unsigned bits) const;

    // Number of dyadic grid cells [i, i+1]*2^-bits the set touches, with the
    // half-open convention (a non-degenerate interval ending exactly on a grid
    // line does not claim the next cell).  Exact.
    Int grid_cells(unsigned bits) const;

private:
    std::vector<Interval> pieces_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);

// Intersection of the open interiors, stored closed: tangencies that meet in
// a single point are dropped.
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);

// Axis-aligned closed rational boxes (products of interval families).
struct Box {
    Rat x0, x1, y0, y1;
};

class BoxSet {
public:
    BoxSet() = default;
    explicit BoxSet(std::vector<Box> boxes) : boxes_(std::move(boxes)) {}
    const std::vector<Box>& boxes() const { return boxes_; }
    bool contains(const Rat& x, const Rat& y) const;

private:
    std::vector<Box> boxes_;
};

// Product of two interval sets with rational endpoints.
BoxSet box_product(const IntervalSet& sx, const IntervalSet& sy);

}  // namespace diolab
