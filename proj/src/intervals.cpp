#include "diolab/intervals.hpp"

#include <algorithm>

namespace diolab {

namespace {

std::vector<Interval> merge_sorted(std::vector<Interval> pieces) {
    std::vector<Interval> out;
    out.reserve(pieces.size());
    for (auto& piece : pieces) {
        require(piece.lo.compare(piece.hi) <= 0, "interval with lo > hi");
        if (!out.empty()) {
            require(out.back().lo.compare(piece.lo) <= 0, "intervals not sorted by lo");
            if (piece.lo.compare(out.back().hi) <= 0) {  // overlap or abut: merge
                if (out.back().hi.compare(piece.hi) < 0) out.back().hi = std::move(piece.hi);
                continue;
            }
        }
        out.push_back(std::move(piece));
    }
    return out;
}

}  // namespace

IntervalSet IntervalSet::from_sorted(std::vector<Interval> pieces) {
    IntervalSet set;
    set.pieces_ = merge_sorted(std::move(pieces));
    return set;
}

IntervalSet IntervalSet::from_unsorted(std::vector<Interval> pieces) {
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo.compare(b.lo) < 0; });
    return from_sorted(std::move(pieces));
}

MeasureResult IntervalSet::measure() const {
    bool all_rational = true;
    for (const auto& piece : pieces_) {
        if (!piece.lo.is_rational() || !piece.hi.is_rational()) {
            all_rational = false;
            break;
        }
    }
    MeasureResult result;
    if (all_rational) {
        Rat total(0);
        for (const auto& piece : pieces_) total += piece.hi.as_rat() - piece.lo.as_rat();
        result.exact = total;
        result.value = to_double(total);
        return result;
    }
    mpf_class acc(0, 256);
    mpf_class neg(0, 256);
    for (const auto& piece : pieces_) {
        piece.hi.add_to(acc);
        piece.lo.add_to(neg);
    }
    acc -= neg;
    result.value = acc.get_d();
    return result;
}

bool IntervalSet::contains(const QuadraticSurd& x) const {
    // Binary search for the last piece with lo <= x.
    std::size_t lo = 0, hi = pieces_.size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (pieces_[mid].lo.compare(x) <= 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == 0) return false;
    return x.compare(pieces_[lo - 1].hi) <= 0;
}

bool IntervalSet::contains(const Rat& x) const { return contains(QuadraticSurd(x)); }

IntervalSet::SubsetResult IntervalSet::subset_of(const IntervalSet& other) const {
    SubsetResult result;
    const auto& bs = other.pieces_;
    std::size_t j = 0;
    for (const auto& a : pieces_) {
        while (j < bs.size() && bs[j].hi.compare(a.lo) < 0) ++j;
        if (j == bs.size() || bs[j].lo.compare(a.lo) > 0) {
            result.ok = false;
            result.witness = a.lo;
            return result;
        }
        if (a.hi.compare(bs[j].hi) <= 0) continue;  // fully inside bs[j]
        result.ok = false;
        // Sliver of `a` past bs[j].hi; bs[j+1] (if any) starts after a gap.
        if (j + 1 == bs.size() || bs[j + 1].lo.compare(a.hi) > 0) {
            result.witness = a.hi;
        } else {
            result.witness = QuadraticSurd(rational_between(bs[j].hi, bs[j + 1].lo));
        }
        return result;
    }
    return result;
}

IntervalSet IntervalSet::snap_outward(unsigned bits) const {
    const Int scale = pow_int(Int(2), bits);
    std::vector<Interval> snapped;
    snapped.reserve(pieces_.size());
    for (const auto& piece : pieces_) {
        const Int flo = piece.lo.floor_scaled(bits);
        Int fhi = piece.hi.floor_scaled(bits);
        if (piece.hi.compare(rat(fhi, scale)) != 0) fhi += 1;  // ceil
        snapped.push_back(
            {QuadraticSurd(rat(flo, scale)), QuadraticSurd(rat(fhi, scale))});
    }
    return from_sorted(std::move(snapped));
}

Int IntervalSet::grid_cells(unsigned bits) const {
    const Int scale = pow_int(Int(2), bits);
    Int total = 0;
    Int prev_hi;  // last claimed cell index
    bool have_prev = false;
    for (const auto& piece : pieces_) {
        Int ilo = piece.lo.floor_scaled(bits);
        Int ihi = piece.hi.floor_scaled(bits);
        const bool degenerate = piece.lo.compare(piece.hi) == 0;
        if (!degenerate && ihi > ilo && piece.hi.compare(rat(ihi, scale)) == 0) ihi -= 1;
        if (have_prev && ilo <= prev_hi) ilo = prev_hi + 1;  // cells already counted
        if (ihi < ilo) continue;
        total += ihi - ilo + 1;
        prev_hi = ihi;
        have_prev = true;
    }
    return total;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> merged;
    merged.reserve(a.count() + b.count());
    std::size_t i = 0, j = 0;
    const auto& av = a.pieces();
    const auto& bv = b.pieces();
    while (i < av.size() && j < bv.size()) {
        if (av[i].lo.compare(bv[j].lo) <= 0)
            merged.push_back(av[i++]);
        else
            merged.push_back(bv[j++]);
    }
    for (; i < av.size(); ++i) merged.push_back(av[i]);
    for (; j < bv.size(); ++j) merged.push_back(bv[j]);
    return IntervalSet::from_sorted(std::move(merged));
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    const auto& av = a.pieces();
    const auto& bv = b.pieces();
    while (i < av.size() && j < bv.size()) {
        const QuadraticSurd& lo = max(av[i].lo, bv[j].lo);
        const QuadraticSurd& hi = min(av[i].hi, bv[j].hi);
        if (lo.compare(hi) < 0) out.push_back({lo, hi});
        if (av[i].hi.compare(bv[j].hi) <= 0)
            ++i;
        else
            ++j;
    }
    return IntervalSet::from_sorted(std::move(out));
}

bool BoxSet::contains(const Rat& x, const Rat& y) const {
    for (const auto& b : boxes_) {
        if (x >= b.x0 && x <= b.x1 && y >= b.y0 && y <= b.y1) return true;
    }
    return false;
}

BoxSet box_product(const IntervalSet& sx, const IntervalSet& sy) {
    std::vector<Box> boxes;
    boxes.reserve(sx.count() * sy.count());
    for (const auto& px : sx.pieces()) {
        require(px.lo.is_rational() && px.hi.is_rational(),
                "box_product needs rational endpoints");
        for (const auto& py : sy.pieces()) {
            require(py.lo.is_rational() && py.hi.is_rational(),
                    "box_product needs rational endpoints");
            boxes.push_back({px.lo.as_rat(), px.hi.as_rat(), py.lo.as_rat(), py.hi.as_rat()});
        }
    }
    return BoxSet(std::move(boxes));
}

}  // namespace diolab
