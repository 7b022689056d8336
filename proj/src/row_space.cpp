#include "algnorm/row_space.hpp"

#include <algorithm>

namespace algnorm {

namespace {

Index pivot_of(const Element& row) { return row.terms().front().first; }

}  // namespace

Element RowSpace::reduce(const Element& v) const {
    Element r = v;
    for (const Element& row : rows_) {
        const GaussianRational c = r.coefficient(pivot_of(row));
        if (!c.is_zero()) {
            r -= c * row;
        }
    }
    return r;
}

bool RowSpace::insert(const Element& v) {
    Element r = reduce(v);
    if (r.is_zero()) {
        return false;
    }
    const GaussianRational lead = r.terms().front().second;
    if (lead != GaussianRational(1)) {
        r *= GaussianRational(1) / lead;
    }
    const Index pivot = pivot_of(r);
    for (Element& row : rows_) {
        const GaussianRational c = row.coefficient(pivot);
        if (!c.is_zero()) {
            row -= c * r;
        }
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const Element& row, Index p) { return pivot_of(row) < p; });
    rows_.insert(pos, std::move(r));
    return true;
}

std::vector<Index> RowSpace::pivots() const {
    std::vector<Index> out;
    out.reserve(rows_.size());
    for (const Element& row : rows_) {
        out.push_back(pivot_of(row));
    }
    return out;
}

bool RowSpace::is_pivot(Index k) const {
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), k,
                                [](const Element& row, Index p) { return pivot_of(row) < p; });
    return pos != rows_.end() && pivot_of(*pos) == k;
}

}  // namespace algnorm
