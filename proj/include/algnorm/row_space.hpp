#pragma once

#include <cstddef>
#include <vector>

#include "algnorm/element.hpp"

namespace algnorm {

// Exact sparse reduced row-echelon form, built one vector at a time. The pivot
// of a row is its first nonzero coordinate; pivots are 1 and every pivot
// column is zero in all other rows, so the form is canonical for the span.
class RowSpace {
public:
    // Returns true when v was independent of the rows already present.
    bool insert(const Element& v);

    // v minus its projection onto the span along pivot columns. The residual
    // is zero exactly when v is in the span, and is always supported off the
    // pivot columns.
    Element reduce(const Element& v) const;
    bool contains(const Element& v) const { return reduce(v).is_zero(); }

    std::size_t rank() const { return rows_.size(); }
    // Rows sorted by pivot.
    const std::vector<Element>& rows() const { return rows_; }
    std::vector<Index> pivots() const;
    bool is_pivot(Index k) const;

    friend bool operator==(const RowSpace& a, const RowSpace& b) { return a.rows_ == b.rows_; }

private:
    std::vector<Element> rows_;
};

}  // namespace algnorm
