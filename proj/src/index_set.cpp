#include "algnorm/index_set.hpp"

#include <algorithm>

#include "algnorm/error.hpp"

namespace algnorm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<Index> normalize(std::vector<Index> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!indices.empty() && indices.front() == 0) {
        throw Error(ErrorKind::InvalidParameter, "basis indices start at 1");
    }
    return indices;
}

// Members t of [1, k] with t = r (mod m).
Index residue_count(Index m, Index r, Index k) {
    const Index first = r == 0 ? m : r;
    if (k < first) return 0;
    return (k - first) / m + 1;
}

Index list_count(const std::vector<Index>& v, Index k) {
    return static_cast<Index>(std::upper_bound(v.begin(), v.end(), k) - v.begin());
}

std::string join(const std::vector<Index>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "}";
}

}  // namespace

IndexSet IndexSet::residue(Index modulus, Index residue) {
    if (modulus == 0) {
        throw Error(ErrorKind::InvalidParameter, "residue modulus must be >= 1");
    }
    return IndexSet(Residue{modulus, residue % modulus});
}

IndexSet IndexSet::finite_list(std::vector<Index> indices) { return IndexSet(FiniteList{normalize(std::move(indices))}); }

IndexSet IndexSet::complement_of(std::vector<Index> indices) {
    return IndexSet(ComplementOfFiniteList{normalize(std::move(indices))});
}

bool IndexSet::contains(Index k) const {
    if (k == 0) return false;
    return std::visit(overloaded{
                          [](const All&) { return true; },
                          [k](const Evens&) { return k % 2 == 0; },
                          [k](const Odds&) { return k % 2 == 1; },
                          [k](const Residue& r) { return k % r.modulus == r.residue; },
                          [k](const FiniteList& l) { return std::binary_search(l.indices.begin(), l.indices.end(), k); },
                          [k](const ComplementOfFiniteList& l) {
                              return !std::binary_search(l.indices.begin(), l.indices.end(), k);
                          },
                      },
                      v_);
}

bool IndexSet::is_finite() const { return std::holds_alternative<FiniteList>(v_); }

bool IndexSet::complement_is_finite() const {
    return std::visit(overloaded{
                          [](const All&) { return true; },
                          [](const Evens&) { return false; },
                          [](const Odds&) { return false; },
                          [](const Residue& r) { return r.modulus == 1; },
                          [](const FiniteList&) { return false; },
                          [](const ComplementOfFiniteList&) { return true; },
                      },
                      v_);
}

Index IndexSet::count_up_to(Index k) const {
    return std::visit(overloaded{
                          [k](const All&) { return k; },
                          [k](const Evens&) { return k / 2; },
                          [k](const Odds&) { return (k + 1) / 2; },
                          [k](const Residue& r) { return residue_count(r.modulus, r.residue, k); },
                          [k](const FiniteList& l) { return list_count(l.indices, k); },
                          [k](const ComplementOfFiniteList& l) { return k - list_count(l.indices, k); },
                      },
                      v_);
}

Index IndexSet::nth_complement(Index m) const {
    if (m == 0) {
        throw Error(ErrorKind::InvalidParameter, "complement positions start at 1");
    }
    if (complement_count_up_to(kSequenceLimit - 1) < m) {
        throw Error(ErrorKind::InvalidParameter,
                    "complement of " + describe() + " has fewer than " + std::to_string(m) + " members");
    }
    // Smallest k with complement_count_up_to(k) >= m; the count is monotone.
    Index lo = m;
    Index hi = m;
    while (complement_count_up_to(hi) < m) {
        lo = hi + 1;
        hi = std::min(kSequenceLimit - 1, hi * 2);
    }
    while (lo < hi) {
        const Index mid = lo + (hi - lo) / 2;
        if (complement_count_up_to(mid) >= m) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

std::vector<Index> IndexSet::finite_complement() const {
    if (!complement_is_finite()) {
        throw Error(ErrorKind::InvalidParameter, "complement of " + describe() + " is infinite");
    }
    if (const auto* l = std::get_if<ComplementOfFiniteList>(&v_)) {
        return l->indices;
    }
    return {};
}

std::string IndexSet::describe() const {
    return std::visit(overloaded{
                          [](const All&) -> std::string { return "all"; },
                          [](const Evens&) -> std::string { return "evens"; },
                          [](const Odds&) -> std::string { return "odds"; },
                          [](const Residue& r) -> std::string {
                              return "residue(" + std::to_string(r.modulus) + "," + std::to_string(r.residue) + ")";
                          },
                          [](const FiniteList& l) { return join(l.indices); },
                          [](const ComplementOfFiniteList& l) { return "complement" + join(l.indices); },
                      },
                      v_);
}

bool operator==(const IndexSet& a, const IndexSet& b) {
    if (a.v_.index() != b.v_.index()) return false;
    return std::visit(overloaded{
                          [&](const IndexSet::Residue& r) {
                              const auto& s = std::get<IndexSet::Residue>(b.v_);
                              return r.modulus == s.modulus && r.residue == s.residue;
                          },
                          [&](const IndexSet::FiniteList& l) {
                              return l.indices == std::get<IndexSet::FiniteList>(b.v_).indices;
                          },
                          [&](const IndexSet::ComplementOfFiniteList& l) {
                              return l.indices == std::get<IndexSet::ComplementOfFiniteList>(b.v_).indices;
                          },
                          [](const auto&) { return true; },
                      },
                      a.v_);
}

}  // namespace algnorm
