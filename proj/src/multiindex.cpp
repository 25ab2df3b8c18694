#include "jetvar/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jetvar {

MultiIndex::MultiIndex(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
        if (c < 0) throw std::invalid_argument("negative multi-index count");
}

int MultiIndex::order() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

MultiIndex MultiIndex::raised(int lambda) const {
    MultiIndex r = *this;
    r.counts_.at(static_cast<std::size_t>(lambda)) += 1;
    return r;
}

MultiIndex MultiIndex::lowered(int lambda) const {
    MultiIndex r = *this;
    int& c = r.counts_.at(static_cast<std::size_t>(lambda));
    if (c == 0) throw std::invalid_argument("lowering absent index");
    c -= 1;
    return r;
}

bool MultiIndex::contains(const MultiIndex& b) const {
    if (dim() != b.dim()) throw std::invalid_argument("multi-index dimension mismatch");
    for (int l = 0; l < dim(); ++l)
        if (counts_[static_cast<std::size_t>(l)] < b[l]) return false;
    return true;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& o) const {
    if (auto c = order() <=> o.order(); c != 0) return c;
    // Within a grade: lexicographically larger count vector first, so that
    // (1,0) < (0,1) as positions in the canonical enumeration.
    if (auto c = o.counts_ <=> counts_; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string MultiIndex::str() const {
    std::string s;
    for (int l = 0; l < dim(); ++l) {
        int c = counts_[static_cast<std::size_t>(l)];
        if (c == 0) continue;
        if (!s.empty()) s += ' ';
        s += "x" + std::to_string(l + 1);
        if (c > 1) s += "^" + std::to_string(c);
    }
    return s.empty() ? "1" : s;
}

MultiIndex union_of(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("multi-index dimension mismatch");
    std::vector<int> c(a.counts());
    for (int l = 0; l < b.dim(); ++l) c[static_cast<std::size_t>(l)] += b[l];
    return MultiIndex(std::move(c));
}

MultiIndex difference(const MultiIndex& a, const MultiIndex& b) {
    if (!a.contains(b)) throw std::invalid_argument("multi-index difference undefined");
    std::vector<int> c(a.counts());
    for (int l = 0; l < b.dim(); ++l) c[static_cast<std::size_t>(l)] -= b[l];
    return MultiIndex(std::move(c));
}

Rational choose(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("multi-index dimension mismatch");
    Rational r(1);
    for (int l = 0; l < a.dim(); ++l) {
        r *= binomial(a[l], b[l]);
        if (r == 0) return r;
    }
    return r;
}

namespace {

void enumerate_exact(int n, int ord, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
    if (static_cast<int>(prefix.size()) == n - 1) {
        prefix.push_back(ord);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    // Larger counts in earlier coordinates first, matching the total order.
    for (int c = ord; c >= 0; --c) {
        prefix.push_back(c);
        enumerate_exact(n, ord - c, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_multiindices(int n, int max_order) {
    if (n < 1) throw std::invalid_argument("enumerate_multiindices: n must be >= 1");
    if (max_order < 0) throw std::invalid_argument("enumerate_multiindices: negative order");
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    for (int ord = 0; ord <= max_order; ++ord) enumerate_exact(n, ord, prefix, out);
    return out;
}

std::vector<MultiIndex> sub_multiindices(const MultiIndex& a) {
    std::vector<MultiIndex> out{MultiIndex(a.dim())};
    for (int l = 0; l < a.dim(); ++l) {
        std::vector<MultiIndex> next;
        for (const MultiIndex& p : out)
            for (int c = 0; c <= a[l]; ++c) {
                std::vector<int> v(p.counts());
                v[static_cast<std::size_t>(l)] = c;
                next.emplace_back(std::move(v));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace jetvar
