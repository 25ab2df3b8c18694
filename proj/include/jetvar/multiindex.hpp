#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "jetvar/rational.hpp"

namespace jetvar {

/// Symmetric multi-index over n base dimensions, stored as a count vector:
/// counts[lambda] = multiplicity of the base index lambda (0-based). Total
/// derivatives commute, so only the counts matter; two multi-indices are
/// equal iff their count vectors are equal.
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(int n) : counts_(static_cast<std::size_t>(n), 0) {}
    explicit MultiIndex(std::vector<int> counts);
    /// Unambiguous braced construction: MultiIndex::of({2, 1}).
    static MultiIndex of(std::initializer_list<int> counts) { return MultiIndex(std::vector<int>(counts)); }

    int dim() const { return static_cast<int>(counts_.size()); }
    int order() const;
    bool empty() const { return order() == 0; }
    int operator[](int lambda) const { return counts_[static_cast<std::size_t>(lambda)]; }
    const std::vector<int>& counts() const { return counts_; }

    /// sigma + lambda: one more derivative in direction lambda.
    MultiIndex raised(int lambda) const;
    /// sigma - lambda; requires counts[lambda] > 0.
    MultiIndex lowered(int lambda) const;
    /// Componentwise b <= a.
    bool contains(const MultiIndex& b) const;

    bool operator==(const MultiIndex& o) const { return counts_ == o.counts_; }

    /// Canonical total order: by |sigma| first, ties broken so that indices
    /// loading earlier coordinates come first ((1,0) precedes (0,1)).
    std::strong_ordering operator<=>(const MultiIndex& o) const;

    /// Diagnostic rendering, e.g. "x1^2 x2"; "1" for the empty index.
    std::string str() const;

  private:
    std::vector<int> counts_;
};

/// Componentwise sum of counts: the union (sigma, rho) of two multisets.
MultiIndex union_of(const MultiIndex& a, const MultiIndex& b);

/// Componentwise difference a - b; requires a.contains(b).
MultiIndex difference(const MultiIndex& a, const MultiIndex& b);

/// Multinomial coefficient prod_lambda C(a[lambda], b[lambda]): the number of
/// ways b embeds in a as a sub-multiset. Zero when b is not contained in a.
/// This is the coefficient of the Leibniz expansion of D_sigma(f g).
Rational choose(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices with 0 <= |sigma| <= max_order over n dimensions, in the
/// canonical order above (graded; within a grade earlier-coordinate-heavy
/// first). Deterministic and duplicate-free.
std::vector<MultiIndex> enumerate_multiindices(int n, int max_order);

/// All sub-multi-indices rho with rho <= a componentwise (including empty and
/// a itself), in canonical order.
std::vector<MultiIndex> sub_multiindices(const MultiIndex& a);

}  // namespace jetvar
