#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetvar/multiindex.hpp"

namespace jetvar {

/// Fibred chart data: n base dimensions, m fibre dimensions, optional
/// coordinate labels. One global chart; all computations are coordinate
/// level.
struct JetSpaceConfig {
    int n = 1;
    int m = 1;
    std::vector<std::string> base_names;   // defaults chosen by base_name()
    std::vector<std::string> fibre_names;  // defaults chosen by fibre_name()

    JetSpaceConfig() = default;
    JetSpaceConfig(int n_, int m_) : n(n_), m(m_) {
        if (n < 1 || m < 1) throw std::invalid_argument("jet space needs n >= 1, m >= 1");
    }

    std::string base_name(int lambda) const;
    std::string fibre_name(int i) const;

    bool operator==(const JetSpaceConfig& o) const { return n == o.n && m == o.m; }
};

/// A coordinate on some finite-order jet space: either a base coordinate
/// x^lambda or a jet coordinate u^i_sigma (sigma empty means u^i itself).
/// Indices are 0-based internally.
class JetCoord {
  public:
    static JetCoord base(int lambda) { return JetCoord(lambda, -1, MultiIndex()); }
    static JetCoord fibre(int i, MultiIndex sigma) { return JetCoord(-1, i, std::move(sigma)); }

    bool is_base() const { return lambda_ >= 0; }
    bool is_fibre() const { return i_ >= 0; }
    int lambda() const { return lambda_; }
    int fibre_index() const { return i_; }
    const MultiIndex& sigma() const { return sigma_; }

    /// u^i_sigma -> u^i_{sigma lambda}; undefined for base coordinates.
    JetCoord prolonged(int lambda) const {
        if (!is_fibre()) throw std::invalid_argument("cannot prolong a base coordinate");
        return fibre(i_, sigma_.raised(lambda));
    }

    int jet_order() const { return is_fibre() ? sigma_.order() : 0; }

    bool operator==(const JetCoord& o) const = default;
    /// Base coordinates first (by lambda), then fibre coordinates by
    /// (i, canonical multi-index order).
    std::strong_ordering operator<=>(const JetCoord& o) const {
        if (auto c = is_fibre() <=> o.is_fibre(); c != 0) return c;
        if (is_base()) return lambda_ <=> o.lambda_;
        if (auto c = i_ <=> o.i_; c != 0) return c;
        return sigma_ <=> o.sigma_;
    }

  private:
    JetCoord(int lambda, int i, MultiIndex sigma) : lambda_(lambda), i_(i), sigma_(std::move(sigma)) {}
    int lambda_ = -1;
    int i_ = -1;
    MultiIndex sigma_;
};

inline std::string JetSpaceConfig::base_name(int lambda) const {
    if (lambda < 0 || lambda >= n) throw std::out_of_range("base index out of range");
    if (static_cast<int>(base_names.size()) == n) return base_names[static_cast<std::size_t>(lambda)];
    static const char* defaults[] = {"x", "y", "z"};
    if (n <= 3) return defaults[lambda];
    return "x" + std::to_string(lambda + 1);
}

inline std::string JetSpaceConfig::fibre_name(int i) const {
    if (i < 0 || i >= m) throw std::out_of_range("fibre index out of range");
    if (static_cast<int>(fibre_names.size()) == m) return fibre_names[static_cast<std::size_t>(i)];
    if (m == 1) return "u";
    return "u" + std::to_string(i + 1);
}

}  // namespace jetvar
