#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jetvar/jetspace.hpp"
#include "jetvar/rational.hpp"

namespace jetvar {

/// A power-product of jet coordinates: factors sorted by coordinate, all
/// exponents >= 1. The empty monomial is the constant 1.
struct Monomial {
    std::vector<std::pair<JetCoord, int>> factors;

    bool operator==(const Monomial& o) const = default;
    auto operator<=>(const Monomial& o) const = default;

    int degree() const {
        int d = 0;
        for (const auto& [c, e] : factors) d += e;
        return d;
    }
    int fibre_degree() const {
        int d = 0;
        for (const auto& [c, e] : factors)
            if (c.is_fibre()) d += e;
        return d;
    }
};

/// Differential polynomial: an exact-rational polynomial in base coordinates
/// x^lambda and jet coordinates u^i_sigma. Canonical form never stores zero
/// coefficients, so equality is structural. Models the coefficient algebra
/// the engine works over.
class JetPoly {
  public:
    JetPoly() = default;

    static JetPoly zero() { return JetPoly(); }
    static JetPoly constant(Rational q);
    static JetPoly coord(const JetCoord& c);
    static JetPoly base_coord(int lambda) { return coord(JetCoord::base(lambda)); }
    static JetPoly fibre_coord(int i, const MultiIndex& sigma) { return coord(JetCoord::fibre(i, sigma)); }
    static JetPoly monomial(Monomial mono, Rational coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the coefficient of the empty monomial).
    Rational constant_term() const;
    /// True when no fibre coordinate appears.
    bool is_base_only() const;

    /// Jet order: max |sigma| over the fibre coordinates appearing; 0 if none.
    int order() const;
    /// Total polynomial degree.
    int degree() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    /// All coordinates appearing with nonzero exponent, sorted, no duplicates.
    std::vector<JetCoord> coordinates() const;

    JetPoly operator-() const;
    JetPoly& operator+=(const JetPoly& o);
    JetPoly& operator-=(const JetPoly& o);
    friend JetPoly operator+(JetPoly a, const JetPoly& b) { return a += b; }
    friend JetPoly operator-(JetPoly a, const JetPoly& b) { return a -= b; }
    friend JetPoly operator*(const JetPoly& a, const JetPoly& b);
    friend JetPoly operator*(const Rational& q, const JetPoly& p);
    JetPoly pow(int e) const;

    bool operator==(const JetPoly& o) const { return terms_ == o.terms_; }

    /// Formal partial derivative with respect to one coordinate.
    JetPoly partial(const JetCoord& c) const;

    /// Total derivative D_lambda = d/dx^lambda + u^j_{sigma lambda} d/du^j_sigma.
    JetPoly total_derivative(int lambda) const;

    /// Iterated total derivative D_sigma; independent of iteration order.
    JetPoly total_derivative(const MultiIndex& sigma) const;

    /// Substitute coordinates by polynomials; coordinates missing from the
    /// map are left in place.
    JetPoly substitute(const std::map<JetCoord, JetPoly>& repl) const;

    /// Evaluate at a full rational assignment (every appearing coordinate
    /// must be assigned).
    Rational evaluate(const std::map<JetCoord, Rational>& point) const;

    /// int_0^1 f(x, t u) t^extra dt: scales each monomial coefficient by
    /// 1/(fibre_degree + extra + 1). The basic step of the fibre-scaling
    /// homotopy.
    JetPoly fibre_scaling_integral(int extra = 0) const;

    /// Antiderivative in a single coordinate (per-monomial power bump).
    JetPoly antiderivative(const JetCoord& c) const;

  private:
    void add_term(const Monomial& m, const Rational& q);
    std::map<Monomial, Rational> terms_;
};

/// Polynomial local section s: M -> E, one base-only polynomial per fibre
/// component.
struct PolySection {
    JetSpaceConfig cfg;
    std::vector<JetPoly> components;  // size m, each base-only

    PolySection(JetSpaceConfig c, std::vector<JetPoly> comps);
};

/// The r-th prolongation j_r s as a substitution map: u^i_sigma -> the
/// |sigma|-th partials of s^i, for all |sigma| <= r.
std::map<JetCoord, JetPoly> prolong(const PolySection& s, int r);

/// Pull back a differential polynomial along the prolonged section: (j_r s)^* f.
JetPoly pullback(const JetPoly& f, const PolySection& s);

}  // namespace jetvar
