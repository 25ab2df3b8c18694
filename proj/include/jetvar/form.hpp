#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "jetvar/jetpoly.hpp"

namespace jetvar {

/// One factor of the contact coframe: dx^lambda or the contact covector
/// omega^i_sigma = du^i_sigma - u^i_{sigma lambda} dx^lambda.
class BasisCovector {
  public:
    static BasisCovector dx(int lambda) { return BasisCovector(lambda, -1, MultiIndex()); }
    static BasisCovector omega(int i, MultiIndex sigma) { return BasisCovector(-1, i, std::move(sigma)); }

    bool is_dx() const { return lambda_ >= 0; }
    bool is_omega() const { return i_ >= 0; }
    int lambda() const { return lambda_; }
    int fibre_index() const { return i_; }
    const MultiIndex& sigma() const { return sigma_; }

    bool operator==(const BasisCovector& o) const = default;
    /// All dx factors precede all omega factors; dx by lambda, omega by
    /// (i, canonical multi-index order). Fixes the canonical wedge words.
    std::strong_ordering operator<=>(const BasisCovector& o) const {
        if (auto c = is_omega() <=> o.is_omega(); c != 0) return c;
        if (is_dx()) return lambda_ <=> o.lambda_;
        if (auto c = i_ <=> o.i_; c != 0) return c;
        return sigma_ <=> o.sigma_;
    }

  private:
    BasisCovector(int lambda, int i, MultiIndex sigma) : lambda_(lambda), i_(i), sigma_(std::move(sigma)) {}
    int lambda_ = -1;
    int i_ = -1;
    MultiIndex sigma_;
};

/// Strictly increasing word of basis covectors.
using WedgeWord = std::vector<BasisCovector>;

int contact_degree(const WedgeWord& w);

/// Exterior form on a jet space, stored exclusively in the contact basis
/// {dx^lambda, omega^i_sigma} with JetPoly coefficients. Wedge words are
/// strictly sorted; reordering signs are folded into the coefficients; zero
/// coefficients are never stored. A form is homogeneous in total degree but
/// may mix contact degrees. The zero form compares equal across degrees and
/// is accepted everywhere.
class Form {
  public:
    Form() = default;

    static Form zero(const JetSpaceConfig& cfg, int degree = 0);
    static Form function(const JetSpaceConfig& cfg, JetPoly f);
    static Form covector(const JetSpaceConfig& cfg, const BasisCovector& c);
    static Form dx(const JetSpaceConfig& cfg, int lambda) { return covector(cfg, BasisCovector::dx(lambda)); }
    static Form omega(const JetSpaceConfig& cfg, int i, const MultiIndex& sigma) {
        return covector(cfg, BasisCovector::omega(i, sigma));
    }
    /// du^i_sigma rewritten into the contact basis:
    /// omega^i_sigma + u^i_{sigma lambda} dx^lambda.
    static Form du(const JetSpaceConfig& cfg, int i, const MultiIndex& sigma);
    /// Vol = dx^1 ^ ... ^ dx^n.
    static Form volume(const JetSpaceConfig& cfg);
    static Form term(const JetSpaceConfig& cfg, WedgeWord word, JetPoly coeff);

    const JetSpaceConfig& config() const { return cfg_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<WedgeWord, JetPoly>& terms() const { return terms_; }

    /// Jet order: max over coefficient orders and the |sigma| of omega
    /// factors appearing.
    int order() const;

    /// Contact degree when every term has the same one.
    std::optional<int> homogeneous_contact_degree() const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const JetPoly& f, const Form& a);
    friend Form operator*(const Rational& q, const Form& a);

    bool operator==(const Form& o) const { return terms_ == o.terms_; }

    /// Accumulate one canonical term (word already strictly sorted); keeps
    /// the no-zero-coefficients invariant.
    void add_term(const WedgeWord& w, const JetPoly& c);

  private:
    JetSpaceConfig cfg_;
    int degree_ = 0;
    std::map<WedgeWord, JetPoly> terms_;
};

/// Graded-commutative exterior product; degrees add, canonical sorting signs
/// are absorbed into coefficients.
Form wedge(const Form& a, const Form& b);

/// A covector of the naive coordinate coframe {dx^lambda, du^i_sigma}, used
/// only as input to from_du_basis.
struct DuCovector {
    bool base;
    int index;         // lambda or i
    MultiIndex sigma;  // empty for dx

    static DuCovector dx(int lambda) { return {true, lambda, MultiIndex()}; }
    static DuCovector du(int i, MultiIndex sigma) { return {false, i, std::move(sigma)}; }
};

/// One term per entry: a word in the du/dx coframe with a coefficient.
/// Rewrites du^i_sigma = omega^i_sigma + u^i_{sigma lambda} dx^lambda and
/// returns the canonical contact-basis form; the order may rise by one.
Form from_du_basis(const JetSpaceConfig& cfg,
                   const std::vector<std::pair<std::vector<DuCovector>, JetPoly>>& terms);

/// Exterior derivative in the contact basis, using
/// d omega^i_sigma = dx^lambda ^ omega^i_{sigma lambda} and
/// d f = D_lambda f dx^lambda + (df/du^i_sigma) omega^i_sigma.
Form d(const Form& a);

/// Horizontal differential: the part of d that preserves contact degree and
/// raises horizontal degree by one.
Form dhat(const Form& a);

/// Contact (vertical) differential: the part of d that raises contact degree
/// by one. d = dhat + cd.
Form cd(const Form& a);

/// Component with exactly `contact` omega factors and `horizontal` dx
/// factors; term selection in the contact basis. Throws when
/// contact + horizontal != degree (zero input excepted).
Form project(const Form& a, int contact, int horizontal);

/// h: the purely horizontal component. Identically zero above degree n.
Form horizontalize(const Form& a);

/// v = id - h: every term of contact degree >= 1.
Form vertical(const Form& a);

/// Sum of terms with contact degree >= p.
Form contact_part(const Form& a, int p);

/// Membership in C^p Lambda^k: every term has contact degree >= p.
bool is_p_contact(const Form& a, int p);

/// dbar = e_0 on a contact-degree-homogeneous form: project(d(a), p, q+1).
/// Throws when the input mixes contact degrees.
Form dbar(const Form& a);

/// Contact homotopy operator A of the fibre-scaling homotopy
/// (x, u) -> (x, t u): pulls back, extracts the dt component (dt moved to
/// the front), and integrates over t in [0,1]. Satisfies
/// a = A(d a) + d(A a) for forms whose every term is at least 1-contact.
Form contact_homotopy(const Form& a);

/// For a closed form (every term at least 1-contact), a primitive produced
/// by the homotopy identity: d(contact_primitive(a)) = a.
Form contact_primitive(const Form& a);

/// (j_r s)^*: contact terms vanish, coefficients of dx words are pulled back
/// along the prolonged section. The result is a form on the base (dx words,
/// base-only coefficients).
Form pullback_by_section(const Form& a, const PolySection& s);

}  // namespace jetvar
