#pragma once

#include "jetvar/cdiff.hpp"

namespace jetvar {

/// Lagrangian density: the coefficient of Vol = dx^1 ^ ... ^ dx^n.
struct Lagrangian {
    JetSpaceConfig cfg;
    JetPoly density;

    Lagrangian(JetSpaceConfig c, JetPoly L) : cfg(c), density(std::move(L)) {}
    /// Jet order of the density itself. After horizontalization the
    /// coefficients live one order higher; only the raw order is reported.
    int order() const { return density.order(); }
    Form to_form() const { return density * Form::volume(cfg); }
};

/// Source form eta_i omega^i ^ Vol in canonical shape: all contact factors
/// of multi-index order zero.
struct SourceForm {
    JetSpaceConfig cfg;
    std::vector<JetPoly> components;  // size m

    SourceForm(JetSpaceConfig c, std::vector<JetPoly> eta);

    static SourceForm zero(const JetSpaceConfig& cfg) {
        return SourceForm(cfg, std::vector<JetPoly>(static_cast<std::size_t>(cfg.m)));
    }

    bool is_zero() const;
    int order() const;
    bool operator==(const SourceForm& o) const { return components == o.components; }

    /// The canonical (1-contact, n-horizontal) form eta_i omega^i ^ Vol.
    Form to_form() const;
};

/// E_i(L) = sum_sigma (-1)^{|sigma|} D_sigma dL/du^i_sigma.
SourceForm euler_lagrange(const Lagrangian& L);

/// Canonical representative of a (1-contact, n-horizontal) form
/// a = a_i^sigma omega^i_sigma ^ Vol: eta_i = sum (-1)^{|sigma|} D_sigma a_i^sigma.
/// Representatives agree across dbar-exact shifts of the input.
SourceForm source_representative(const Form& a);

/// Helmholtz data of a source form: the operator (1/2)(l_eta - l_eta*) and
/// the canonical 2-contact representative built from it.
struct HelmholtzOperator {
    CDiffOp op;      // m x m, skew-adjoint: op* = -op
    Form canonical;  // sum H[i][j]^sigma omega^j_sigma ^ omega^i ^ Vol

    bool is_zero() const { return op.is_zero(); }
};

/// Operator route: H(eta) = (1/2)(l_eta - l_eta*). Zero iff the
/// linearization is self-adjoint iff eta is locally variational.
HelmholtzOperator helmholtz(const SourceForm& eta);

/// Literal coefficient route for the p = 2 representative: for each (i,
/// sigma, j) the coefficient of omega^i_sigma ^ omega^j ^ Vol is
///   (1/2) ( A[i][sigma][j]
///           - sum_{|rho| <= s - |sigma|} (-1)^{|sigma|+|rho|}
///             choose(sigma u rho, rho) D_rho A[j][sigma u rho][i] )
/// with A[i][sigma][j] = d eta_j / du^i_sigma and s the derivative order of
/// the linearization. Must agree with helmholtz(eta).canonical.
Form helmholtz_literal(const SourceForm& eta);

/// e_1 on class representatives of bidegree (p, n): the contact-degree-(p+1)
/// part of d, canonicalized. p = 0 gives the Euler-Lagrange class of the
/// Lagrangian, p = 1 the Helmholtz class of the source form. Higher p is not
/// provided.
Form e1(const Form& a);

bool is_variationally_trivial(const Lagrangian& L);
bool is_locally_variational(const SourceForm& eta);

/// Thrown by tonti_lagrangian on non-variational input; carries the nonzero
/// Helmholtz witness.
struct NotVariationalError : std::domain_error {
    explicit NotVariationalError(HelmholtzOperator w)
        : std::domain_error("source form is not locally variational"), witness(std::move(w)) {}
    HelmholtzOperator witness;
};

/// Fibre-scaling reconstruction L = sum_i u^i int_0^1 eta_i(x, t u) dt.
/// Requires helmholtz(eta) = 0; then euler_lagrange(tonti_lagrangian(eta)) = eta.
Lagrangian tonti_lagrangian(const SourceForm& eta);

}  // namespace jetvar
