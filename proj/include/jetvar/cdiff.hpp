#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jetvar/form.hpp"

namespace jetvar {

/// Matrix of total-derivative operators: entry (a,b) is sum_sigma c^sigma D_sigma
/// with JetPoly coefficients, in normal form (coefficients to the left of
/// D_sigma, no zero coefficients stored).
class CDiffOp {
  public:
    using Entry = std::map<MultiIndex, JetPoly>;

    CDiffOp(const JetSpaceConfig& cfg, int rows, int cols);

    static CDiffOp identity(const JetSpaceConfig& cfg, int k);
    /// 1x1 scalar operator f * id.
    static CDiffOp scalar(const JetSpaceConfig& cfg, JetPoly f);
    /// 1x1 operator D_lambda.
    static CDiffOp total_derivative(const JetSpaceConfig& cfg, int lambda);
    /// 1x1 operator D_sigma.
    static CDiffOp total_derivative(const JetSpaceConfig& cfg, const MultiIndex& sigma);

    const JetSpaceConfig& config() const { return cfg_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Entry& entry(int r, int c) const;
    void add_to_entry(int r, int c, const MultiIndex& sigma, const JetPoly& coeff);

    bool is_zero() const;
    /// max over entries of |sigma| + order(coefficient).
    int order() const;
    /// max |sigma| over nonzero entries (the order as a polynomial in D).
    int derivative_order() const;

    CDiffOp operator-() const;
    CDiffOp& operator+=(const CDiffOp& o);
    CDiffOp& operator-=(const CDiffOp& o);
    friend CDiffOp operator+(CDiffOp a, const CDiffOp& b) { return a += b; }
    friend CDiffOp operator-(CDiffOp a, const CDiffOp& b) { return a -= b; }
    friend CDiffOp operator*(const Rational& q, const CDiffOp& op);

    bool operator==(const CDiffOp& o) const;

    /// (Delta phi)_a = sum_{b,sigma} c^sigma_{ab} D_sigma phi_b.
    std::vector<JetPoly> apply(const std::vector<JetPoly>& phi) const;
    JetPoly apply_scalar(const JetPoly& phi) const;

  private:
    JetSpaceConfig cfg_;
    int rows_, cols_;
    std::vector<Entry> entries_;
};

/// Delta1 after Delta2, Leibniz-expanded back to normal form:
/// apply(compose(D1,D2), phi) == apply(D1, apply(D2, phi)).
CDiffOp compose(const CDiffOp& a, const CDiffOp& b);

/// Formal adjoint: transpose indices and expand (-1)^{|sigma|} D_sigma . c
/// into normal form. (Delta*)* == Delta and (D1 D2)* == D2* D1*.
CDiffOp adjoint(const CDiffOp& op);

/// Frechet derivative of a vector of differential polynomials:
/// entries[a][i] = sum_sigma (dF_a/du^i_sigma) D_sigma, so that
/// apply(linearization(F), phi) = Evo_phi(F).
CDiffOp linearization(const JetSpaceConfig& cfg, const std::vector<JetPoly>& F);

/// Components of the variational derivative of f, computed through the
/// operator calculus as the adjoint of the linearization evaluated at the
/// constant function 1.
std::vector<JetPoly> euler_defect(const JetSpaceConfig& cfg, const JetPoly& f);

/// Evolutionary field phi^i d/du^i with prolongation D_sigma phi^i d/du^i_sigma.
struct EvolutionaryField {
    JetSpaceConfig cfg;
    std::vector<JetPoly> components;  // size m

    EvolutionaryField(JetSpaceConfig c, std::vector<JetPoly> comps);

    /// Evo_phi(f) = sum (df/du^i_sigma) D_sigma phi^i.
    JetPoly apply(const JetPoly& f) const;
};

/// Insertion Evo_phi _| a: contracts the first matching covector with sign
/// (-1)^position; <omega^i_sigma, Evo_phi> = D_sigma phi^i, <dx, Evo_phi> = 0.
Form evo_insert(const EvolutionaryField& phi, const Form& a);

/// nabla_a(phi_1, ..., phi_p) = Evo_{phi_1} _| ( ... _| (Evo_{phi_p} _| a)).
Form nabla_apply(const Form& a, const std::vector<EvolutionaryField>& phis);

/// A homogeneous (contact degree p, horizontal degree l) form viewed as the
/// p-argument multidifferential operator it induces; to_form() inverts on
/// canonical representatives.
class FormOperator {
  public:
    explicit FormOperator(Form a);

    int arity() const { return arity_; }
    const Form& to_form() const { return form_; }
    Form operator()(const std::vector<EvolutionaryField>& phis) const;

  private:
    Form form_;
    int arity_ = 0;
};

/// Green's-formula data for q . Delta(p) - Delta*(q) . p.
struct GreenRemainder {
    JetPoly remainder;
    /// Variational derivative of the remainder; all-zero certifies that the
    /// remainder is a total divergence.
    std::vector<JetPoly> euler_defect;
    /// For n = 1: W with D_x W = remainder.
    std::optional<JetPoly> primitive;

    bool certified() const {
        for (const JetPoly& e : euler_defect)
            if (!e.is_zero()) return false;
        return true;
    }
};

GreenRemainder green_remainder(const CDiffOp& op, const std::vector<JetPoly>& p, const std::vector<JetPoly>& q);

/// For n = 1 and a genuine total divergence g, returns W with D_x W = g;
/// nullopt when g is not a divergence.
std::optional<JetPoly> divergence_primitive_1d(const JetSpaceConfig& cfg, const JetPoly& g);

}  // namespace jetvar
