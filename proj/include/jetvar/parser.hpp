#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "jetvar/cdiff.hpp"

namespace jetvar {

/// Syntax error with a 0-based character offset into the source.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    int position;
};

/// Well-formed input that does not type-check: wrong arity, wrong bidegree,
/// mixing operators and forms, and similar. Distinct from ParseError.
struct SemanticError : std::runtime_error {
    explicit SemanticError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ExprAst;
using AstPtr = std::shared_ptr<const ExprAst>;

struct ExprAst {
    struct Number {
        Rational value;
    };
    /// Named atom; index words are already multisets (sorted) here.
    struct Atom {
        enum class Kind { BaseCoord, JetCoord, Dx, Omega, Du, DerivOp, IdOp };
        Kind kind;
        int index = 0;  // lambda or fibre index, 0-based
        MultiIndex sigma;
    };
    struct Neg {
        AstPtr child;
    };
    struct Binary {
        char op;  // '+', '-', '*' (graded product), '/' (by constant)
        AstPtr lhs, rhs;
    };
    struct Power {
        AstPtr base;
        int exponent;
    };
    struct Head {
        std::string name;  // D, d, h, v, EL, HLM, TONTI, ADJ
        std::vector<AstPtr> args;
    };

    std::variant<Number, Atom, Neg, Binary, Power, Head> node;
    int position = 0;

    /// S-expression dump for snapshot tests.
    std::string dump(const JetSpaceConfig& cfg) const;
};

/// Evaluation result: a form (0-forms carry polynomials) or an operator.
class Value {
  public:
    explicit Value(Form f) : v_(std::move(f)) {}
    explicit Value(CDiffOp op) : v_(std::move(op)) {}

    bool is_form() const { return std::holds_alternative<Form>(v_); }
    bool is_operator() const { return std::holds_alternative<CDiffOp>(v_); }
    const Form& form() const;
    const CDiffOp& op() const;
    /// The 0-form payload; SemanticError when the degree is positive.
    JetPoly poly() const;

  private:
    std::variant<Form, CDiffOp> v_;
};

/// Parse only; operator_context switches the atom vocabulary to Dx/id.
AstPtr parse_expression(const std::string& src, const JetSpaceConfig& cfg, bool operator_context = false);

Value eval(const AstPtr& ast, const JetSpaceConfig& cfg, bool operator_context = false);

Form parse_form(const std::string& src, const JetSpaceConfig& cfg);
JetPoly parse_poly(const std::string& src, const JetSpaceConfig& cfg);
CDiffOp parse_operator(const std::string& src, const JetSpaceConfig& cfg);

}  // namespace jetvar
