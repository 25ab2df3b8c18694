#include "jetvar/parser.hpp"

#include <algorithm>
#include <cctype>

#include "jetvar/textio.hpp"
#include "jetvar/variational.hpp"

namespace jetvar {

const Form& Value::form() const {
    if (!is_form()) throw SemanticError("expected a form, got an operator");
    return std::get<Form>(v_);
}

const CDiffOp& Value::op() const {
    if (!is_operator()) throw SemanticError("expected an operator, got a form");
    return std::get<CDiffOp>(v_);
}

JetPoly Value::poly() const {
    const Form& f = form();
    if (f.is_zero()) return JetPoly::zero();
    if (f.degree() != 0) throw SemanticError("expected a function (0-form), got degree " + std::to_string(f.degree()));
    return f.terms().begin()->second;
}

namespace {

struct Token {
    enum class Kind { Number, Ident, Symbol, End } kind;
    std::string text;
    int pos;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int pos = static_cast<int>(i);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Kind::Number, src.substr(i, j - i), pos});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Kind::Ident, src.substr(i, j - i), pos});
            i = j;
            continue;
        }
        // UTF-8 wedge U+2227 is a synonym for '*'.
        if (src.compare(i, 3, "∧") == 0) {
            out.push_back({Token::Kind::Symbol, "*", pos});
            i += 3;
            continue;
        }
        if (std::string("+-*/^()[],").find(c) != std::string::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, c), pos});
            ++i;
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos);
    }
    out.push_back({Token::Kind::End, "", static_cast<int>(src.size())});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, const JetSpaceConfig& cfg, bool operator_context)
        : toks_(std::move(tokens)), cfg_(cfg), op_ctx_(operator_context) {}

    AstPtr run() {
        AstPtr e = expression();
        expect_end();
        return e;
    }

  private:
    const Token& peek() const { return toks_[k_]; }
    Token take() { return toks_[k_++]; }
    bool at_symbol(const std::string& s) const {
        return peek().kind == Token::Kind::Symbol && peek().text == s;
    }
    void expect_symbol(const std::string& s) {
        if (!at_symbol(s)) throw ParseError("expected '" + s + "'", peek().pos);
        ++k_;
    }
    void expect_end() {
        if (peek().kind != Token::Kind::End) throw ParseError("trailing input", peek().pos);
    }

    static AstPtr make(ExprAst ast) { return std::make_shared<ExprAst>(std::move(ast)); }

    AstPtr expression() {
        bool negate = false;
        if (at_symbol("-")) {
            ++k_;
            negate = true;
        }
        AstPtr lhs = term();
        if (negate) lhs = make({ExprAst::Neg{lhs}, lhs->position});
        while (at_symbol("+") || at_symbol("-")) {
            char op = take().text[0];
            AstPtr rhs = term();
            lhs = make({ExprAst::Binary{op, lhs, rhs}, lhs->position});
        }
        return lhs;
    }

    AstPtr term() {
        AstPtr lhs = factor();
        while (at_symbol("*") || at_symbol("/")) {
            char op = take().text[0];
            AstPtr rhs = factor();
            if (op == '/' && !std::holds_alternative<ExprAst::Number>(rhs->node))
                throw ParseError("division is only defined by rational constants", rhs->position);
            lhs = make({ExprAst::Binary{op, lhs, rhs}, lhs->position});
        }
        return lhs;
    }

    AstPtr factor() {
        AstPtr base = primary();
        if (at_symbol("^")) {
            int pos = take().pos;
            if (peek().kind != Token::Kind::Number) throw ParseError("exponent must be a non-negative integer", peek().pos);
            int e = std::stoi(take().text);
            base = make({ExprAst::Power{base, e}, pos});
        }
        return base;
    }

    AstPtr primary() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Number) {
            Token num = take();
            // Rational literal p/q: only when directly adjacent in a numeric
            // position; general division still works through the term rule.
            return make({ExprAst::Number{rational_from_string(num.text)}, num.pos});
        }
        if (at_symbol("(")) {
            ++k_;
            AstPtr e = expression();
            expect_symbol(")");
            return e;
        }
        if (t.kind == Token::Kind::Ident) return ident_primary();
        throw ParseError("expected an expression", t.pos);
    }

    AstPtr ident_primary() {
        Token id = take();
        const std::string& s = id.text;
        if (at_symbol("(")) return head(id);
        ExprAst::Atom atom = classify_atom(s, id.pos);
        if ((atom.kind == ExprAst::Atom::Kind::JetCoord || atom.kind == ExprAst::Atom::Kind::Omega ||
             atom.kind == ExprAst::Atom::Kind::Du) &&
            at_symbol("[")) {
            ++k_;
            atom.sigma = index_word(id.pos);
            expect_symbol("]");
        }
        return make({atom, id.pos});
    }

    AstPtr head(const Token& id) {
        static const std::vector<std::string> heads = {"D", "d", "h", "v", "EL", "HLM", "TONTI", "ADJ"};
        if (std::find(heads.begin(), heads.end(), id.text) == heads.end())
            throw ParseError("unknown function '" + id.text + "'", id.pos);
        expect_symbol("(");
        std::vector<AstPtr> args;
        if (!at_symbol(")")) {
            args.push_back(expression());
            while (at_symbol(",")) {
                ++k_;
                args.push_back(expression());
            }
        }
        expect_symbol(")");
        return make({ExprAst::Head{id.text, std::move(args)}, id.pos});
    }

    // Longest-match lookup of a base coordinate name or its x<k> alias.
    int match_base_name(const std::string& w, std::size_t& i) const {
        for (int l = 0; l < cfg_.n; ++l) {
            std::string alias = "x" + std::to_string(l + 1);
            if (w.compare(i, alias.size(), alias) == 0) {
                i += alias.size();
                return l;
            }
        }
        for (int l = 0; l < cfg_.n; ++l) {
            std::string name = cfg_.base_name(l);
            if (w.compare(i, name.size(), name) == 0) {
                i += name.size();
                return l;
            }
        }
        return -1;
    }

    MultiIndex index_word(int err_pos) {
        MultiIndex sigma(cfg_.n);
        std::string w;
        while (peek().kind == Token::Kind::Ident || peek().kind == Token::Kind::Number) w += take().text;
        std::size_t i = 0;
        while (i < w.size()) {
            int l = match_base_name(w, i);
            if (l < 0) throw ParseError("bad index word '" + w + "'", err_pos);
            sigma = sigma.raised(l);
        }
        return sigma;
    }

    // Splits a trailing decimal index: "u12" -> ("u", 12).
    static bool split_indexed(const std::string& s, const std::string& stem, int& idx) {
        if (s.size() <= stem.size() || s.compare(0, stem.size(), stem) != 0) return false;
        for (std::size_t i = stem.size(); i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        idx = std::stoi(s.substr(stem.size()));
        return true;
    }

    ExprAst::Atom classify_atom(const std::string& s, int pos) const {
        using Kind = ExprAst::Atom::Kind;
        auto base_of = [&](const std::string& w) -> int {
            int idx;
            if (split_indexed(w, "x", idx)) return (idx >= 1 && idx <= cfg_.n) ? idx - 1 : -1;
            for (int l = 0; l < cfg_.n; ++l)
                if (w == cfg_.base_name(l)) return l;
            return -1;
        };
        if (op_ctx_) {
            if (s == "id") return {Kind::IdOp, 0, MultiIndex(cfg_.n)};
            if (s.size() >= 2 && s[0] == 'D') {
                int l = base_of(s.substr(1));
                if (l >= 0) return {Kind::DerivOp, l, MultiIndex(cfg_.n)};
            }
        }
        if (int l = base_of(s); l >= 0) return {Kind::BaseCoord, l, MultiIndex(cfg_.n)};
        if (s.size() >= 2 && s[0] == 'd') {
            int l = base_of(s.substr(1));
            if (l >= 0) return {Kind::Dx, l, MultiIndex(cfg_.n)};
        }
        auto fibre_of = [&](const std::string& stem) -> int {
            if (s == stem) return cfg_.m == 1 ? 0 : -1;
            int idx;
            if (split_indexed(s, stem, idx) && idx >= 1 && idx <= cfg_.m) return idx - 1;
            return -1;
        };
        if (int i = fibre_of("u"); i >= 0) return {Kind::JetCoord, i, MultiIndex(cfg_.n)};
        if (int i = fibre_of("om"); i >= 0) return {Kind::Omega, i, MultiIndex(cfg_.n)};
        if (int i = fibre_of("du"); i >= 0) return {Kind::Du, i, MultiIndex(cfg_.n)};
        throw ParseError("unknown name '" + s + "'", pos);
    }

    std::vector<Token> toks_;
    JetSpaceConfig cfg_;
    bool op_ctx_;
    std::size_t k_ = 0;
};

class Evaluator {
  public:
    Evaluator(const JetSpaceConfig& cfg, bool operator_context) : cfg_(cfg), op_ctx_(operator_context) {}

    Value eval(const ExprAst& ast) const {
        return std::visit([&](const auto& node) { return eval_node(node, ast.position); }, ast.node);
    }

  private:
    Value eval_node(const ExprAst::Number& n, int) const {
        if (op_ctx_) return Value(CDiffOp::scalar(cfg_, JetPoly::constant(n.value)));
        return Value(Form::function(cfg_, JetPoly::constant(n.value)));
    }

    Value eval_node(const ExprAst::Atom& a, int) const {
        using Kind = ExprAst::Atom::Kind;
        switch (a.kind) {
            case Kind::BaseCoord:
                if (op_ctx_) return Value(CDiffOp::scalar(cfg_, JetPoly::base_coord(a.index)));
                return Value(Form::function(cfg_, JetPoly::base_coord(a.index)));
            case Kind::JetCoord:
                if (op_ctx_) return Value(CDiffOp::scalar(cfg_, JetPoly::fibre_coord(a.index, a.sigma)));
                return Value(Form::function(cfg_, JetPoly::fibre_coord(a.index, a.sigma)));
            case Kind::Dx:
                return Value(Form::dx(cfg_, a.index));
            case Kind::Omega:
                return Value(Form::omega(cfg_, a.index, a.sigma));
            case Kind::Du:
                return Value(Form::du(cfg_, a.index, a.sigma));
            case Kind::DerivOp:
                return Value(CDiffOp::total_derivative(cfg_, a.index));
            case Kind::IdOp:
                return Value(CDiffOp::identity(cfg_, 1));
        }
        throw SemanticError("unreachable atom kind");
    }

    Value eval_node(const ExprAst::Neg& n, int) const {
        Value c = eval(*n.child);
        if (c.is_operator()) return Value(-c.op());
        return Value(-c.form());
    }

    Value eval_node(const ExprAst::Binary& b, int) const {
        Value l = eval(*b.lhs);
        if (b.op == '/') {
            Rational q = std::get<ExprAst::Number>(b.rhs->node).value;
            if (q == 0) throw SemanticError("division by zero");
            Rational inv = Rational(1) / q;
            if (l.is_operator()) return Value(inv * l.op());
            return Value(inv * l.form());
        }
        Value r = eval(*b.rhs);
        switch (b.op) {
            case '+':
            case '-': {
                if (l.is_operator() != r.is_operator()) throw SemanticError("cannot add forms and operators");
                if (l.is_operator()) return Value(b.op == '+' ? l.op() + r.op() : l.op() - r.op());
                return Value(b.op == '+' ? l.form() + r.form() : l.form() - r.form());
            }
            case '*': {
                if (l.is_operator() && r.is_operator()) return Value(compose(l.op(), r.op()));
                if (l.is_operator()) return Value(compose(l.op(), CDiffOp::scalar(cfg_, r.poly())));
                if (r.is_operator()) return Value(compose(CDiffOp::scalar(cfg_, l.poly()), r.op()));
                return Value(wedge(l.form(), r.form()));
            }
            default:
                throw SemanticError("unknown operator");
        }
    }

    Value eval_node(const ExprAst::Power& p, int) const {
        if (p.exponent < 0) throw SemanticError("negative exponents are not defined");
        Value b = eval(*p.base);
        if (b.is_operator()) {
            CDiffOp acc = CDiffOp::identity(cfg_, 1);
            for (int k = 0; k < p.exponent; ++k) acc = compose(acc, b.op());
            return Value(acc);
        }
        Form acc = Form::function(cfg_, JetPoly::constant(Rational(1)));
        for (int k = 0; k < p.exponent; ++k) acc = wedge(acc, b.form());
        return Value(acc);
    }

    Value eval_node(const ExprAst::Head& h, int pos) const;

    JetPoly lagrangian_density(const Value& v) const {
        const Form& f = v.form();
        if (f.is_zero()) return JetPoly::zero();
        if (f.degree() == 0) return f.terms().begin()->second;
        if (f.degree() == cfg_.n && horizontalize(f) == f) return f.terms().begin()->second;
        throw SemanticError("expected a Lagrangian density (function or multiple of Vol)");
    }

    SourceForm source_of(const Value& v) const {
        const Form& f = v.form();
        if (f.is_zero() || f.degree() == 0) {
            if (cfg_.m != 1) throw SemanticError("a scalar source form needs m = 1; pass one component per equation");
            return SourceForm(cfg_, {v.poly()});
        }
        return source_representative(f);
    }

    JetSpaceConfig cfg_;
    bool op_ctx_;
};

Value Evaluator::eval_node(const ExprAst::Head& h, int pos) const {
    auto need_args = [&](std::size_t k) {
        if (h.args.size() != k)
            throw SemanticError(h.name + " takes " + std::to_string(k) + " argument(s), got " +
                                std::to_string(h.args.size()));
    };
    if (h.name == "ADJ") {
        need_args(1);
        Evaluator sub(cfg_, true);
        return Value(adjoint(sub.eval(*h.args[0]).op()));
    }
    if (op_ctx_) throw SemanticError("'" + h.name + "' is not defined in operator expressions");
    if (h.name == "D") {
        need_args(2);
        const auto* atom = std::get_if<ExprAst::Atom>(&h.args[0]->node);
        if (!atom || atom->kind != ExprAst::Atom::Kind::BaseCoord)
            throw SemanticError("D needs a base coordinate as its first argument");
        Value v = eval(*h.args[1]);
        return Value(Form::function(cfg_, v.poly().total_derivative(atom->index)));
    }
    need_args(1);
    Value v = eval(*h.args[0]);
    if (h.name == "d") return Value(d(v.form()));
    if (h.name == "h") return Value(horizontalize(v.form()));
    if (h.name == "v") return Value(vertical(v.form()));
    if (h.name == "EL") return Value(euler_lagrange(Lagrangian(cfg_, lagrangian_density(v))).to_form());
    if (h.name == "HLM") return Value(helmholtz(source_of(v)).canonical);
    if (h.name == "TONTI") return Value(Form::function(cfg_, tonti_lagrangian(source_of(v)).density));
    throw ParseError("unknown function '" + h.name + "'", pos);
}

}  // namespace

std::string ExprAst::dump(const JetSpaceConfig& cfg) const {
    struct Visitor {
        const JetSpaceConfig& cfg;
        std::string operator()(const Number& n) const { return rational_to_string(n.value); }
        std::string operator()(const Atom& a) const {
            using Kind = Atom::Kind;
            switch (a.kind) {
                case Kind::BaseCoord:
                    return cfg.base_name(a.index);
                case Kind::JetCoord:
                    return coord_token(JetCoord::fibre(a.index, a.sigma), cfg);
                case Kind::Dx:
                    return "d" + cfg.base_name(a.index);
                case Kind::Omega:
                    return (cfg.m > 1 ? "om" + std::to_string(a.index + 1) : std::string("om")) + "[" +
                           index_word(a.sigma, cfg) + "]";
                case Kind::Du:
                    return (cfg.m > 1 ? "du" + std::to_string(a.index + 1) : std::string("du")) + "[" +
                           index_word(a.sigma, cfg) + "]";
                case Kind::DerivOp:
                    return "D" + cfg.base_name(a.index);
                case Kind::IdOp:
                    return "id";
            }
            return "?";
        }
        std::string operator()(const Neg& n) const { return "(- " + n.child->dump(cfg) + ")"; }
        std::string operator()(const Binary& b) const {
            return "(" + std::string(1, b.op == '*' ? 'w' : b.op) + " " + b.lhs->dump(cfg) + " " +
                   b.rhs->dump(cfg) + ")";
        }
        std::string operator()(const Power& p) const {
            return "(^ " + p.base->dump(cfg) + " " + std::to_string(p.exponent) + ")";
        }
        std::string operator()(const Head& h) const {
            std::string s = "(" + h.name;
            for (const AstPtr& a : h.args) s += " " + a->dump(cfg);
            return s + ")";
        }
    };
    return std::visit(Visitor{cfg}, node);
}

AstPtr parse_expression(const std::string& src, const JetSpaceConfig& cfg, bool operator_context) {
    Parser p(lex(src), cfg, operator_context);
    return p.run();
}

Value eval(const AstPtr& ast, const JetSpaceConfig& cfg, bool operator_context) {
    return Evaluator(cfg, operator_context).eval(*ast);
}

Form parse_form(const std::string& src, const JetSpaceConfig& cfg) {
    return eval(parse_expression(src, cfg), cfg).form();
}

JetPoly parse_poly(const std::string& src, const JetSpaceConfig& cfg) {
    return eval(parse_expression(src, cfg), cfg).poly();
}

CDiffOp parse_operator(const std::string& src, const JetSpaceConfig& cfg) {
    return eval(parse_expression(src, cfg, true), cfg, true).op();
}

}  // namespace jetvar
