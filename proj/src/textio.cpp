#include "jetvar/textio.hpp"

#include <sstream>

namespace jetvar {

std::string index_word(const MultiIndex& sigma, const JetSpaceConfig& cfg) {
    std::string w;
    for (int l = 0; l < sigma.dim(); ++l)
        for (int k = 0; k < sigma[l]; ++k) w += cfg.base_name(l);
    return w;
}

std::string coord_token(const JetCoord& c, const JetSpaceConfig& cfg) {
    if (c.is_base()) return cfg.base_name(c.lambda());
    std::string s = cfg.fibre_name(c.fibre_index());
    if (c.sigma().order() > 0) s += "[" + index_word(c.sigma(), cfg) + "]";
    return s;
}

namespace {

std::string render_abs_rational(const Rational& q) {
    Rational a = q < 0 ? Rational(-q) : q;
    return rational_to_string(a);
}

// One monomial with |coefficient|; sign is handled by the caller.
std::string render_term(const Monomial& m, const Rational& q, const JetSpaceConfig& cfg) {
    std::string s;
    Rational a = q < 0 ? Rational(-q) : q;
    bool need_coeff = (a != 1) || m.factors.empty();
    if (need_coeff) s += render_abs_rational(q);
    for (const auto& [c, e] : m.factors) {
        if (!s.empty()) s += "*";
        s += coord_token(c, cfg);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string join_signed(const std::vector<std::pair<std::string, bool>>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& [text, negative] = parts[k];
        if (k == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += text;
    }
    return out;
}

std::string render_covector(const BasisCovector& b, const JetSpaceConfig& cfg) {
    if (b.is_dx()) return "d" + cfg.base_name(b.lambda());
    std::string s = "om";
    if (cfg.m > 1) s += std::to_string(b.fibre_index() + 1);
    return s + "[" + index_word(b.sigma(), cfg) + "]";
}

// Coefficient in front of a wedge word; multi-term coefficients are
// parenthesized so the rendering re-parses.
std::pair<std::string, bool> render_form_coeff(const JetPoly& c, const JetSpaceConfig& cfg) {
    if (c.terms().size() == 1) {
        const auto& [m, q] = *c.terms().begin();
        if (m.factors.empty() && (q == 1 || q == -1)) return {"", q < 0};
        return {render_term(m, q, cfg) + "*", q < 0};
    }
    return {"(" + render_poly(c, cfg) + ")*", false};
}

}  // namespace

std::string render_poly(const JetPoly& p, const JetSpaceConfig& cfg) {
    std::vector<std::pair<std::string, bool>> parts;
    for (const auto& [m, q] : p.terms()) parts.emplace_back(render_term(m, q, cfg), q < 0);
    return join_signed(parts);
}

std::string render_form(const Form& a) {
    if (a.is_zero()) return "0";
    if (a.degree() == 0) return render_poly(a.terms().begin()->second, a.config());
    std::vector<std::pair<std::string, bool>> parts;
    for (const auto& [w, c] : a.terms()) {
        auto [coeff, negative] = render_form_coeff(c, a.config());
        std::string word;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k > 0) word += "∧";
            word += render_covector(w[k], a.config());
        }
        parts.emplace_back(coeff + word, negative);
    }
    return join_signed(parts);
}

std::string render_op(const CDiffOp& op) {
    const JetSpaceConfig& cfg = op.config();
    auto render_entry = [&](const CDiffOp::Entry& e) {
        std::vector<std::pair<std::string, bool>> parts;
        for (const auto& [sigma, c] : e) {
            std::string ds;
            for (int l = 0; l < sigma.dim(); ++l) {
                if (sigma[l] == 0) continue;
                if (!ds.empty()) ds += "*";
                ds += "D" + cfg.base_name(l);
                if (sigma[l] > 1) ds += "^" + std::to_string(sigma[l]);
            }
            if (ds.empty()) {
                if (c.terms().size() == 1) {
                    const auto& [m, q] = *c.terms().begin();
                    parts.emplace_back(render_term(m, q, cfg), q < 0);
                } else {
                    parts.emplace_back("(" + render_poly(c, cfg) + ")", false);
                }
            } else {
                auto [coeff, negative] = render_form_coeff(c, cfg);
                parts.emplace_back(coeff + ds, negative);
            }
        }
        return join_signed(parts);
    };
    if (op.rows() == 1 && op.cols() == 1) return render_entry(op.entry(0, 0));
    std::ostringstream out;
    for (int r = 0; r < op.rows(); ++r)
        for (int c = 0; c < op.cols(); ++c) {
            if (r || c) out << "\n";
            out << "[" << (r + 1) << "," << (c + 1) << "] " << render_entry(op.entry(r, c));
        }
    return out.str();
}

std::string render_source(const SourceForm& eta) {
    if (eta.cfg.m == 1) return render_poly(eta.components[0], eta.cfg);
    std::ostringstream out;
    for (int i = 0; i < eta.cfg.m; ++i) {
        if (i) out << "\n";
        out << "eta" << (i + 1) << " = " << render_poly(eta.components[static_cast<std::size_t>(i)], eta.cfg);
    }
    return out.str();
}

namespace {

std::string latex_rational(const Rational& q, bool with_sign) {
    Rational a = q < 0 ? Rational(-q) : q;
    std::string s;
    if (with_sign && q < 0) s += "-";
    if (a.get_den() == 1)
        s += a.get_num().get_str();
    else
        s += "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    return s;
}

std::string latex_jet_coord(const JetCoord& c, const JetSpaceConfig& cfg) {
    if (c.is_base()) return cfg.base_name(c.lambda());
    std::string s = "u";
    if (cfg.m > 1) s += "^{" + std::to_string(c.fibre_index() + 1) + "}";
    if (c.sigma().order() > 0) s += "_{" + index_word(c.sigma(), cfg) + "}";
    return s;
}

std::string latex_term(const Monomial& m, const Rational& q, const JetSpaceConfig& cfg) {
    std::string s;
    Rational a = q < 0 ? Rational(-q) : q;
    if (a != 1 || m.factors.empty()) s += latex_rational(a, false);
    for (const auto& [c, e] : m.factors) {
        if (!s.empty()) s += "\\,";
        s += latex_jet_coord(c, cfg);
        if (e > 1) s += "^{" + std::to_string(e) + "}";
    }
    return s;
}

std::string latex_covector(const BasisCovector& b, const JetSpaceConfig& cfg) {
    if (b.is_dx()) return "d" + cfg.base_name(b.lambda());
    std::string s = "\\omega";
    if (cfg.m > 1) s += "^{" + std::to_string(b.fibre_index() + 1) + "}";
    s += "_{" + (b.sigma().order() > 0 ? index_word(b.sigma(), cfg) : std::string("0")) + "}";
    return s;
}

std::string latex_sum(const std::vector<std::pair<std::string, bool>>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& [text, negative] = parts[k];
        if (k == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += text;
    }
    return out;
}

}  // namespace

std::string latex_poly(const JetPoly& p, const JetSpaceConfig& cfg) {
    std::vector<std::pair<std::string, bool>> parts;
    for (const auto& [m, q] : p.terms()) parts.emplace_back(latex_term(m, q, cfg), q < 0);
    return latex_sum(parts);
}

std::string latex_form(const Form& a) {
    if (a.is_zero()) return "0";
    if (a.degree() == 0) return latex_poly(a.terms().begin()->second, a.config());
    std::vector<std::pair<std::string, bool>> parts;
    for (const auto& [w, c] : a.terms()) {
        std::string s;
        if (c.terms().size() == 1) {
            const auto& [m, q] = *c.terms().begin();
            if (!(m.factors.empty() && (q == 1 || q == -1))) s += latex_term(m, q, a.config()) + "\\,";
        } else {
            s += "\\left(" + latex_poly(c, a.config()) + "\\right)";
        }
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k > 0) s += "\\wedge ";
            s += latex_covector(w[k], a.config());
        }
        bool neg = c.terms().size() == 1 && c.terms().begin()->second < 0;
        parts.emplace_back(s, neg);
    }
    return latex_sum(parts);
}

std::string latex_op(const CDiffOp& op) {
    const JetSpaceConfig& cfg = op.config();
    auto entry = [&](const CDiffOp::Entry& e) {
        std::vector<std::pair<std::string, bool>> parts;
        for (const auto& [sigma, c] : e) {
            std::string s;
            if (c.terms().size() == 1) {
                const auto& [m, q] = *c.terms().begin();
                bool unit = m.factors.empty() && (q == 1 || q == -1);
                if (!unit || sigma.order() == 0) s += latex_term(m, q, cfg);
            } else {
                s += "\\left(" + latex_poly(c, cfg) + "\\right)";
            }
            if (sigma.order() > 0) {
                if (!s.empty()) s += "\\,";
                s += "D_{" + index_word(sigma, cfg) + "}";
            }
            bool neg = c.terms().size() == 1 && c.terms().begin()->second < 0;
            parts.emplace_back(s, neg);
        }
        return latex_sum(parts);
    };
    if (op.rows() == 1 && op.cols() == 1) return entry(op.entry(0, 0));
    std::ostringstream out;
    out << "\\begin{pmatrix}";
    for (int r = 0; r < op.rows(); ++r) {
        if (r) out << " \\\\ ";
        for (int c = 0; c < op.cols(); ++c) {
            if (c) out << " & ";
            out << entry(op.entry(r, c));
        }
    }
    out << "\\end{pmatrix}";
    return out.str();
}

std::string latex_source(const SourceForm& eta) {
    std::vector<std::pair<std::string, bool>> parts;
    const JetSpaceConfig& cfg = eta.cfg;
    for (int i = 0; i < cfg.m; ++i) {
        const JetPoly& c = eta.components[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string om = "\\omega";
        if (cfg.m > 1) om += "^{" + std::to_string(i + 1) + "}";
        std::string s;
        if (c.terms().size() == 1) {
            const auto& [m, q] = *c.terms().begin();
            if (!(m.factors.empty() && (q == 1 || q == -1))) s += latex_term(m, q, cfg) + "\\,";
        } else {
            s += "\\left(" + latex_poly(c, cfg) + "\\right)";
        }
        s += om + "\\wedge\\mathrm{Vol}";
        bool neg = c.terms().size() == 1 && c.terms().begin()->second < 0;
        parts.emplace_back(s, neg);
    }
    return latex_sum(parts);
}

}  // namespace jetvar
