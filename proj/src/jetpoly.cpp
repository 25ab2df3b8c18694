#include "jetvar/jetpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetvar {

JetPoly JetPoly::constant(Rational q) {
    JetPoly p;
    if (q != 0) p.terms_.emplace(Monomial{}, std::move(q));
    return p;
}

JetPoly JetPoly::coord(const JetCoord& c) {
    JetPoly p;
    p.terms_.emplace(Monomial{{{c, 1}}}, Rational(1));
    return p;
}

JetPoly JetPoly::monomial(Monomial mono, Rational coeff) {
    JetPoly p;
    p.add_term(mono, coeff);
    return p;
}

bool JetPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
}

Rational JetPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool JetPoly::is_base_only() const {
    for (const auto& [m, q] : terms_)
        for (const auto& [c, e] : m.factors)
            if (c.is_fibre()) return false;
    return true;
}

int JetPoly::order() const {
    int r = 0;
    for (const auto& [m, q] : terms_)
        for (const auto& [c, e] : m.factors)
            if (c.is_fibre()) r = std::max(r, c.jet_order());
    return r;
}

int JetPoly::degree() const {
    int d = 0;
    for (const auto& [m, q] : terms_) d = std::max(d, m.degree());
    return d;
}

std::vector<JetCoord> JetPoly::coordinates() const {
    std::vector<JetCoord> out;
    for (const auto& [m, q] : terms_)
        for (const auto& [c, e] : m.factors) out.push_back(c);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void JetPoly::add_term(const Monomial& m, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.emplace(m, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

JetPoly JetPoly::operator-() const {
    JetPoly p = *this;
    for (auto& [m, q] : p.terms_) q = -q;
    return p;
}

JetPoly& JetPoly::operator+=(const JetPoly& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, q);
    return *this;
}

JetPoly& JetPoly::operator-=(const JetPoly& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, Rational(-q));
    return *this;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors.reserve(a.factors.size() + b.factors.size());
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        if (ia->first < ib->first)
            out.factors.push_back(*ia++);
        else if (ib->first < ia->first)
            out.factors.push_back(*ib++);
        else {
            out.factors.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }
    out.factors.insert(out.factors.end(), ia, a.factors.end());
    out.factors.insert(out.factors.end(), ib, b.factors.end());
    return out;
}

}  // namespace

JetPoly operator*(const JetPoly& a, const JetPoly& b) {
    JetPoly p;
    for (const auto& [ma, qa] : a.terms_)
        for (const auto& [mb, qb] : b.terms_) p.add_term(merge_monomials(ma, mb), Rational(qa * qb));
    return p;
}

JetPoly operator*(const Rational& q, const JetPoly& p) {
    JetPoly out;
    if (q == 0) return out;
    out = p;
    for (auto& [m, c] : out.terms_) c *= q;
    return out;
}

JetPoly JetPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    JetPoly acc = JetPoly::constant(Rational(1));
    for (int k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

JetPoly JetPoly::partial(const JetCoord& c) const {
    JetPoly out;
    for (const auto& [m, q] : terms_) {
        for (std::size_t k = 0; k < m.factors.size(); ++k) {
            if (!(m.factors[k].first == c)) continue;
            Monomial d = m;
            Rational coeff = q * Rational(m.factors[k].second);
            if (d.factors[k].second == 1)
                d.factors.erase(d.factors.begin() + static_cast<std::ptrdiff_t>(k));
            else
                d.factors[k].second -= 1;
            out.add_term(d, coeff);
            break;
        }
    }
    return out;
}

JetPoly JetPoly::total_derivative(int lambda) const {
    JetPoly out = partial(JetCoord::base(lambda));
    for (const JetCoord& c : coordinates()) {
        if (!c.is_fibre()) continue;
        JetPoly p = partial(c);
        if (p.is_zero()) continue;
        out += JetPoly::coord(c.prolonged(lambda)) * p;
    }
    return out;
}

JetPoly JetPoly::total_derivative(const MultiIndex& sigma) const {
    JetPoly out = *this;
    for (int l = 0; l < sigma.dim(); ++l)
        for (int k = 0; k < sigma[l]; ++k) out = out.total_derivative(l);
    return out;
}

JetPoly JetPoly::substitute(const std::map<JetCoord, JetPoly>& repl) const {
    JetPoly out;
    for (const auto& [m, q] : terms_) {
        JetPoly term = JetPoly::constant(q);
        for (const auto& [c, e] : m.factors) {
            auto it = repl.find(c);
            JetPoly factor = (it == repl.end()) ? JetPoly::coord(c) : it->second;
            term = term * factor.pow(e);
        }
        out += term;
    }
    return out;
}

Rational JetPoly::evaluate(const std::map<JetCoord, Rational>& point) const {
    Rational out(0);
    for (const auto& [m, q] : terms_) {
        Rational t = q;
        for (const auto& [c, e] : m.factors) {
            auto it = point.find(c);
            if (it == point.end()) throw std::invalid_argument("evaluate: unassigned coordinate");
            t *= rational_pow(it->second, e);
        }
        out += t;
    }
    return out;
}

JetPoly JetPoly::fibre_scaling_integral(int extra) const {
    JetPoly out;
    for (const auto& [m, q] : terms_) {
        int p = m.fibre_degree() + extra + 1;
        out.add_term(m, Rational(q / Rational(p)));
    }
    return out;
}

JetPoly JetPoly::antiderivative(const JetCoord& c) const {
    JetPoly out;
    for (const auto& [m, q] : terms_) {
        Monomial bumped;
        bool placed = false;
        for (const auto& [mc, e] : m.factors) {
            if (mc == c) {
                bumped.factors.emplace_back(mc, e + 1);
                placed = true;
            } else {
                if (!placed && c < mc) {
                    bumped.factors.emplace_back(c, 1);
                    placed = true;
                }
                bumped.factors.emplace_back(mc, e);
            }
        }
        if (!placed) bumped.factors.emplace_back(c, 1);
        int e = 0;
        for (const auto& [mc, ee] : bumped.factors)
            if (mc == c) e = ee;
        out.add_term(bumped, Rational(q / Rational(e)));
    }
    return out;
}

PolySection::PolySection(JetSpaceConfig c, std::vector<JetPoly> comps) : cfg(c), components(std::move(comps)) {
    if (static_cast<int>(components.size()) != cfg.m)
        throw std::invalid_argument("section needs one component per fibre dimension");
    for (const JetPoly& p : components)
        if (!p.is_base_only()) throw std::invalid_argument("section components must depend on base coordinates only");
}

std::map<JetCoord, JetPoly> prolong(const PolySection& s, int r) {
    if (r < 0) throw std::invalid_argument("prolongation order must be >= 0");
    std::map<JetCoord, JetPoly> out;
    for (int i = 0; i < s.cfg.m; ++i) {
        for (const MultiIndex& sigma : enumerate_multiindices(s.cfg.n, r)) {
            JetPoly d = s.components[static_cast<std::size_t>(i)];
            for (int l = 0; l < sigma.dim(); ++l)
                for (int k = 0; k < sigma[l]; ++k) d = d.partial(JetCoord::base(l));
            out.emplace(JetCoord::fibre(i, sigma), std::move(d));
        }
    }
    return out;
}

JetPoly pullback(const JetPoly& f, const PolySection& s) {
    return f.substitute(prolong(s, f.order()));
}

}  // namespace jetvar
