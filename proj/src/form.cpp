#include "jetvar/form.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetvar {

int contact_degree(const WedgeWord& w) {
    int c = 0;
    for (const BasisCovector& b : w)
        if (b.is_omega()) ++c;
    return c;
}

Form Form::zero(const JetSpaceConfig& cfg, int degree) {
    Form a;
    a.cfg_ = cfg;
    a.degree_ = degree;
    return a;
}

Form Form::function(const JetSpaceConfig& cfg, JetPoly f) {
    Form a = zero(cfg, 0);
    if (!f.is_zero()) a.terms_.emplace(WedgeWord{}, std::move(f));
    return a;
}

Form Form::covector(const JetSpaceConfig& cfg, const BasisCovector& c) {
    Form a = zero(cfg, 1);
    a.terms_.emplace(WedgeWord{c}, JetPoly::constant(Rational(1)));
    return a;
}

Form Form::du(const JetSpaceConfig& cfg, int i, const MultiIndex& sigma) {
    Form a = omega(cfg, i, sigma);
    for (int l = 0; l < cfg.n; ++l)
        a += JetPoly::fibre_coord(i, sigma.raised(l)) * dx(cfg, l);
    return a;
}

Form Form::volume(const JetSpaceConfig& cfg) {
    WedgeWord w;
    for (int l = 0; l < cfg.n; ++l) w.push_back(BasisCovector::dx(l));
    Form a = zero(cfg, cfg.n);
    a.terms_.emplace(std::move(w), JetPoly::constant(Rational(1)));
    return a;
}

Form Form::term(const JetSpaceConfig& cfg, WedgeWord word, JetPoly coeff) {
    if (!std::is_sorted(word.begin(), word.end()) ||
        std::adjacent_find(word.begin(), word.end()) != word.end())
        throw std::invalid_argument("wedge word must be strictly sorted");
    Form a = zero(cfg, static_cast<int>(word.size()));
    if (!coeff.is_zero()) a.terms_.emplace(std::move(word), std::move(coeff));
    return a;
}

int Form::order() const {
    int r = 0;
    for (const auto& [w, c] : terms_) {
        r = std::max(r, c.order());
        for (const BasisCovector& b : w)
            if (b.is_omega()) r = std::max(r, b.sigma().order());
    }
    return r;
}

std::optional<int> Form::homogeneous_contact_degree() const {
    std::optional<int> p;
    for (const auto& [w, c] : terms_) {
        int cd = contact_degree(w);
        if (p && *p != cd) return std::nullopt;
        p = cd;
    }
    return p;
}

void Form::add_term(const WedgeWord& w, const JetPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form Form::operator-() const {
    Form a = *this;
    for (auto& [w, c] : a.terms_) c = -c;
    return a;
}

Form& Form::operator+=(const Form& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (degree_ != o.degree_) throw std::invalid_argument("adding forms of different degree");
    if (!(cfg_ == o.cfg_)) throw std::invalid_argument("adding forms over different jet spaces");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator*(const JetPoly& f, const Form& a) {
    Form out = Form::zero(a.config(), a.degree());
    if (f.is_zero()) return out;
    for (const auto& [w, c] : a.terms()) out.add_term(w, f * c);
    return out;
}

Form operator*(const Rational& q, const Form& a) { return JetPoly::constant(q) * a; }

namespace {

// Merge two strictly sorted words; returns the permutation sign, or 0 when a
// covector repeats.
int merge_words(const WedgeWord& a, const WedgeWord& b, WedgeWord& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    int sign = 1;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] == b[ib]) return 0;
        if (a[ia] < b[ib]) {
            out.push_back(a[ia++]);
        } else {
            // b[ib] passes the remaining factors of a.
            if ((a.size() - ia) % 2 == 1) sign = -sign;
            out.push_back(b[ib++]);
        }
    }
    while (ia < a.size()) out.push_back(a[ia++]);
    while (ib < b.size()) out.push_back(b[ib++]);
    return sign;
}

}  // namespace

Form wedge(const Form& a, const Form& b) {
    if (a.is_zero() || b.is_zero()) return Form::zero(a.config(), a.degree() + b.degree());
    if (!(a.config() == b.config())) throw std::invalid_argument("wedging forms over different jet spaces");
    Form out = Form::zero(a.config(), a.degree() + b.degree());
    WedgeWord w;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            int sign = merge_words(wa, wb, w);
            if (sign == 0) continue;
            JetPoly c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(w, c);
        }
    return out;
}

Form from_du_basis(const JetSpaceConfig& cfg,
                   const std::vector<std::pair<std::vector<DuCovector>, JetPoly>>& terms) {
    if (terms.empty()) return Form::zero(cfg, 0);
    Form out = Form::zero(cfg, static_cast<int>(terms.front().first.size()));
    for (const auto& [word, coeff] : terms) {
        Form t = Form::function(cfg, coeff);
        for (const DuCovector& c : word)
            t = wedge(t, c.base ? Form::dx(cfg, c.index) : Form::du(cfg, c.index, c.sigma));
        out += t;
    }
    return out;
}

namespace {

// d of a single basis covector: 0 for dx, dx^lambda ^ omega^i_{sigma lambda}
// for omega^i_sigma.
Form d_covector(const JetSpaceConfig& cfg, const BasisCovector& b) {
    Form out = Form::zero(cfg, 2);
    if (b.is_dx()) return out;
    for (int l = 0; l < cfg.n; ++l)
        out += wedge(Form::dx(cfg, l), Form::omega(cfg, b.fibre_index(), b.sigma().raised(l)));
    return out;
}

// The 1-form differential of a coefficient, split as
// horizontal (D_lambda f dx^lambda) + contact (df/du^i_sigma omega^i_sigma).
Form d_coeff_horizontal(const JetSpaceConfig& cfg, const JetPoly& f) {
    Form out = Form::zero(cfg, 1);
    for (int l = 0; l < cfg.n; ++l) out += f.total_derivative(l) * Form::dx(cfg, l);
    return out;
}

Form d_coeff_contact(const JetSpaceConfig& cfg, const JetPoly& f) {
    Form out = Form::zero(cfg, 1);
    for (const JetCoord& c : f.coordinates()) {
        if (!c.is_fibre()) continue;
        out += f.partial(c) * Form::omega(cfg, c.fibre_index(), c.sigma());
    }
    return out;
}

// c * d(word), the word-derivative part shared by d and dhat.
Form d_word_part(const JetSpaceConfig& cfg, const WedgeWord& w, const JetPoly& c) {
    Form out = Form::zero(cfg, static_cast<int>(w.size()) + 1);
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (!w[t].is_omega()) continue;
        WedgeWord prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
        WedgeWord suffix(w.begin() + static_cast<std::ptrdiff_t>(t) + 1, w.end());
        Form piece = wedge(Form::term(cfg, prefix, JetPoly::constant(Rational(1))), d_covector(cfg, w[t]));
        piece = wedge(piece, Form::term(cfg, suffix, JetPoly::constant(Rational(1))));
        if (t % 2 == 1) piece = -piece;
        out += c * piece;
    }
    return out;
}

}  // namespace

Form d(const Form& a) {
    Form out = Form::zero(a.config(), a.degree() + 1);
    for (const auto& [w, c] : a.terms()) {
        Form dc = d_coeff_horizontal(a.config(), c) + d_coeff_contact(a.config(), c);
        out += wedge(dc, Form::term(a.config(), w, JetPoly::constant(Rational(1))));
        out += d_word_part(a.config(), w, c);
    }
    return out;
}

Form dhat(const Form& a) {
    Form out = Form::zero(a.config(), a.degree() + 1);
    for (const auto& [w, c] : a.terms()) {
        out += wedge(d_coeff_horizontal(a.config(), c), Form::term(a.config(), w, JetPoly::constant(Rational(1))));
        out += d_word_part(a.config(), w, c);
    }
    return out;
}

Form cd(const Form& a) {
    Form out = Form::zero(a.config(), a.degree() + 1);
    for (const auto& [w, c] : a.terms())
        out += wedge(d_coeff_contact(a.config(), c), Form::term(a.config(), w, JetPoly::constant(Rational(1))));
    return out;
}

Form project(const Form& a, int contact, int horizontal) {
    if (contact < 0 || horizontal < 0) throw std::invalid_argument("negative projection bidegree");
    if (!a.is_zero() && contact + horizontal != a.degree())
        throw std::invalid_argument("projection bidegree does not match form degree");
    Form out = Form::zero(a.config(), a.degree());
    for (const auto& [w, c] : a.terms())
        if (contact_degree(w) == contact) out.add_term(w, c);
    return out;
}

Form horizontalize(const Form& a) {
    if (a.is_zero() || a.degree() > a.config().n) return Form::zero(a.config(), a.degree());
    return project(a, 0, a.degree());
}

Form vertical(const Form& a) { return a - horizontalize(a); }

Form contact_part(const Form& a, int p) {
    if (p < 0) throw std::invalid_argument("negative contact degree");
    Form out = Form::zero(a.config(), a.degree());
    for (const auto& [w, c] : a.terms())
        if (contact_degree(w) >= p) out.add_term(w, c);
    return out;
}

bool is_p_contact(const Form& a, int p) {
    for (const auto& [w, c] : a.terms())
        if (contact_degree(w) < p) return false;
    return true;
}

Form dbar(const Form& a) {
    if (a.is_zero()) return Form::zero(a.config(), a.degree() + 1);
    auto p = a.homogeneous_contact_degree();
    if (!p) throw std::invalid_argument("dbar needs a contact-degree-homogeneous form");
    return project(d(a), *p, a.degree() - *p + 1);
}

Form contact_homotopy(const Form& a) {
    Form out = Form::zero(a.config(), std::max(a.degree() - 1, 0));
    for (const auto& [w, c] : a.terms()) {
        int omegas = contact_degree(w);
        if (omegas == 0) continue;  // no dt can arise
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (!w[t].is_omega()) continue;
            // dt branch at position t: coefficient picks up u^i_sigma, the
            // remaining omega factors contribute t^{omegas-1}, and moving dt
            // to the front costs (-1)^t.
            JetPoly integrated = c.fibre_scaling_integral(omegas - 1);
            JetPoly coeff = JetPoly::fibre_coord(w[t].fibre_index(), w[t].sigma()) * integrated;
            if (t % 2 == 1) coeff = -coeff;
            WedgeWord rest(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
            rest.insert(rest.end(), w.begin() + static_cast<std::ptrdiff_t>(t) + 1, w.end());
            out.add_term(rest, coeff);
        }
    }
    return out;
}

Form contact_primitive(const Form& a) {
    if (!is_p_contact(a, 1)) throw std::invalid_argument("contact_primitive needs an at-least-1-contact form");
    if (!d(a).is_zero()) throw std::invalid_argument("contact_primitive needs a closed form");
    return contact_homotopy(a);
}

Form pullback_by_section(const Form& a, const PolySection& s) {
    if (!(a.config() == s.cfg)) throw std::invalid_argument("section over a different jet space");
    Form out = Form::zero(a.config(), a.degree());
    for (const auto& [w, c] : a.terms()) {
        if (contact_degree(w) > 0) continue;  // contact covectors die on prolonged sections
        out.add_term(w, pullback(c, s));
    }
    return out;
}

}  // namespace jetvar
