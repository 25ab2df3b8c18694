#include "jetvar/variational.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetvar {

namespace {

// Sign of moving one omega factor across the n dx factors of Vol:
// omega ^ Vol = (-1)^n Vol ^ omega, and wedge words store Vol first.
Rational vol_transposition_sign(int n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

SourceForm::SourceForm(JetSpaceConfig c, std::vector<JetPoly> eta) : cfg(c), components(std::move(eta)) {
    if (static_cast<int>(components.size()) != cfg.m)
        throw std::invalid_argument("source form needs one component per fibre dimension");
}

bool SourceForm::is_zero() const {
    return std::all_of(components.begin(), components.end(), [](const JetPoly& p) { return p.is_zero(); });
}

int SourceForm::order() const {
    int r = 0;
    for (const JetPoly& p : components) r = std::max(r, p.order());
    return r;
}

Form SourceForm::to_form() const {
    Form out = Form::zero(cfg, cfg.n + 1);
    Form vol = Form::volume(cfg);
    for (int i = 0; i < cfg.m; ++i)
        out += wedge(components[static_cast<std::size_t>(i)] * Form::omega(cfg, i, MultiIndex(cfg.n)), vol);
    return out;
}

SourceForm euler_lagrange(const Lagrangian& L) {
    std::vector<JetPoly> eta(static_cast<std::size_t>(L.cfg.m));
    for (const JetCoord& c : L.density.coordinates()) {
        if (!c.is_fibre()) continue;
        JetPoly part = L.density.partial(c).total_derivative(c.sigma());
        if (c.sigma().order() % 2 == 1) part = -part;
        eta[static_cast<std::size_t>(c.fibre_index())] += part;
    }
    return SourceForm(L.cfg, std::move(eta));
}

SourceForm source_representative(const Form& a) {
    const JetSpaceConfig& cfg = a.config();
    if (a.is_zero()) return SourceForm::zero(cfg);
    if (a.degree() != cfg.n + 1 || a.homogeneous_contact_degree() != 1)
        throw std::invalid_argument("source representative needs a (1-contact, n-horizontal) form");
    Rational flip = vol_transposition_sign(cfg.n);
    std::vector<JetPoly> eta(static_cast<std::size_t>(cfg.m));
    for (const auto& [w, c] : a.terms()) {
        // Canonical words are dx^1 .. dx^n followed by one omega^i_sigma;
        // anything else in degree n+1 with one contact factor collapses to
        // repeated dx and is impossible, so w.back() is the omega.
        const BasisCovector& om = w.back();
        JetPoly coeff = flip * c;  // a_i^sigma with the paper's omega-first ordering
        JetPoly part = coeff.total_derivative(om.sigma());
        if (om.sigma().order() % 2 == 1) part = -part;
        eta[static_cast<std::size_t>(om.fibre_index())] += part;
    }
    return SourceForm(cfg, std::move(eta));
}

namespace {

// Canonical 2-contact form of an m x m operator table:
// sum_{i,j,sigma} H[i][j]^sigma omega^j_sigma ^ omega^i ^ Vol.
Form operator_to_canonical_form(const CDiffOp& h) {
    const JetSpaceConfig& cfg = h.config();
    Form out = Form::zero(cfg, cfg.n + 2);
    Form vol = Form::volume(cfg);
    for (int i = 0; i < cfg.m; ++i)
        for (int j = 0; j < cfg.m; ++j)
            for (const auto& [sigma, coeff] : h.entry(i, j)) {
                Form pair = wedge(Form::omega(cfg, j, sigma), Form::omega(cfg, i, MultiIndex(cfg.n)));
                out += wedge(coeff * pair, vol);
            }
    return out;
}

}  // namespace

HelmholtzOperator helmholtz(const SourceForm& eta) {
    const JetSpaceConfig& cfg = eta.cfg;
    CDiffOp ell = linearization(cfg, eta.components);
    CDiffOp h = Rational(1, 2) * (ell - adjoint(ell));
    HelmholtzOperator out{h, operator_to_canonical_form(h)};
    return out;
}

Form helmholtz_literal(const SourceForm& eta) {
    const JetSpaceConfig& cfg = eta.cfg;
    // A[i][sigma][j] = d eta_j / du^i_sigma, the coefficient table of the
    // 2-contact form Cd(eta_j omega^j ^ Vol).
    std::map<std::pair<int, MultiIndex>, std::vector<JetPoly>> table;
    int s = 0;
    for (int j = 0; j < cfg.m; ++j) {
        const JetPoly& comp = eta.components[static_cast<std::size_t>(j)];
        for (const JetCoord& c : comp.coordinates()) {
            if (!c.is_fibre()) continue;
            auto& row = table[std::make_pair(c.fibre_index(), c.sigma())];
            if (row.empty()) row.resize(static_cast<std::size_t>(cfg.m));
            row[static_cast<std::size_t>(j)] += comp.partial(c);
            s = std::max(s, c.sigma().order());
        }
    }
    auto lookup = [&](int i, const MultiIndex& sigma, int j) -> JetPoly {
        auto it = table.find(std::make_pair(i, sigma));
        if (it == table.end()) return JetPoly::zero();
        return it->second[static_cast<std::size_t>(j)];
    };
    Form out = Form::zero(cfg, cfg.n + 2);
    Form vol = Form::volume(cfg);
    Rational half(1, 2);
    for (int i = 0; i < cfg.m; ++i)
        for (int j = 0; j < cfg.m; ++j)
            for (const MultiIndex& sigma : enumerate_multiindices(cfg.n, s)) {
                JetPoly coeff = lookup(i, sigma, j);
                for (const MultiIndex& rho : enumerate_multiindices(cfg.n, s - sigma.order())) {
                    MultiIndex merged = union_of(sigma, rho);
                    JetPoly part = lookup(j, merged, i).total_derivative(rho);
                    part = choose(merged, rho) * part;
                    if (merged.order() % 2 == 1) part = -part;
                    coeff -= part;
                }
                if (coeff.is_zero()) continue;
                Form pair = wedge(Form::omega(cfg, i, sigma), Form::omega(cfg, j, MultiIndex(cfg.n)));
                out += wedge((half * coeff) * pair, vol);
            }
    return out;
}

Form e1(const Form& a) {
    const JetSpaceConfig& cfg = a.config();
    if (a.is_zero()) return Form::zero(cfg, a.degree() + 1);
    auto p = a.homogeneous_contact_degree();
    if (!p) throw std::invalid_argument("e1 needs a contact-degree-homogeneous form");
    if (a.degree() - *p != cfg.n) throw std::invalid_argument("e1 needs horizontal degree n");
    if (*p == 0) {
        JetPoly density = a.terms().begin()->second;  // single Vol word in bidegree (0, n)
        return euler_lagrange(Lagrangian(cfg, density)).to_form();
    }
    if (*p == 1) return helmholtz(source_representative(a)).canonical;
    throw std::invalid_argument("e1 representatives are provided for contact degree 0 and 1 only");
}

bool is_variationally_trivial(const Lagrangian& L) { return euler_lagrange(L).is_zero(); }

bool is_locally_variational(const SourceForm& eta) { return helmholtz(eta).is_zero(); }

Lagrangian tonti_lagrangian(const SourceForm& eta) {
    HelmholtzOperator h = helmholtz(eta);
    if (!h.is_zero()) throw NotVariationalError(std::move(h));
    JetPoly L;
    for (int i = 0; i < eta.cfg.m; ++i) {
        JetPoly ui = JetPoly::fibre_coord(i, MultiIndex(eta.cfg.n));
        L += ui * eta.components[static_cast<std::size_t>(i)].fibre_scaling_integral(0);
    }
    return Lagrangian(eta.cfg, std::move(L));
}

}  // namespace jetvar
