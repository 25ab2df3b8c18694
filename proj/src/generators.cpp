#include "jetvar/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetvar::gen {

int Rng::uniform(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    // Modulo sampling: slightly biased, fully deterministic across platforms.
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
}

Rational rational(Rng& rng, const Sizes& sz) {
    int num = rng.uniform(-sz.coeff_bound, sz.coeff_bound);
    int den = rng.uniform(1, sz.coeff_bound);
    return make_rational(num, den);
}

Rational nonzero_rational(Rng& rng, const Sizes& sz) {
    Rational q = rational(rng, sz);
    return q == 0 ? Rational(1) : q;
}

MultiIndex multiindex(Rng& rng, int n, int max_order) {
    MultiIndex sigma(n);
    int ord = rng.uniform(0, max_order);
    for (int k = 0; k < ord; ++k) sigma = sigma.raised(rng.uniform(0, n - 1));
    return sigma;
}

JetPoly jetpoly(Rng& rng, const JetSpaceConfig& cfg, const Sizes& sz) {
    JetPoly p;
    int terms = rng.uniform(1, sz.max_terms);
    for (int t = 0; t < terms; ++t) {
        JetPoly mono = JetPoly::constant(nonzero_rational(rng, sz));
        int deg = rng.uniform(0, sz.max_degree);
        for (int k = 0; k < deg; ++k) {
            JetCoord c = rng.flip() ? JetCoord::base(rng.uniform(0, cfg.n - 1))
                                    : JetCoord::fibre(rng.uniform(0, cfg.m - 1),
                                                      multiindex(rng, cfg.n, sz.max_order));
            mono = mono * JetPoly::coord(c);
        }
        p += mono;
    }
    return p;
}

JetPoly base_poly(Rng& rng, const JetSpaceConfig& cfg, const Sizes& sz) {
    JetPoly p;
    int terms = rng.uniform(1, sz.max_terms);
    for (int t = 0; t < terms; ++t) {
        JetPoly mono = JetPoly::constant(nonzero_rational(rng, sz));
        int deg = rng.uniform(0, sz.max_degree);
        for (int k = 0; k < deg; ++k) mono = mono * JetPoly::base_coord(rng.uniform(0, cfg.n - 1));
        p += mono;
    }
    return p;
}

PolySection section(Rng& rng, const JetSpaceConfig& cfg, const Sizes& sz) {
    std::vector<JetPoly> comps;
    for (int i = 0; i < cfg.m; ++i) comps.push_back(base_poly(rng, cfg, sz));
    return PolySection(cfg, std::move(comps));
}

namespace {

WedgeWord random_word(Rng& rng, const JetSpaceConfig& cfg, int degree, int min_contact, const Sizes& sz,
                      bool exact_contact) {
    int max_contact = degree;
    int contact = exact_contact ? min_contact : rng.uniform(std::min(min_contact, max_contact), max_contact);
    contact = std::min(contact, degree);
    int horizontal = degree - contact;
    // Distinct omegas by rejection; the covector space is comfortably larger
    // than the word at desk scale.
    WedgeWord w;
    if (horizontal > cfg.n) return {};  // impossible word
    std::vector<int> lambdas(static_cast<std::size_t>(cfg.n));
    for (int l = 0; l < cfg.n; ++l) lambdas[static_cast<std::size_t>(l)] = l;
    for (int k = 0; k < horizontal; ++k) {
        int pick = rng.uniform(k, cfg.n - 1);
        std::swap(lambdas[static_cast<std::size_t>(k)], lambdas[static_cast<std::size_t>(pick)]);
        w.push_back(BasisCovector::dx(lambdas[static_cast<std::size_t>(k)]));
    }
    for (int attempts = 0; contact > 0 && attempts < 200; ++attempts) {
        BasisCovector om =
            BasisCovector::omega(rng.uniform(0, cfg.m - 1), multiindex(rng, cfg.n, sz.max_order));
        if (std::find(w.begin(), w.end(), om) == w.end()) {
            w.push_back(om);
            --contact;
        }
    }
    if (contact > 0) return {};
    std::sort(w.begin(), w.end());
    return w;
}

}  // namespace

Form form(Rng& rng, const JetSpaceConfig& cfg, int degree, const Sizes& sz) {
    return contact_form(rng, cfg, degree, 0, sz, false);
}

Form contact_form(Rng& rng, const JetSpaceConfig& cfg, int degree, int p, const Sizes& sz, bool exact) {
    Form out = Form::zero(cfg, degree);
    int terms = rng.uniform(1, sz.max_terms);
    for (int t = 0; t < terms; ++t) {
        WedgeWord w = random_word(rng, cfg, degree, p, sz, exact);
        if (static_cast<int>(w.size()) != degree) continue;
        out.add_term(w, jetpoly(rng, cfg, sz));
    }
    return out;
}

CDiffOp cdiff_op(Rng& rng, const JetSpaceConfig& cfg, int rows, int cols, const Sizes& sz) {
    CDiffOp op(cfg, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int parts = rng.uniform(1, 2);
            for (int k = 0; k < parts; ++k)
                op.add_to_entry(r, c, multiindex(rng, cfg.n, sz.max_order), jetpoly(rng, cfg, sz));
        }
    return op;
}

EvolutionaryField evolutionary_field(Rng& rng, const JetSpaceConfig& cfg, const Sizes& sz) {
    std::vector<JetPoly> comps;
    for (int i = 0; i < cfg.m; ++i) comps.push_back(jetpoly(rng, cfg, sz));
    return EvolutionaryField(cfg, std::move(comps));
}

SourceForm source_form(Rng& rng, const JetSpaceConfig& cfg, const Sizes& sz) {
    std::vector<JetPoly> comps;
    for (int i = 0; i < cfg.m; ++i) comps.push_back(jetpoly(rng, cfg, sz));
    return SourceForm(cfg, std::move(comps));
}

}  // namespace jetvar::gen
