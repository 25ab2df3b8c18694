#include "jetvar/selftest.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <string>
#include <vector>

#include "jetvar/generators.hpp"
#include "jetvar/parser.hpp"
#include "jetvar/textio.hpp"

namespace jetvar {

namespace {

using gen::Rng;
using gen::Sizes;

JetSpaceConfig pick_cfg(Rng& rng) { return JetSpaceConfig(rng.uniform(1, 2), rng.uniform(1, 2)); }

bool suite_calculus_core(Rng& rng, int cases, int max_order) {
    Sizes sz;
    sz.max_order = std::min(sz.max_order, max_order);
    for (int k = 0; k < cases; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        JetPoly f = gen::jetpoly(rng, cfg, sz), g = gen::jetpoly(rng, cfg, sz);
        int l1 = rng.uniform(0, cfg.n - 1), l2 = rng.uniform(0, cfg.n - 1);
        if (f.total_derivative(l1).total_derivative(l2) != f.total_derivative(l2).total_derivative(l1))
            return false;
        if ((f * g).total_derivative(l1) != f.total_derivative(l1) * g + g.total_derivative(l1) * f)
            return false;
        Form a = gen::form(rng, cfg, rng.uniform(1, 3), sz);
        if (!d(d(a)).is_zero()) return false;
    }
    return true;
}

bool suite_splitting(Rng& rng, int cases, int max_order) {
    Sizes sz;
    sz.max_order = std::min(sz.max_order, max_order);
    for (int k = 0; k < cases; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        int deg = rng.uniform(0, 3);
        Form a = gen::form(rng, cfg, deg, sz);
        Form sum = Form::zero(cfg, deg);
        for (int c = 0; c <= deg; ++c) {
            Form piece = project(a, c, deg - c);
            if (project(piece, c, deg - c) != piece) return false;
            for (int c2 = 0; c2 <= deg; ++c2)
                if (c2 != c && !project(piece, c2, deg - c2).is_zero()) return false;
            sum += piece;
        }
        if (sum != a) return false;
        if (deg <= cfg.n) {
            bool hz = horizontalize(a).is_zero();
            if (hz != is_p_contact(a, 1)) return false;
        }
        if (deg > cfg.n && !horizontalize(a).is_zero()) return false;
    }
    return true;
}

bool suite_section_pullback(Rng& rng, int cases, int max_order) {
    Sizes sz;
    sz.max_order = std::min(sz.max_order, max_order);
    for (int k = 0; k < cases; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        Form beta = gen::form(rng, cfg, rng.uniform(0, cfg.n), sz);
        PolySection s = gen::section(rng, cfg, sz);
        if (pullback_by_section(beta, s) != pullback_by_section(horizontalize(beta), s)) return false;
        if (!pullback_by_section(vertical(beta), s).is_zero()) return false;
    }
    return true;
}

bool suite_contact_exactness(Rng& rng, int cases, int max_order) {
    Sizes sz;
    sz.max_order = 1;
    sz.max_order = std::min(sz.max_order, max_order);
    int done = 0;
    while (done < cases) {
        int p = 1 + done % 2;
        JetSpaceConfig cfg(2, 1 + (done / 2) % 2);
        Form gamma = gen::contact_form(rng, cfg, p, p, sz, true);
        Form alpha = d(gamma);
        if (alpha.is_zero() || !is_p_contact(alpha, p)) continue;
        ++done;
        if (d(contact_primitive(alpha)) != alpha) return false;
        Form beta = gen::contact_form(rng, cfg, rng.uniform(p, p + cfg.n - 1), p, sz);
        if (beta.is_zero()) continue;
        if (contact_homotopy(d(beta)) + d(contact_homotopy(beta)) != beta) return false;
    }
    return true;
}

bool suite_variational_complex(Rng& rng, int cases, int max_order) {
    Sizes sz;
    sz.max_order = 2;
    sz.max_order = std::min(sz.max_order, max_order);
    for (int k = 0; k < cases; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        Lagrangian L(cfg, gen::jetpoly(rng, cfg, sz));
        SourceForm eta = euler_lagrange(L);
        if (!helmholtz(eta).is_zero()) return false;
        JetPoly div;
        for (int l = 0; l < cfg.n; ++l) div += gen::jetpoly(rng, cfg, sz).total_derivative(l);
        if (!euler_lagrange(Lagrangian(cfg, div)).is_zero()) return false;
        if (euler_lagrange(tonti_lagrangian(eta)) != eta) return false;
    }
    return true;
}

bool suite_adjoint_calculus(Rng& rng, int cases, int max_order) {
    Sizes sz;
    sz.max_order = 2;
    sz.max_order = std::min(sz.max_order, max_order);
    for (int k = 0; k < cases; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        int a = rng.uniform(1, 2), b = rng.uniform(1, 2), c = rng.uniform(1, 2);
        CDiffOp d1 = gen::cdiff_op(rng, cfg, a, b, sz), d2 = gen::cdiff_op(rng, cfg, b, c, sz);
        if (adjoint(adjoint(d1)) != d1) return false;
        if (adjoint(compose(d1, d2)) != compose(adjoint(d2), adjoint(d1))) return false;
        std::vector<JetPoly> p, q;
        for (int t = 0; t < b; ++t) p.push_back(gen::jetpoly(rng, cfg, sz));
        for (int t = 0; t < a; ++t) q.push_back(gen::jetpoly(rng, cfg, sz));
        if (!green_remainder(d1, p, q).certified()) return false;
    }
    return true;
}

bool suite_helmholtz_cross_validation(Rng& rng, int cases, int max_order) {
    Sizes sz;
    sz.max_order = 3;
    sz.max_order = std::min(sz.max_order, max_order);
    for (int k = 0; k < cases; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        SourceForm eta = gen::source_form(rng, cfg, sz);
        HelmholtzOperator h = helmholtz(eta);
        if (h.canonical != helmholtz_literal(eta)) return false;
        if (adjoint(h.op) != -h.op) return false;
    }
    return true;
}

bool suite_representative_invariance(Rng& rng, int cases, int max_order) {
    Sizes sz;
    sz.max_order = 2;
    sz.max_order = std::min(sz.max_order, max_order);
    int done = 0;
    while (done < cases) {
        JetSpaceConfig cfg(2, 1 + done % 2);
        Form alpha = gen::contact_form(rng, cfg, cfg.n + 1, 1, sz, true);
        Form beta = gen::contact_form(rng, cfg, cfg.n, 1, sz, true);
        if (alpha.is_zero() || beta.is_zero()) continue;
        ++done;
        if (source_representative(alpha + dbar(beta)) != source_representative(alpha)) return false;
    }
    return true;
}

bool suite_parse_render_roundtrip(Rng& rng, int cases, int max_order) {
    Sizes sz;
    sz.max_order = std::min(sz.max_order, max_order);
    for (int k = 0; k < cases; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        JetPoly p = gen::jetpoly(rng, cfg, sz);
        if (parse_poly(render_poly(p, cfg), cfg) != p) return false;
        Form a = gen::form(rng, cfg, rng.uniform(0, 3), sz);
        if (parse_form(render_form(a), cfg) != a) return false;
    }
    return true;
}

}  // namespace

bool run_selftest(const SelftestOptions& opts, std::ostream& out) {
    struct Suite {
        const char* name;
        std::function<bool(Rng&, int, int)> fn;
    };
    const std::vector<Suite> suites = {
        {"calculus-core", suite_calculus_core},
        {"splitting", suite_splitting},
        {"section-pullback", suite_section_pullback},
        {"contact-exactness", suite_contact_exactness},
        {"variational-complex", suite_variational_complex},
        {"adjoint-calculus", suite_adjoint_calculus},
        {"helmholtz-cross-validation", suite_helmholtz_cross_validation},
        {"representative-invariance", suite_representative_invariance},
        {"parse-render-roundtrip", suite_parse_render_roundtrip},
    };
    int failed = 0;
    std::uint64_t salt = 0;
    for (const Suite& s : suites) {
        Rng rng(opts.seed * 1000003 + salt++);
        bool ok = s.fn(rng, opts.cases, std::max(opts.max_order, 1));
        out << (ok ? "PASS" : "FAIL") << "  " << s.name << " (" << opts.cases << " cases)\n";
        if (!ok) ++failed;
    }
    out << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed") << "\n";
    return failed == 0;
}

}  // namespace jetvar
