// Acceptance suite: every release criterion at desk scale (n <= 2, m <= 2,
// jet order <= 3, polynomial degree <= 3), all equalities exact over Q.
// Prints one PASS/FAIL line per criterion; exit code is the failure count.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jetvar/cli.hpp"
#include "jetvar/generators.hpp"
#include "jetvar/parser.hpp"
#include "jetvar/selftest.hpp"
#include "jetvar/textio.hpp"

using namespace jetvar;
using gen::Rng;
using gen::Sizes;

namespace {

constexpr std::uint64_t kSeed = 20260810;

struct Failure {
    std::string detail;
};

using Check = std::function<bool(std::string&)>;

JetSpaceConfig pick_cfg(Rng& rng) { return JetSpaceConfig(rng.uniform(1, 2), rng.uniform(1, 2)); }

bool criterion_calculus_core(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    Rng rng(kSeed + 1);
    Sizes sz;
    sz.max_order = 3;
    for (int k = 0; k < 200; ++k) {  // d^2 = 0
        JetSpaceConfig cfg = pick_cfg(rng);
        Form a = gen::form(rng, cfg, rng.uniform(0, 3), sz);
        if (!d(d(a)).is_zero()) {
            detail = "d^2 != 0 on " + render_form(a);
            return false;
        }
    }
    for (int k = 0; k < 200; ++k) {  // total derivatives commute
        JetSpaceConfig cfg = pick_cfg(rng);
        JetPoly f = gen::jetpoly(rng, cfg, sz);
        int l1 = rng.uniform(0, cfg.n - 1), l2 = rng.uniform(0, cfg.n - 1);
        if (f.total_derivative(l1).total_derivative(l2) != f.total_derivative(l2).total_derivative(l1)) {
            detail = "commutator failure on " + render_poly(f, cfg);
            return false;
        }
    }
    for (int k = 0; k < 200; ++k) {  // derivation laws
        JetSpaceConfig cfg = pick_cfg(rng);
        JetPoly f = gen::jetpoly(rng, cfg, sz), g = gen::jetpoly(rng, cfg, sz);
        int l = rng.uniform(0, cfg.n - 1);
        if ((f * g).total_derivative(l) != f.total_derivative(l) * g + g.total_derivative(l) * f) {
            detail = "Leibniz failure for D";
            return false;
        }
        auto coords = f.coordinates();
        if (!coords.empty()) {
            const JetCoord& c = coords[0];
            if ((f * g).partial(c) != f.partial(c) * g + g.partial(c) * f) {
                detail = "Leibniz failure for partials";
                return false;
            }
        }
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0) {
        detail = "runtime " + std::to_string(secs) + "s exceeds 60s";
        return false;
    }
    return true;
}

bool criterion_splitting(std::string& detail) {
    Rng rng(kSeed + 2);
    Sizes sz;
    for (int k = 0; k < 200; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        int deg = rng.uniform(0, 3);
        Form a = gen::form(rng, cfg, deg, sz);
        Form sum = Form::zero(cfg, deg);
        for (int c = 0; c <= deg; ++c) {
            Form piece = project(a, c, deg - c);
            if (project(piece, c, deg - c) != piece) {
                detail = "projection not idempotent";
                return false;
            }
            for (int c2 = 0; c2 <= deg; ++c2)
                if (c2 != c && !project(piece, c2, deg - c2).is_zero()) {
                    detail = "projections not orthogonal";
                    return false;
                }
            sum += piece;
        }
        if (sum != a) {
            detail = "projections do not sum to the identity";
            return false;
        }
        if (deg <= cfg.n && horizontalize(a).is_zero() != is_p_contact(a, 1)) {
            detail = "ker h != C^1 Lambda^k at degree " + std::to_string(deg);
            return false;
        }
        if (deg > cfg.n && !horizontalize(a).is_zero()) {
            detail = "h != 0 above degree n";
            return false;
        }
    }
    return true;
}

bool criterion_section_pullback(std::string& detail) {
    Rng rng(kSeed + 3);
    Sizes sz;
    for (int k = 0; k < 100; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        Form beta = gen::form(rng, cfg, rng.uniform(0, cfg.n), sz);
        PolySection s = gen::section(rng, cfg, sz);
        if (pullback_by_section(beta, s) != pullback_by_section(horizontalize(beta), s)) {
            detail = "(j_r s)* beta != (j_{r+1} s)* h(beta)";
            return false;
        }
        if (!pullback_by_section(vertical(beta), s).is_zero()) {
            detail = "(j_{r+1} s)* v(beta) != 0";
            return false;
        }
    }
    return true;
}

bool criterion_contact_exactness(std::string& detail) {
    Rng rng(kSeed + 4);
    Sizes sz;
    sz.max_order = 1;
    int exact_cases = 0;
    while (exact_cases < 100) {
        // k <= p + n - 1 has room only for n = 2 at desk scale: k = p + 1.
        int p = 1 + exact_cases % 2;
        JetSpaceConfig cfg(2, 1 + (exact_cases / 2) % 2);
        Form gamma = gen::contact_form(rng, cfg, p, p, sz, true);
        Form alpha = d(gamma);
        if (alpha.is_zero() || !is_p_contact(alpha, p)) continue;
        ++exact_cases;
        Form prim = contact_primitive(alpha);
        if (d(prim) != alpha) {
            detail = "homotopy primitive fails to integrate d gamma";
            return false;
        }
    }
    int id_cases = 0;
    while (id_cases < 100) {
        JetSpaceConfig cfg(1 + id_cases % 2, 1 + (id_cases / 3) % 2);
        int p = 1 + id_cases % 2;
        int degree = rng.uniform(p, p + cfg.n - 1);
        Form a = gen::contact_form(rng, cfg, degree, p, sz);
        if (a.is_zero()) continue;
        ++id_cases;
        if (contact_homotopy(d(a)) + d(contact_homotopy(a)) != a) {
            detail = "identity a = A da + d Aa fails on " + render_form(a);
            return false;
        }
    }
    return true;
}

bool criterion_variational_complex(std::string& detail) {
    Rng rng(kSeed + 5);
    Sizes sz;
    sz.max_order = 2;
    for (int k = 0; k < 100; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        SourceForm eta = euler_lagrange(Lagrangian(cfg, gen::jetpoly(rng, cfg, sz)));
        if (!helmholtz(eta).is_zero()) {
            detail = "helmholtz(euler_lagrange) != 0";
            return false;
        }
    }
    for (int k = 0; k < 100; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        JetPoly div;
        for (int l = 0; l < cfg.n; ++l) div += gen::jetpoly(rng, cfg, sz).total_derivative(l);
        if (!euler_lagrange(Lagrangian(cfg, div)).is_zero()) {
            detail = "euler_lagrange(total divergence) != 0";
            return false;
        }
    }
    for (int k = 0; k < 50; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        SourceForm eta = euler_lagrange(Lagrangian(cfg, gen::jetpoly(rng, cfg, sz)));
        if (euler_lagrange(tonti_lagrangian(eta)) != eta) {
            detail = "tonti round-trip failure";
            return false;
        }
    }
    return true;
}

bool criterion_adjoint_calculus(std::string& detail) {
    Rng rng(kSeed + 6);
    Sizes sz;
    sz.max_order = 2;
    for (int k = 0; k < 100; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        int a = rng.uniform(1, 2), b = rng.uniform(1, 2), c = rng.uniform(1, 2);
        CDiffOp d1 = gen::cdiff_op(rng, cfg, a, b, sz), d2 = gen::cdiff_op(rng, cfg, b, c, sz);
        if (adjoint(adjoint(d1)) != d1) {
            detail = "(Delta*)* != Delta";
            return false;
        }
        if (adjoint(compose(d1, d2)) != compose(adjoint(d2), adjoint(d1))) {
            detail = "(D1 D2)* != D2* D1*";
            return false;
        }
    }
    for (int k = 0; k < 100; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        int a = rng.uniform(1, 2), b = rng.uniform(1, 2);
        CDiffOp op = gen::cdiff_op(rng, cfg, a, b, sz);
        std::vector<JetPoly> p, q;
        for (int t = 0; t < b; ++t) p.push_back(gen::jetpoly(rng, cfg, sz));
        for (int t = 0; t < a; ++t) q.push_back(gen::jetpoly(rng, cfg, sz));
        if (!green_remainder(op, p, q).certified()) {
            detail = "Green remainder has a nonzero variational derivative";
            return false;
        }
    }
    return true;
}

bool criterion_helmholtz_cross_validation(std::string& detail) {
    Rng rng(kSeed + 7);
    Sizes sz;
    sz.max_order = 3;
    for (int k = 0; k < 100; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        SourceForm eta = gen::source_form(rng, cfg, sz);
        HelmholtzOperator h = helmholtz(eta);
        if (h.canonical != helmholtz_literal(eta)) {
            detail = "operator route != literal coefficient formula on " + render_source(eta);
            return false;
        }
        if (adjoint(h.op) != -h.op) {
            detail = "p = 2 representative is not skew-adjoint";
            return false;
        }
    }
    return true;
}

bool criterion_representative_invariance(std::string& detail) {
    Rng rng(kSeed + 8);
    Sizes sz;
    sz.max_order = 2;
    int done = 0;
    while (done < 50) {
        JetSpaceConfig cfg(2, 1 + done % 2);
        Form alpha = gen::contact_form(rng, cfg, cfg.n + 1, 1, sz, true);
        Form beta = gen::contact_form(rng, cfg, cfg.n, 1, sz, true);
        if (alpha.is_zero() || beta.is_zero()) continue;
        ++done;
        if (source_representative(alpha + dbar(beta)) != source_representative(alpha)) {
            detail = "source representative is not dbar-invariant";
            return false;
        }
    }
    return true;
}

std::string sh(const std::string& cmd, int& exit_code) {
    std::array<char, 256> buf{};
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

bool criterion_cli(std::string& detail) {
    const std::string cli = JETVAR_CLI_PATH;
    int code = 0;
    if (sh(cli + " el --n 1 --m 1 \"1/2*u[x]^2\"", code) != "-u[xx]\n" || code != 0) {
        detail = "golden euler-lagrange example failed";
        return false;
    }
    if (sh(cli + " hlm --n 1 --m 1 \"u*u[x]\"", code) != "1/2*u[x] + u*Dx\n" || code != 0) {
        detail = "golden helmholtz example failed";
        return false;
    }
    if (sh(cli + " tonti --n 1 --m 1 -- \"-u[xx]\"", code) != "-1/2*u*u[xx]\n" || code != 0) {
        detail = "golden tonti example failed";
        return false;
    }
    Rng rng(kSeed + 9);
    Sizes sz;
    for (int k = 0; k < 200; ++k) {
        JetSpaceConfig cfg = pick_cfg(rng);
        JetPoly p = gen::jetpoly(rng, cfg, sz);
        if (parse_poly(render_poly(p, cfg), cfg) != p) {
            detail = "render/parse mismatch on " + render_poly(p, cfg);
            return false;
        }
        Form a = gen::form(rng, cfg, rng.uniform(0, 3), sz);
        if (parse_form(render_form(a), cfg) != a) {
            detail = "render/parse mismatch on " + render_form(a);
            return false;
        }
    }
    std::string run1 = sh(cli + " selftest --seed 11 --cases 5", code);
    int code2 = 0;
    std::string run2 = sh(cli + " selftest --seed 11 --cases 5", code2);
    if (run1 != run2 || code != 0 || code2 != 0) {
        detail = "selftest output is not byte-deterministic under a fixed seed";
        return false;
    }
    std::ostringstream job_out1, job_out2;
    {
        SelftestOptions opts;
        opts.seed = 11;
        opts.cases = 5;
        run_selftest(opts, job_out1);
        run_selftest(opts, job_out2);
    }
    if (job_out1.str() != job_out2.str()) {
        detail = "library selftest output is not deterministic";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        Check check;
    };
    const std::vector<Criterion> criteria = {
        {"1 calculus core: d^2 = 0, commuting total derivatives, derivation laws (200 cases each)",
         criterion_calculus_core},
        {"2 splitting: projections idempotent/orthogonal/complete, ker h = C^1, h = 0 above n (200 forms)",
         criterion_splitting},
        {"3 section pullback: (j_r s)*beta = (j_{r+1}s)*h(beta), v(beta) pulls back to 0 (100 pairs)",
         criterion_section_pullback},
        {"4 contact exactness: homotopy primitives for d-exact contact forms, a = A da + d Aa (100 + 100)",
         criterion_contact_exactness},
        {"5 variational complex: HLM o EL = 0 (100), EL kills divergences (100), tonti round-trip (50)",
         criterion_variational_complex},
        {"6 adjoint calculus: involution and antihomomorphism (100), certified Green remainders (100)",
         criterion_adjoint_calculus},
        {"7 helmholtz cross-validation: (1/2)(l - l*) equals the literal formula, skew-adjointness (100)",
         criterion_helmholtz_cross_validation},
        {"8 representative well-definedness under dbar shifts (50)", criterion_representative_invariance},
        {"9 CLI: golden examples, render/parse round-trip (200), deterministic seeded output",
         criterion_cli},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "[PASS] criterion " : "[FAIL] criterion ") << c.name;
        if (!ok && !detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
        if (!ok) ++failed;
    }
    std::cout << (failed == 0 ? "acceptance: all criteria passed" : "acceptance: FAILURES") << "\n";
    return failed;
}
