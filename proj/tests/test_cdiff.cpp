#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetvar/cdiff.hpp"
#include "jetvar/generators.hpp"

using namespace jetvar;

namespace {

const JetSpaceConfig k11(1, 1);

JetPoly X() { return JetPoly::base_coord(0); }
JetPoly U(std::vector<int> sigma = {0}) { return JetPoly::fibre_coord(0, MultiIndex(std::move(sigma))); }

CDiffOp Dx() { return CDiffOp::total_derivative(k11, 0); }
CDiffOp Id() { return CDiffOp::identity(k11, 1); }
CDiffOp Scal(const JetPoly& f) { return CDiffOp::scalar(k11, f); }

}  // namespace

TEST_CASE("apply in total-derivative normal form") {
    CHECK(Id().apply_scalar(U()) == U());
    CHECK(Dx().apply_scalar(U()) == U({1}));
    CDiffOp op = compose(Scal(U()), Dx()) + Scal(U({1}));  // u D_x + u_x
    CHECK(op.apply_scalar(U()) == Rational(2) * (U() * U({1})));
    CHECK_THROWS_AS(Dx().apply({U(), U()}), std::invalid_argument);
}

TEST_CASE("compose expands by the Leibniz rule") {
    // D_x . (u id) = u D_x + u_x id
    CDiffOp got = compose(Dx(), Scal(U()));
    CDiffOp expected = compose(Scal(U()), Dx()) + Scal(U({1}));
    CHECK(got == expected);
    // checked against application to a few witnesses
    for (const JetPoly& phi : {U(), U() * U(), X() * U()})
        CHECK(got.apply_scalar(phi) == (Scal(U()).apply_scalar(phi)).total_derivative(0));

    CHECK(compose(Id(), got) == got);
    CHECK(compose(Dx(), Dx()) == CDiffOp::total_derivative(k11, MultiIndex::of({2})));
}

TEST_CASE("compose agrees with sequential application on random operators") {
    gen::Rng rng(57);
    gen::Sizes sz;
    sz.max_order = 2;
    for (int rep = 0; rep < 100; ++rep) {
        JetSpaceConfig cfg(rng.uniform(1, 2), rng.uniform(1, 2));
        int a = rng.uniform(1, 2), b = rng.uniform(1, 2), c = rng.uniform(1, 2);
        CDiffOp d1 = gen::cdiff_op(rng, cfg, a, b, sz);
        CDiffOp d2 = gen::cdiff_op(rng, cfg, b, c, sz);
        std::vector<JetPoly> phi;
        for (int k = 0; k < c; ++k) phi.push_back(gen::jetpoly(rng, cfg, sz));
        CHECK(compose(d1, d2).apply(phi) == d1.apply(d2.apply(phi)));
    }
}

TEST_CASE("adjoint normal forms") {
    CHECK(adjoint(Dx()) == -Dx());
    CDiffOp f = Scal(X() * U({1}));
    CHECK(adjoint(f) == f);
    // (u D_x)* = -u D_x - u_x id
    CDiffOp got = adjoint(compose(Scal(U()), Dx()));
    CDiffOp expected = -(compose(Scal(U()), Dx())) - Scal(U({1}));
    CHECK(got == expected);
}

TEST_CASE("adjoint is an involution and an antihomomorphism") {
    gen::Rng rng(61);
    gen::Sizes sz;
    sz.max_order = 3;
    for (int rep = 0; rep < 100; ++rep) {
        JetSpaceConfig cfg(rng.uniform(1, 2), rng.uniform(1, 2));
        int a = rng.uniform(1, 2), b = rng.uniform(1, 2), c = rng.uniform(1, 2);
        CDiffOp d1 = gen::cdiff_op(rng, cfg, a, b, sz);
        CDiffOp d2 = gen::cdiff_op(rng, cfg, b, c, sz);
        CHECK(adjoint(adjoint(d1)) == d1);
        CHECK(adjoint(compose(d1, d2)) == compose(adjoint(d2), adjoint(d1)));
    }
}

TEST_CASE("green remainder is a certified divergence") {
    GreenRemainder g = green_remainder(Dx(), {U()}, {U()});
    CHECK(g.remainder == Rational(2) * (U() * U({1})));
    CHECK(g.certified());
    REQUIRE(g.primitive.has_value());
    CHECK(*g.primitive == U() * U());

    GreenRemainder zero = green_remainder(Scal(X() * U()), {U({1})}, {U()});
    CHECK(zero.remainder.is_zero());
    CHECK(zero.certified());
}

TEST_CASE("green remainder on random operators") {
    gen::Rng rng(67);
    gen::Sizes sz;
    sz.max_order = 2;
    for (int rep = 0; rep < 60; ++rep) {
        JetSpaceConfig cfg(rng.uniform(1, 2), rng.uniform(1, 2));
        int a = rng.uniform(1, 2), b = rng.uniform(1, 2);
        CDiffOp op = gen::cdiff_op(rng, cfg, a, b, sz);
        std::vector<JetPoly> p, q;
        for (int k = 0; k < b; ++k) p.push_back(gen::jetpoly(rng, cfg, sz));
        for (int k = 0; k < a; ++k) q.push_back(gen::jetpoly(rng, cfg, sz));
        GreenRemainder g = green_remainder(op, p, q);
        CHECK(g.certified());
        if (cfg.n == 1) {
            REQUIRE(g.primitive.has_value());
            CHECK(g.primitive->total_derivative(0) == g.remainder);
        }
    }
}

TEST_CASE("divergence primitive rejects non-divergences") {
    CHECK(!divergence_primitive_1d(k11, U()).has_value());
    CHECK(!divergence_primitive_1d(k11, U({1}) * U({1})).has_value());
    CHECK(divergence_primitive_1d(k11, U({1})).value() == U());
}

TEST_CASE("linearization normal forms") {
    CHECK(linearization(k11, {U({2})}) == CDiffOp::total_derivative(k11, MultiIndex::of({2})));
    CHECK(linearization(k11, {U() * U()}) == Scal(Rational(2) * U()));
    CDiffOp expected = Scal(U({1})) + compose(Scal(U()), Dx());
    CHECK(linearization(k11, {U() * U({1})}) == expected);
}

TEST_CASE("linearization applies evolutionary fields and is a derivation") {
    gen::Rng rng(71);
    gen::Sizes sz;
    for (int rep = 0; rep < 60; ++rep) {
        JetSpaceConfig cfg(rng.uniform(1, 2), rng.uniform(1, 2));
        JetPoly f = gen::jetpoly(rng, cfg, sz), g = gen::jetpoly(rng, cfg, sz);
        EvolutionaryField phi = gen::evolutionary_field(rng, cfg, sz);
        // l_F(phi) = Evo_phi(F)
        CHECK(linearization(cfg, {f}).apply(phi.components)[0] == phi.apply(f));
        // l_{FG} = F l_G + G l_F, compared through application
        JetPoly lhs = linearization(cfg, {f * g}).apply(phi.components)[0];
        JetPoly rhs = f * linearization(cfg, {g}).apply(phi.components)[0] +
                      g * linearization(cfg, {f}).apply(phi.components)[0];
        CHECK(lhs == rhs);
    }
}

TEST_CASE("evolutionary insertion") {
    EvolutionaryField phi(k11, {X() * U()});
    CHECK(evo_insert(phi, Form::omega(k11, 0, MultiIndex(1))) == Form::function(k11, X() * U()));
    CHECK(evo_insert(phi, Form::dx(k11, 0)).is_zero());
    // evo(phi, omega_x ^ dx) = D_x phi dx
    Form a = wedge(Form::omega(k11, 0, MultiIndex::of({1})), Form::dx(k11, 0));
    CHECK(evo_insert(phi, a) == (X() * U()).total_derivative(0) * Form::dx(k11, 0));
    CHECK_THROWS_AS(evo_insert(phi, Form::function(k11, U())), std::invalid_argument);
}

TEST_CASE("insertion is an anti-derivation of the wedge") {
    gen::Rng rng(73);
    gen::Sizes sz;
    sz.max_order = 2;
    for (int rep = 0; rep < 60; ++rep) {
        JetSpaceConfig cfg(rng.uniform(1, 2), rng.uniform(1, 2));
        EvolutionaryField phi = gen::evolutionary_field(rng, cfg, sz);
        int ka = rng.uniform(1, 2), kb = rng.uniform(1, 2);
        Form a = gen::form(rng, cfg, ka, sz), b = gen::form(rng, cfg, kb, sz);
        if (a.is_zero() || b.is_zero()) continue;
        Form lhs = evo_insert(phi, wedge(a, b));
        Form rhs = wedge(evo_insert(phi, a), b);
        Form sign_part = wedge(a, evo_insert(phi, b));
        if (ka % 2 == 1) sign_part = -sign_part;
        rhs += sign_part;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("form_to_operator at p = 1 contracts to the source pairing") {
    gen::Rng rng(79);
    gen::Sizes sz;
    for (int rep = 0; rep < 30; ++rep) {
        JetSpaceConfig cfg(rng.uniform(1, 2), rng.uniform(1, 2));
        std::vector<JetPoly> eta;
        for (int i = 0; i < cfg.m; ++i) eta.push_back(gen::jetpoly(rng, cfg, sz));
        Form a = Form::zero(cfg, cfg.n + 1);
        for (int i = 0; i < cfg.m; ++i)
            a += wedge(eta[static_cast<std::size_t>(i)] * Form::omega(cfg, i, MultiIndex(cfg.n)),
                       Form::volume(cfg));
        FormOperator nabla(a);
        CHECK(nabla.arity() == 1);
        EvolutionaryField phi = gen::evolutionary_field(rng, cfg, sz);
        JetPoly pairing;
        for (int i = 0; i < cfg.m; ++i)
            pairing += eta[static_cast<std::size_t>(i)] * phi.components[static_cast<std::size_t>(i)];
        CHECK(nabla({phi}) == pairing * Form::volume(cfg));
    }
}

TEST_CASE("p = 2 operators are antisymmetric and round-trip through the form") {
    gen::Rng rng(83);
    gen::Sizes sz;
    sz.max_order = 2;
    int cases = 0;
    while (cases < 50) {
        JetSpaceConfig cfg(rng.uniform(1, 2), rng.uniform(1, 2));
        Form a = gen::contact_form(rng, cfg, cfg.n + 2, 2, sz, true);
        if (a.is_zero()) continue;
        ++cases;
        FormOperator nabla(a);
        CHECK(nabla.arity() == 2);
        EvolutionaryField phi = gen::evolutionary_field(rng, cfg, sz);
        EvolutionaryField psi = gen::evolutionary_field(rng, cfg, sz);
        CHECK(nabla({phi, psi}) == -nabla({psi, phi}));
        CHECK(FormOperator(nabla.to_form()).to_form() == a);  // structural inverse
    }
    CHECK_THROWS_AS(FormOperator(Form::dx(k11, 0) + Form::omega(k11, 0, MultiIndex(1))),
                    std::invalid_argument);
}

TEST_CASE("euler defect vanishes exactly on total derivatives") {
    gen::Rng rng(89);
    gen::Sizes sz;
    for (int rep = 0; rep < 40; ++rep) {
        JetSpaceConfig cfg(rng.uniform(1, 2), rng.uniform(1, 2));
        JetPoly f = gen::jetpoly(rng, cfg, sz);
        for (const JetPoly& e : euler_defect(cfg, f.total_derivative(rng.uniform(0, cfg.n - 1))))
            CHECK(e.is_zero());
    }
}
