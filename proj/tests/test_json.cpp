#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetvar/generators.hpp"
#include "jetvar/json_io.hpp"

using namespace jetvar;

namespace {
const JetSpaceConfig k21(2, 1);
}

TEST_CASE("multi-index wire format is an array of counts") {
    CHECK(to_json(MultiIndex::of({2, 0})) == "[2,0]");
    CHECK(multiindex_from_json("[2,0]") == MultiIndex::of({2, 0}));
}

TEST_CASE("jetpoly wire format") {
    JetPoly p = Rational(1, 2) * (JetPoly::fibre_coord(0, MultiIndex::of({2, 0})) * JetPoly::base_coord(0));
    std::string j = to_json(p);
    CHECK(j == R"({"terms":[{"coeff":"1/2","monomial":[["x",1,1],["u",1,[2,0],1]]}]})");
    CHECK(poly_from_json(j) == p);
}

TEST_CASE("form wire format carries covectors and coefficients") {
    Form a = wedge(JetPoly::fibre_coord(0, MultiIndex(2)) * Form::dx(k21, 0),
                   Form::omega(k21, 0, MultiIndex::of({2, 0})));
    std::string j = to_json(a);
    CHECK(j.find(R"(["dx",1])") != std::string::npos);
    CHECK(j.find(R"(["om",[1,[2,0]]])") != std::string::npos);
    CHECK(form_from_json(j, k21) == a);
}

TEST_CASE("serialization round-trips on random values") {
    gen::Rng rng(211);
    gen::Sizes sz;
    for (int rep = 0; rep < 100; ++rep) {
        JetSpaceConfig cfg(rng.uniform(1, 2), rng.uniform(1, 2));
        JetPoly p = gen::jetpoly(rng, cfg, sz);
        CHECK(poly_from_json(to_json(p)) == p);
        Form a = gen::form(rng, cfg, rng.uniform(0, 3), sz);
        CHECK(form_from_json(to_json(a), cfg) == a);
        CDiffOp op = gen::cdiff_op(rng, cfg, rng.uniform(1, 2), rng.uniform(1, 2), sz);
        CHECK(op_from_json(to_json(op), cfg) == op);
        SourceForm eta = gen::source_form(rng, cfg, sz);
        CHECK(source_from_json(to_json(eta), cfg) == eta);
    }
}

TEST_CASE("config mismatch is rejected") {
    Form a = Form::dx(k21, 0);
    CHECK_THROWS_AS(form_from_json(to_json(a), JetSpaceConfig(1, 1)), std::invalid_argument);
}
