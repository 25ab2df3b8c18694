#include "jetvar/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace jetvar {

using nlohmann::json;

namespace {

json sigma_json(const MultiIndex& sigma) { return json(sigma.counts()); }

MultiIndex sigma_of(const json& j) { return MultiIndex(j.get<std::vector<int>>()); }

json poly_json(const JetPoly& p) {
    json terms = json::array();
    for (const auto& [m, q] : p.terms()) {
        json mono = json::array();
        for (const auto& [c, e] : m.factors) {
            if (c.is_base())
                mono.push_back(json::array({"x", c.lambda() + 1, e}));
            else
                mono.push_back(json::array({"u", c.fibre_index() + 1, sigma_json(c.sigma()), e}));
        }
        terms.push_back(json{{"coeff", rational_to_string(q)}, {"monomial", mono}});
    }
    return json{{"terms", terms}};
}

JetPoly poly_of(const json& j) {
    JetPoly out;
    for (const json& t : j.at("terms")) {
        Monomial m;
        for (const json& f : t.at("monomial")) {
            std::string kind = f.at(0).get<std::string>();
            if (kind == "x")
                m.factors.emplace_back(JetCoord::base(f.at(1).get<int>() - 1), f.at(2).get<int>());
            else if (kind == "u")
                m.factors.emplace_back(JetCoord::fibre(f.at(1).get<int>() - 1, sigma_of(f.at(2))),
                                       f.at(3).get<int>());
            else
                throw std::invalid_argument("unknown monomial factor kind: " + kind);
        }
        std::sort(m.factors.begin(), m.factors.end());
        out += JetPoly::monomial(std::move(m), rational_from_string(t.at("coeff").get<std::string>()));
    }
    return out;
}

json config_json(const JetSpaceConfig& cfg) { return json{{"n", cfg.n}, {"m", cfg.m}}; }

void check_config(const json& j, const JetSpaceConfig& cfg) {
    if (!j.contains("config")) return;
    if (j.at("config").at("n").get<int>() != cfg.n || j.at("config").at("m").get<int>() != cfg.m)
        throw std::invalid_argument("serialized value belongs to a different jet space");
}

}  // namespace

std::string to_json(const MultiIndex& sigma) { return sigma_json(sigma).dump(); }

std::string to_json(const JetPoly& p) { return poly_json(p).dump(); }

std::string to_json(const Form& a) {
    json terms = json::array();
    for (const auto& [w, c] : a.terms()) {
        json covs = json::array();
        for (const BasisCovector& b : w) {
            if (b.is_dx())
                covs.push_back(json::array({"dx", b.lambda() + 1}));
            else
                covs.push_back(json::array({"om", json::array({b.fibre_index() + 1, sigma_json(b.sigma())})}));
        }
        terms.push_back(json{{"covectors", covs}, {"coeff", poly_json(c)}});
    }
    return json{{"config", config_json(a.config())}, {"degree", a.degree()}, {"terms", terms}}.dump();
}

std::string to_json(const CDiffOp& op) {
    json rows = json::array();
    for (int r = 0; r < op.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < op.cols(); ++c) {
            json cell = json::array();
            for (const auto& [sigma, coeff] : op.entry(r, c))
                cell.push_back(json{{"sigma", sigma_json(sigma)}, {"coeff", poly_json(coeff)}});
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    return json{{"config", config_json(op.config())},
                {"rows", op.rows()},
                {"cols", op.cols()},
                {"entries", rows}}
        .dump();
}

std::string to_json(const SourceForm& eta) {
    json comps = json::array();
    for (const JetPoly& c : eta.components) comps.push_back(poly_json(c));
    return json{{"config", config_json(eta.cfg)}, {"components", comps}}.dump();
}

MultiIndex multiindex_from_json(const std::string& text) { return sigma_of(json::parse(text)); }

JetPoly poly_from_json(const std::string& text) { return poly_of(json::parse(text)); }

Form form_from_json(const std::string& text, const JetSpaceConfig& cfg) {
    json j = json::parse(text);
    check_config(j, cfg);
    Form out = Form::zero(cfg, j.at("degree").get<int>());
    for (const json& t : j.at("terms")) {
        WedgeWord w;
        for (const json& cv : t.at("covectors")) {
            std::string kind = cv.at(0).get<std::string>();
            if (kind == "dx")
                w.push_back(BasisCovector::dx(cv.at(1).get<int>() - 1));
            else if (kind == "om")
                w.push_back(BasisCovector::omega(cv.at(1).at(0).get<int>() - 1, sigma_of(cv.at(1).at(1))));
            else
                throw std::invalid_argument("unknown covector kind: " + kind);
        }
        out += Form::term(cfg, std::move(w), poly_of(t.at("coeff")));
    }
    return out;
}

CDiffOp op_from_json(const std::string& text, const JetSpaceConfig& cfg) {
    json j = json::parse(text);
    check_config(j, cfg);
    CDiffOp out(cfg, j.at("rows").get<int>(), j.at("cols").get<int>());
    const json& entries = j.at("entries");
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c)
            for (const json& cell : entries.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)))
                out.add_to_entry(r, c, sigma_of(cell.at("sigma")), poly_of(cell.at("coeff")));
    return out;
}

SourceForm source_from_json(const std::string& text, const JetSpaceConfig& cfg) {
    json j = json::parse(text);
    check_config(j, cfg);
    std::vector<JetPoly> comps;
    for (const json& c : j.at("components")) comps.push_back(poly_of(c));
    return SourceForm(cfg, std::move(comps));
}

}  // namespace jetvar
