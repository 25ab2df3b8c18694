#include <cctype>
#include "jetvar/cli.hpp"

#include <sstream>

#include "jetvar/json_io.hpp"
#include "jetvar/parser.hpp"
#include "jetvar/selftest.hpp"
#include "jetvar/textio.hpp"

namespace jetvar {

namespace {

bool looks_like_json(const std::string& s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

Form input_form(const std::string& src, const JetSpaceConfig& cfg) {
    if (looks_like_json(src)) return form_from_json(src, cfg);
    return parse_form(src, cfg);
}

JetPoly input_poly(const std::string& src, const JetSpaceConfig& cfg) {
    if (looks_like_json(src)) return poly_from_json(src);
    return parse_poly(src, cfg);
}

std::string format_form(const Form& a, const std::string& format) {
    if (format == "json") return to_json(a);
    if (format == "latex") return latex_form(a);
    return render_form(a);
}

std::string format_poly(const JetPoly& p, const JetSpaceConfig& cfg, const std::string& format) {
    if (format == "json") return to_json(p);
    if (format == "latex") return latex_poly(p, cfg);
    return render_poly(p, cfg);
}

std::string format_op(const CDiffOp& op, const std::string& format) {
    if (format == "json") return to_json(op);
    if (format == "latex") return latex_op(op);
    return render_op(op);
}

std::string format_source(const SourceForm& eta, const std::string& format) {
    if (format == "json") return to_json(eta);
    if (format == "latex") return latex_source(eta);
    return render_source(eta);
}

JetPoly lagrangian_input(const JobSpec& job) {
    if (job.inputs.size() != 1) throw SemanticError(job.command + " takes exactly one expression");
    const std::string& src = job.inputs[0];
    if (looks_like_json(src)) return poly_from_json(src);
    Form f = parse_form(src, job.cfg);
    if (f.is_zero()) return JetPoly::zero();
    if (f.degree() == 0) return f.terms().begin()->second;
    if (f.degree() == job.cfg.n && horizontalize(f) == f) return f.terms().begin()->second;
    throw SemanticError("expected a Lagrangian density (function or multiple of Vol)");
}

SourceForm source_input(const JobSpec& job) {
    const JetSpaceConfig& cfg = job.cfg;
    if (job.inputs.size() == 1 && looks_like_json(job.inputs[0])) return source_from_json(job.inputs[0], cfg);
    if (static_cast<int>(job.inputs.size()) == cfg.m) {
        bool all_scalar = true;
        std::vector<JetPoly> comps;
        std::vector<Form> forms;
        for (const std::string& src : job.inputs) forms.push_back(input_form(src, cfg));
        for (const Form& f : forms)
            if (!f.is_zero() && f.degree() != 0) all_scalar = false;
        if (all_scalar) {
            for (const Form& f : forms)
                comps.push_back(f.is_zero() ? JetPoly::zero() : f.terms().begin()->second);
            return SourceForm(cfg, std::move(comps));
        }
        if (forms.size() == 1) return source_representative(forms[0]);
        throw SemanticError("pass either one source form or one function per component");
    }
    if (job.inputs.size() == 1) return source_representative(input_form(job.inputs[0], cfg));
    throw SemanticError("expected " + std::to_string(cfg.m) + " component expression(s) or one source form");
}

std::string one_form_command(const JobSpec& job) {
    if (job.inputs.size() != 1) throw SemanticError(job.command + " takes exactly one expression");
    Form a = input_form(job.inputs[0], job.cfg);
    Form out = Form::zero(job.cfg, a.degree());
    if (job.command == "d")
        out = d(a);
    else if (job.command == "dbar")
        out = dbar(a);
    else if (job.command == "h")
        out = horizontalize(a);
    else if (job.command == "v")
        out = vertical(a);
    else if (job.command == "homotopy")
        out = contact_homotopy(a);
    else if (job.command == "project")
        out = project(a, job.contact, job.horizontal);
    return format_form(out, job.format);
}

std::string green_command(const JobSpec& job) {
    if (job.inputs.size() != 3) throw SemanticError("green takes an operator and two functions: OP P Q");
    CDiffOp op = parse_operator(job.inputs[0], job.cfg);
    if (op.rows() != 1 || op.cols() != 1)
        throw SemanticError("the green command handles scalar operators; use the library for matrices");
    JetPoly p = input_poly(job.inputs[1], job.cfg);
    JetPoly q = input_poly(job.inputs[2], job.cfg);
    GreenRemainder g = green_remainder(op, {p}, {q});
    std::ostringstream out;
    if (job.format == "json") {
        out << "{\"remainder\":" << to_json(g.remainder) << ",\"certified\":" << (g.certified() ? "true" : "false");
        if (g.primitive) out << ",\"primitive\":" << to_json(*g.primitive);
        out << "}";
        return out.str();
    }
    auto fmt = [&](const JetPoly& f) {
        return job.format == "latex" ? latex_poly(f, job.cfg) : render_poly(f, job.cfg);
    };
    out << "remainder = " << fmt(g.remainder) << "\n";
    out << "certified divergence: " << (g.certified() ? "yes" : "no");
    if (g.primitive) out << "\nprimitive = " << fmt(*g.primitive);
    return out.str();
}

RunResult dispatch(const JobSpec& job) {
    RunResult res;
    std::ostringstream out;
    if (job.command == "el") {
        out << format_source(euler_lagrange(Lagrangian(job.cfg, lagrangian_input(job))), job.format);
    } else if (job.command == "hlm") {
        HelmholtzOperator h = helmholtz(source_input(job));
        if (h.is_zero() && job.format != "json")
            out << "0";
        else
            out << format_op(h.op, job.format);
    } else if (job.command == "tonti") {
        Lagrangian L = tonti_lagrangian(source_input(job));
        out << format_poly(L.density, job.cfg, job.format);
    } else if (job.command == "d" || job.command == "dbar" || job.command == "h" || job.command == "v" ||
               job.command == "homotopy" || job.command == "project") {
        out << one_form_command(job);
    } else if (job.command == "adjoint") {
        if (job.inputs.size() != 1) throw SemanticError("adjoint takes exactly one operator expression");
        out << format_op(adjoint(parse_operator(job.inputs[0], job.cfg)), job.format);
    } else if (job.command == "green") {
        out << green_command(job);
    } else if (job.command == "selftest") {
        SelftestOptions opts;
        opts.seed = job.seed;
        opts.cases = job.cases;
        opts.max_order = job.max_order;
        if (!run_selftest(opts, out)) res.exit_code = 2;
    } else {
        res.exit_code = 1;
        res.error = "unknown command: " + job.command;
        return res;
    }
    res.output = out.str();
    return res;
}

}  // namespace

RunResult run_job(const JobSpec& job) {
    try {
        return dispatch(job);
    } catch (const ParseError& e) {
        return RunResult{1, "", std::string("parse error: ") + e.what()};
    } catch (const NotVariationalError& e) {
        std::string witness = job.format == "json" ? to_json(e.witness.op) : render_op(e.witness.op);
        return RunResult{2, "", std::string("error: ") + e.what() + "\nhelmholtz witness: " + witness};
    } catch (const SemanticError& e) {
        return RunResult{2, "", std::string("error: ") + e.what()};
    } catch (const std::exception& e) {
        return RunResult{2, "", std::string("error: ") + e.what()};
    }
}

}  // namespace jetvar
