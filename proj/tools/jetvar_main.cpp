#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <map>

#include "jetvar/cli.hpp"

namespace {

struct CommonOpts {
    int n = 1;
    int m = 1;
    std::string format;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--n", opts.n, "base dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--m", opts.m, "fibre dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "output format: text | latex | json")
        ->check(CLI::IsMember({"text", "latex", "json"}));
}

std::string resolved_format(const CommonOpts& opts) {
    if (!opts.format.empty()) return opts.format;
    if (const char* env = std::getenv("JETVAR_FORMAT")) {
        std::string f(env);
        if (f == "text" || f == "latex" || f == "json") return f;
    }
    return "text";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jetvar: variational calculus on finite-order jet spaces"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd = nullptr;
        CommonOpts opts;
        std::vector<std::string> exprs;
    };
    std::map<std::string, Sub> subs;

    auto add_expr_command = [&](const std::string& name, const std::string& desc, int min_exprs,
                                int max_exprs) {
        Sub& s = subs[name];
        s.cmd = app.add_subcommand(name, desc);
        add_common(s.cmd, s.opts);
        auto* opt = s.cmd->add_option("expr", s.exprs, "expression(s)");
        opt->required();
        opt->expected(min_exprs, max_exprs);
        return s.cmd;
    };

    add_expr_command("el", "Euler-Lagrange source form of a Lagrangian density", 1, 1);
    add_expr_command("hlm", "Helmholtz operator of a source form", 1, -1);
    add_expr_command("tonti", "Lagrangian reconstruction of a locally variational source form", 1, -1);
    add_expr_command("d", "exterior derivative", 1, 1);
    add_expr_command("dbar", "horizontal differential of a contact-homogeneous form", 1, 1);
    add_expr_command("h", "horizontalization", 1, 1);
    add_expr_command("v", "vertical (contact) part", 1, 1);
    add_expr_command("homotopy", "contact homotopy operator A", 1, 1);
    add_expr_command("adjoint", "formal adjoint of a total-derivative operator", 1, 1);
    add_expr_command("green", "Green remainder q*Op(p) - Op*(q)*p with divergence certificate", 3, 3);

    int contact = 0, horizontal = 0;
    auto* proj = add_expr_command("project", "bidegree projection", 1, 1);
    proj->add_option("--contact", contact, "contact degree")->required();
    proj->add_option("--horizontal", horizontal, "horizontal degree")->required();

    std::uint64_t seed = 42;
    int cases = 50;
    int max_order = 3;
    {
        Sub& s = subs["selftest"];
        s.cmd = app.add_subcommand("selftest", "run the randomized property suites");
        add_common(s.cmd, s.opts);
        s.cmd->add_option("--seed", seed, "RNG seed");
        s.cmd->add_option("--cases", cases, "cases per suite")->check(CLI::PositiveNumber);
        s.cmd->add_option("--max-order", max_order, "cap on generated jet orders")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // usage problems exit 1, like expression syntax errors
    }

    for (auto& [name, s] : subs) {
        if (!s.cmd->parsed()) continue;
        jetvar::JobSpec job;
        try {
            job.cfg = jetvar::JetSpaceConfig(s.opts.n, s.opts.m);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        job.command = name;
        job.inputs = s.exprs;
        job.format = resolved_format(s.opts);
        job.seed = seed;
        job.cases = cases;
        job.max_order = max_order;
        job.contact = contact;
        job.horizontal = horizontal;
        jetvar::RunResult res = jetvar::run_job(job);
        if (!res.output.empty()) std::cout << res.output << "\n";
        if (!res.error.empty()) std::cerr << res.error << "\n";
        return res.exit_code;
    }
    return 1;
}
