// tamefield <command> [options]; see README.md.

#include "tamefield/commands.hpp"
#include "tamefield/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace tamefield;

namespace {

std::optional<std::string> opt(const CLI::Option* o, const std::string& v) {
    return o->count() ? std::optional<std::string>(v) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation in valued fields"};
    app.require_subcommand(1);
    CommandOptions o;
    bool json = false;
    app.add_flag("--json", json, "machine-readable output (schema/report.schema.json)");
    app.add_option("--prec", o.prec, "default Hahn precision in the leading coordinate")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "seed for the randomized suite cases");

    std::string field, poly, as, mpoly, y0 = "1", target, gen, sentence, group, filter;
    int nx = -1, ny = -1, max_iter = 64, steps = 8;
    bool trivial = false;

    auto* ae = app.add_subcommand("analyze-extension", "e, f, d and tameness of K[X]/(g)");
    ae->add_option("--field", field, "e.g. 'F(2)((t^Z))'")->required();
    auto* ae_poly = ae->add_option("--poly", poly, "monic polynomial in X");
    auto* ae_as = ae->add_option("--as", as, "a, for X^p - X - a");

    auto* cf = app.add_subcommand("classify-field", "henselian, tame, Kaplansky, ... verdicts");
    cf->add_option("--field", field)->required();

    auto* gv = app.add_subcommand("gauss-value", "Gauss value of a polynomial in x_i, y_j");
    gv->add_option("--field", field)->required();
    gv->add_option("--mpoly", mpoly, "e.g. 'x1^2*y1 + t'")->required();
    gv->add_option("--nx", nx, "number of x variables (default: largest index used)");
    gv->add_option("--ny", ny, "number of y variables (default: largest index used)");

    auto* hl = app.add_subcommand("hensel-lift", "Newton iteration from a simple residue root");
    hl->add_option("--field", field)->required();
    hl->add_option("--poly", poly)->required();
    hl->add_option("--y0", y0, "starting point (default 1)");
    auto* hl_target = hl->add_option("--target", target, "target value of f(z), e.g. 40 or '(1, 0)'");
    hl->add_option("--max-iter", max_iter);

    auto* pt = app.add_subcommand("pcs-trace", "values of f along a pseudo-Cauchy prefix");
    pt->add_option("--field", field)->required();
    pt->add_option("--gen", gen, "geometric | artin-schreier:<a>")->required();
    auto* pt_poly = pt->add_option("--poly", poly, "default X^p - X - a for artin-schreier");
    pt->add_option("--steps", steps)->check(CLI::Range(2, 4096));

    auto* dq = app.add_subcommand("decide-oag", "decide a sentence of divisible ordered abelian groups");
    dq->add_option("--sentence", sentence)->required();
    dq->add_flag("--trivial-allowed", trivial, "also require truth in the trivial group");
    auto* dq_group = dq->add_option("--group", group, "evaluate directly in a lex group, e.g. 'Z x Q'");

    auto* vs = app.add_subcommand("verify-suite", "run the verification battery");
    auto* vs_filter = vs->add_option("--filter", filter, "case id or tag");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CommandResult r;
        if (*ae) r = cmd_analyze_extension(o, field, opt(ae_poly, poly), opt(ae_as, as));
        else if (*cf) r = cmd_classify_field(o, field);
        else if (*gv) r = cmd_gauss_value(o, field, mpoly, nx, ny);
        else if (*hl) r = cmd_hensel_lift(o, field, poly, y0, opt(hl_target, target), max_iter);
        else if (*pt) r = cmd_pcs_trace(o, field, gen, opt(pt_poly, poly), steps);
        else if (*dq) r = cmd_decide_oag(o, sentence, trivial, opt(dq_group, group));
        else r = cmd_verify_suite(o, opt(vs_filter, filter));
        if (json) std::cout << r.report.dump(2) << "\n";
        else std::cout << r.text;
        return r.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input:" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
