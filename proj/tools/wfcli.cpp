#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wavefront_c.h"

namespace {

using nlohmann::json;

struct Options {
    bool pretty = false;
    bool force_json = false;
    long long seed = 0;
};

std::string read_arg(const std::string& arg)
{
    if (!arg.empty() && arg != "-")
        return arg;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

void emit(const std::string& payload, const Options& opt)
{
    if (opt.pretty) {
        json j = json::parse(payload, nullptr, false);
        if (!j.is_discarded()) {
            std::cout << j.dump(2) << "\n";
            return;
        }
    }
    std::cout << payload << "\n";
}

int report_error(wf_ctx* ctx)
{
    json diag{{"error", wf_ctx_errcode(ctx)},
              {"message", wf_ctx_errmsg(ctx)}};
    std::cerr << diag.dump() << "\n";
    return 1;
}

int run_simple(wf_ctx* ctx, char* out, const Options& opt)
{
    if (!out)
        return report_error(ctx);
    emit(out, opt);
    wf_string_free(out);
    return 0;
}

std::string sign_str(const json& arr)
{
    std::string s;
    for (const auto& v : arr)
        s += v.get<int>() == 1 ? "+" : "-";
    return s;
}

std::string plist(const json& arr)
{
    std::string s = "(";
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(arr[i].get<int>());
    }
    return s + ")";
}

int run_table(wf_ctx* ctx, const std::string& arg, const Options& opt)
{
    char* out = wf_table_5_3(ctx, arg.c_str());
    if (!out)
        return report_error(ctx);
    if (opt.force_json || opt.pretty) {
        int rc = run_simple(ctx, out, opt);
        return rc;
    }
    json rows = json::parse(out);
    wf_string_free(out);
    std::printf("%-6s %-3s %-18s %-8s %-18s %-18s\n", "eps", "k", "lmax",
                "emax", "tmin", "mu");
    for (const auto& row : rows)
        std::printf("%-6s %-3d %-18s %-8s %-18s %-18s\n",
                    sign_str(row["eps"]).c_str(), row["k"].get<int>(),
                    plist(row["lmax"]).c_str(),
                    sign_str(row["emax"]).c_str(),
                    plist(row["tmin"]).c_str(), plist(row["mu"]).c_str());
    return 0;
}

int run_verify(wf_ctx* ctx, const std::string& suite, int bound,
               const Options& opt)
{
    char* out = wf_verify(ctx, suite.c_str(), bound);
    if (!out)
        return report_error(ctx);
    json rep = json::parse(out);
    emit(out, opt);
    wf_string_free(out);
    return rep["passed"].get<bool>() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"wave front set calculator for quadruples of signed "
                 "symplectic partitions"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--pretty", opt.pretty, "indent JSON output");
    app.add_flag("--json", opt.force_json,
                 "force JSON output for table-5-3");
    app.add_option("--seed", opt.seed,
                   "seed recorded for reproducibility (all checks are "
                   "exhaustive and deterministic)");

    std::string arg1, arg2, cls = "symp", suite = "all";
    int bound = -1;

    auto* c_wave = app.add_subcommand("wavefront",
                                      "wave front partition of a quadruple");
    c_wave->add_option("quad", arg1, "quadruple JSON (or - for stdin)");

    auto* c_tab = app.add_subcommand(
        "table-5-3", "the eight sign rows of a three-part even partition");
    c_tab->add_option("lambda", arg1, "partition JSON");

    auto* c_ver = app.add_subcommand("verify", "run a verification suite");
    c_ver->add_option("suite", suite,
                      "duality|symbols|springer|endoscopy|wavefront|all");
    c_ver->add_option("--bound", bound, "enumeration bound (default per suite)");

    auto* c_dual = app.add_subcommand("dual", "duality map");
    c_dual->add_option("--class", cls, "symp|orth_odd|orth_even");
    c_dual->add_option("lambda", arg1, "partition JSON");

    auto* c_sp = app.add_subcommand("sp", "special symplectic closure");
    c_sp->add_option("lambda", arg1, "partition JSON");

    auto* c_fam = app.add_subcommand("family", "family of a special partition");
    c_fam->add_option("--class", cls, "symp|orth_even");
    c_fam->add_option("lambda", arg1, "partition JSON");

    auto* c_ind = app.add_subcommand("induce", "endoscopic induction");
    c_ind->add_option("lambda1", arg1, "symplectic special partition JSON")
        ->required();
    c_ind->add_option("lambda2", arg2, "orthogonal special partition JSON")
        ->required();

    auto* c_spr = app.add_subcommand("springer",
                                     "generalized Springer datum (k, rho)");
    c_spr->add_option("signed", arg1, "signed partition JSON");

    auto* c_symb = app.add_subcommand("symb", "ordinary symbol");
    c_symb->add_option("--class", cls, "symp|orth_odd|orth_even");
    c_symb->add_option("lambda", arg1, "partition JSON");

    CLI11_PARSE(app, argc, argv);

    wf_ctx* ctx = wf_ctx_create();
    if (!ctx) {
        std::cerr << "{\"error\":7,\"message\":\"out of memory\"}\n";
        return 1;
    }
    int rc = 1;
    if (c_wave->parsed())
        rc = run_simple(ctx, wf_wavefront(ctx, read_arg(arg1).c_str()), opt);
    else if (c_tab->parsed())
        rc = run_table(ctx, read_arg(arg1), opt);
    else if (c_ver->parsed())
        rc = run_verify(ctx, suite, bound, opt);
    else if (c_dual->parsed())
        rc = run_simple(
            ctx, wf_dual(ctx, cls.c_str(), read_arg(arg1).c_str()), opt);
    else if (c_sp->parsed())
        rc = run_simple(ctx, wf_sp(ctx, read_arg(arg1).c_str()), opt);
    else if (c_fam->parsed())
        rc = run_simple(
            ctx, wf_family(ctx, cls.c_str(), read_arg(arg1).c_str()), opt);
    else if (c_ind->parsed())
        rc = run_simple(ctx,
                        wf_induce(ctx, read_arg(arg1).c_str(), arg2.c_str()),
                        opt);
    else if (c_spr->parsed())
        rc = run_simple(ctx, wf_springer(ctx, read_arg(arg1).c_str()), opt);
    else if (c_symb->parsed())
        rc = run_simple(
            ctx, wf_symb(ctx, cls.c_str(), read_arg(arg1).c_str()), opt);
    wf_ctx_destroy(ctx);
    return rc;
}
