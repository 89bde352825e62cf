#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extaff/json_io.hpp"
#include "extaff/suites.hpp"

namespace extaff::cli {

// Exit codes: 0 completed (a FALSE classification is still a completed run),
// 1 suite failure or refused extraction, 2 usage or input errors.
//
// Everything on stdout is deterministic for fixed argv, input files and seed;
// timings go to stderr.

namespace detail {

inline FunctionSpec load_function(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return function_from_json(parse_json_text(buffer.str(), path));
}

inline LineMode mode_from_string(const std::string& mode)
{
    if (mode == "ext") return LineMode::Ext;
    if (mode == "int") return LineMode::Int;
    if (mode == "ext-int") return LineMode::ExtInt;
    throw ValidationError("unknown mode '" + mode + "' (expected ext, int or ext-int)");
}

inline void print_witness(std::ostream& out, const Witness& w)
{
    out << "witness:\n";
    for (std::size_t i = 0; i < w.base.size(); ++i)
        out << "  base[" << i << "] = " << w.base[i].str() << "\n";
    out << "  a = " << w.a.str() << "\n";
    out << "  b = " << w.b.str() << "\n";
    out << "  t-power = " << w.t_power << ", coefficient value = "
        << to_fraction_string(w.value) << "\n";
}

inline void print_canonical(std::ostream& out, const CanonicalExt& rep)
{
    const char* power = rep.basis == PairingBasis::Direct ? "w" : "*w";
    for (std::size_t r = 0; r < rep.coefficients.size(); ++r)
        out << "  a_" << r << " (pairs with (" << power << ")^" << r
            << ") = " << rep.coefficients[r].str() << "\n";
}

inline void print_canonical(std::ostream& out, const CanonicalExtInt& rep)
{
    for (std::size_t s = 0; s < rep.c.size(); ++s)
        out << "  c_" << s << " = " << rep.c[s].str() << "\n";
    for (std::size_t r = 0; r < rep.d.size(); ++r)
        out << "  d_" << r << " = " << rep.d[r].str() << "\n";
}

struct ClassifyResult {
    bool is_member = false;
    json payload;
    std::string text;
};

inline ClassifyResult classify(const FunctionSpec& f, LineMode mode)
{
    ClassifyResult result;
    std::ostringstream text;
    auto render = [&](const char* label, const auto& verdict) {
        result.is_member = verdict.is_member;
        result.payload = verdict_to_json(verdict);
        text << label << (verdict.is_member ? ": TRUE\n" : ": FALSE\n");
        if (verdict.is_member)
            print_canonical(text, *verdict.canonical);
        else
            print_witness(text, *verdict.witness);
    };
    switch (mode) {
    case LineMode::Ext: render("ext. one affine", is_ext_one_affine(f)); break;
    case LineMode::Int: render("int. one affine", is_int_one_affine(f)); break;
    case LineMode::ExtInt: render("ext-int. one affine", is_ext_int_one_affine(f)); break;
    }
    result.text = text.str();
    return result;
}

inline json family_to_json(const CoeffFamilyD& d)
{
    json members = json::array();
    for (const auto& [a, form] : d.members)
        members.push_back({{"A", index_to_json(a)}, {"form", form_to_json(form)}});
    return {{"n", d.n}, {"k", d.k}, {"p", d.p}, {"members", std::move(members)}};
}

inline json report_to_json(const Report& report)
{
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"case", f.case_id}, {"expected", f.expected}, {"got", f.got}});
    return {{"suite", report.suite},
            {"cases_run", report.cases_run},
            {"failures", std::move(failures)}};
}

inline void print_report(std::ostream& out, std::ostream& err, const Report& report)
{
    out << report.suite << ": " << report.cases_run << " cases, " << report.failures.size()
        << " failures [" << (report.ok() ? "PASS" : "FAIL") << "]\n";
    std::size_t shown = 0;
    for (const auto& f : report.failures) {
        if (++shown > 10) {
            out << "  ... " << (report.failures.size() - 10) << " more\n";
            break;
        }
        out << "  FAIL " << f.case_id << ": expected " << f.expected << ", got " << f.got
            << "\n";
    }
    err << report.suite << " took " << report.wall_ms << " ms\n";
}

inline int demo_remark36(std::ostream& out, bool as_json)
{
    Polynomial body = Polynomial::variable(Var{Family::Xi, MultiIndex{1, 2}}) *
                      Polynomial::variable(Var{Family::Eta, MultiIndex{}});
    const FunctionSpec f = FunctionSpec::pair(2, 1, std::move(body));
    const auto verdict = is_ext_int_one_affine(f);
    const auto convexity = falsify_convexity(f, LineMode::ExtInt);

    Form xi(2, 2), eta(2, 0);
    xi.set(MultiIndex{1, 2}, 2);
    eta.set(MultiIndex{}, -3);
    const bool partials_affine = is_ext_one_affine(fix_eta(f, eta)).is_member &&
                                 is_int_one_affine(fix_xi(f, xi)).is_member;

    if (as_json) {
        json payload = {{"function", function_to_json(f)},
                        {"partial_restrictions_affine", partials_affine},
                        {"verdict", verdict_to_json(verdict)}};
        if (convexity) payload["convexity_witness"] = convexity_witness_to_json(*convexity);
        out << payload.dump() << "\n";
        return 0;
    }
    out << "f(xi, eta) = (*xi) eta on Lambda^2 x Lambda^0 over R^2\n\n";
    out << "every partial restriction f_eta, f^xi is affine: "
        << (partials_affine ? "yes" : "NO") << "\n";
    out << "joint ext-int. one affine test: " << (verdict.is_member ? "TRUE" : "FALSE") << "\n";
    if (verdict.witness) print_witness(out, *verdict.witness);
    if (convexity) {
        out << "non-convexity certificate: second difference "
            << to_fraction_string(convexity->second_difference) << " at t0 = "
            << to_fraction_string(convexity->t0) << ", step = "
            << to_fraction_string(convexity->step) << "\n";
        out << "  a = " << convexity->a.str() << ", b = " << convexity->b.str() << "\n";
    }
    out << "\nThe two one-sided notions do not combine: both partial restrictions are\n"
           "affine while the paired direction family refutes joint affinity.\n";
    return 0;
}

inline int demo_thm53(std::ostream& out, bool as_json, int n, int k)
{
    if (n != 2 * k || k % 2 != 0)
        throw ValidationError("the middle-dimension demo needs n = 2k with k even");
    const MultiIndex top = complement(MultiIndex{}, n);
    const FunctionSpec f =
        FunctionSpec::single(n, k, symbolic_pairing(Form::basis(n, top), Family::Omega, k, 2));
    const auto ext_verdict = is_ext_one_affine(f);
    const auto int_verdict = is_int_one_affine(f);

    if (as_json) {
        out << json{{"function", function_to_json(f)},
                    {"ext_one_affine", ext_verdict.is_member},
                    {"int_one_affine", int_verdict.is_member},
                    {"degree", f.body.total_degree()}}
                   .dump()
            << "\n";
        return 0;
    }
    out << "f(w) = <e^" << top.str() << " ; w ^ w> on Lambda^" << k << "(R^" << n << ")\n\n";
    out << "ext. one affine: " << (ext_verdict.is_member ? "TRUE" : "FALSE") << "\n";
    out << "int. one affine: " << (int_verdict.is_member ? "TRUE" : "FALSE") << "\n";
    out << "total degree:    " << f.body.total_degree() << "\n";
    out << "\nAway from the middle dimension, a function passing both tests is affine;\n"
           "at n = 2k with k even this quadratic passes both, so the restriction on\n"
           "the dimension is sharp.\n";
    return 0;
}

inline int run_kernel(std::ostream& out, std::ostream& err, int n, int k, int p, bool as_json)
{
    const auto basis = solve_D_kernel(n, k, p);
    json payload = {{"n", n}, {"k", k}, {"p", p},
                    {"dimension", static_cast<int>(basis.size())}};
    json elements = json::array();

    std::ostringstream text;
    text << "kernel of F_" << p << "(w, a ^ b) = 0 at n = " << n << ", k = " << k
         << ": dimension " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& d = basis[i];
        json element = {{"family", family_to_json(d)}};
        text << "basis element #" << i << ":\n";
        for (const auto& [a, form] : d.members)
            text << "  D^" << a.str() << " = " << form.str() << "\n";
        if (p == 1) {
            const auto report = check_orthogonality(d);
            element["orthogonality_pass"] = report.all_pass();
            text << "  orthogonality relations: " << (report.all_pass() ? "pass" : "FAIL")
                 << "\n";
        }
        const Form h = construct_H_p(d);
        element["H"] = form_to_json(h);
        text << "  H_" << p << " = " << h.str() << " (diagonal identity verified)\n";
        elements.push_back(std::move(element));
    }
    payload["basis"] = std::move(elements);

    if (as_json)
        out << payload.dump() << "\n";
    else
        out << text.str();
    (void)err;
    return 0;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact exterior-form calculus and affinity classification"};
    app.require_subcommand(1);

    std::string in_path, mode_name = "ext", suite_name = "all", demo_name;
    int n = 4, k = 2, p = 1;
    std::uint64_t seed = 0;
    int cases = 100;
    bool as_json = false;

    auto* classify = app.add_subcommand("classify", "decide membership in an affine class");
    classify->add_option("--in", in_path, "function JSON file")->required();
    classify->add_option("--mode", mode_name, "ext, int or ext-int")->required();
    classify->add_flag("--json", as_json, "machine-readable output");

    auto* extract = app.add_subcommand("extract", "canonical coefficients of an affine function");
    extract->add_option("--in", in_path, "function JSON file")->required();
    extract->add_option("--mode", mode_name, "ext, int or ext-int")->required();
    extract->add_flag("--json", as_json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", suite_name, "suite name or 'all'");
    verify->add_option("--n", n, "restrict to one dimension");
    verify->add_option("--k", k, "restrict to one grade");
    verify->add_option("--p", p, "restrict to one power");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--cases", cases, "cases per configuration");
    verify->add_flag("--json", as_json, "machine-readable output");
    bool have_n = false, have_k = false, have_p = false;
    verify->callback([&] {
        have_n = verify->count("--n") > 0;
        have_k = verify->count("--k") > 0;
        have_p = verify->count("--p") > 0;
    });

    auto* demo = app.add_subcommand("demo", "worked counterexamples");
    demo->add_option("--name", demo_name, "remark36 or thm53-counterexample")->required();
    demo->add_option("--n", n, "dimension");
    demo->add_option("--k", k, "grade");
    demo->add_flag("--json", as_json, "machine-readable output");

    auto* kernel = app.add_subcommand("kernel", "solve the direction-kernel for one (n, k, p)");
    kernel->add_option("--n", n, "dimension")->required();
    kernel->add_option("--k", k, "grade")->required();
    kernel->add_option("--p", p, "power");
    kernel->add_flag("--json", as_json, "machine-readable output");

    std::vector<char*> argv;
    std::vector<std::string> storage;
    storage.emplace_back("extaff");
    for (auto& a : args) storage.push_back(a);
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (classify->parsed()) {
            const FunctionSpec f = detail::load_function(in_path);
            const auto result = detail::classify(f, detail::mode_from_string(mode_name));
            if (as_json)
                out << result.payload.dump() << "\n";
            else
                out << result.text;
            return 0;
        }
        if (extract->parsed()) {
            const FunctionSpec f = detail::load_function(in_path);
            const auto result = detail::classify(f, detail::mode_from_string(mode_name));
            if (as_json) {
                out << result.payload.dump() << "\n";
            } else if (result.is_member) {
                out << result.text;
            } else {
                out << "not a member of the requested affine class\n";
                out << result.text;
            }
            return result.is_member ? 0 : 1;
        }
        if (verify->parsed()) {
            SuiteParams params;
            if (have_n) params.n = n;
            if (have_k) params.k = k;
            if (have_p) params.p = p;
            params.seed = seed;
            params.cases = cases;
            std::vector<std::string> names;
            if (suite_name == "all")
                names = suite_names();
            else
                names.push_back(suite_name);
            bool all_ok = true;
            json reports = json::array();
            for (const auto& name : names) {
                const Report report = run_suite(name, params);
                all_ok = all_ok && report.ok();
                if (as_json)
                    reports.push_back(detail::report_to_json(report));
                else
                    detail::print_report(out, err, report);
            }
            if (as_json) out << reports.dump() << "\n";
            return all_ok ? 0 : 1;
        }
        if (demo->parsed()) {
            if (demo_name == "remark36") return detail::demo_remark36(out, as_json);
            if (demo_name == "thm53-counterexample") {
                if (demo->count("--n") == 0 && demo->count("--k") == 0) { n = 4; k = 2; }
                return detail::demo_thm53(out, as_json, n, k);
            }
            throw ValidationError("unknown demo '" + demo_name + "'");
        }
        if (kernel->parsed()) return detail::run_kernel(out, err, n, k, p, as_json);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace extaff::cli
