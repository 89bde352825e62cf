#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "extaff/affinity.hpp"
#include "extaff/canonical.hpp"
#include "extaff/form.hpp"
#include "extaff/function_spec.hpp"

namespace extaff {

using nlohmann::json;

// All serialization is canonical: coefficients as exact fraction strings,
// multi-indices as integer arrays, terms in the monomial order of the engine,
// object keys in nlohmann's sorted order. Parsing the serializer's output and
// serializing again is byte-identical.

inline json index_to_json(const MultiIndex& idx)
{
    json out = json::array();
    for (int e : idx) out.push_back(e);
    return out;
}

inline MultiIndex index_from_json(const json& j, const std::string& where)
{
    if (!j.is_array()) throw ParseError(where + ": expected an array of integers");
    std::vector<int> entries;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError(where + ": expected integer entries");
        entries.push_back(e.get<int>());
    }
    return MultiIndex(std::move(entries)); // throws ValidationError when unsorted
}

inline json form_to_json(const Form& f)
{
    json coeffs = json::array();
    for (const auto& [idx, value] : f.coeffs())
        coeffs.push_back({{"index", index_to_json(idx)}, {"value", to_fraction_string(value)}});
    return {{"n", f.dimension()}, {"k", f.grade()}, {"coeffs", std::move(coeffs)}};
}

inline Form form_from_json(const json& j, const std::string& where = "form")
{
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("coeffs"))
        throw ParseError(where + ": expected {n, k, coeffs}");
    Form f(j.at("n").get<int>(), j.at("k").get<int>());
    for (const auto& entry : j.at("coeffs")) {
        if (!entry.contains("index") || !entry.contains("value"))
            throw ParseError(where + ".coeffs: expected {index, value}");
        f.add_to(index_from_json(entry.at("index"), where + ".coeffs.index"),
                 parse_fraction(entry.at("value").get<std::string>()));
    }
    return f;
}

inline json function_to_json(const FunctionSpec& f)
{
    json terms = json::array();
    for (const auto& [mono, coeff] : f.body.terms()) {
        json vars = json::array();
        for (const auto& [v, e] : mono)
            vars.push_back({{"family", family_name(v.family)},
                            {"index", index_to_json(v.index)},
                            {"power", e}});
        terms.push_back({{"coeff", to_fraction_string(coeff)}, {"vars", std::move(vars)}});
    }
    return {{"n", f.n},
            {"k", f.k},
            {"signature", f.kind == SignatureKind::Single ? "single" : "pair"},
            {"terms", std::move(terms)}};
}

inline FunctionSpec function_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("signature") ||
        !j.contains("terms"))
        throw ParseError("function: expected {n, k, signature, terms}");
    const std::string sig = j.at("signature").get<std::string>();
    if (sig != "single" && sig != "pair")
        throw ParseError("function.signature: expected \"single\" or \"pair\"");

    Polynomial body;
    for (const auto& term : j.at("terms")) {
        if (!term.contains("coeff") || !term.contains("vars"))
            throw ParseError("function.terms: expected {coeff, vars}");
        Monomial mono;
        for (const auto& var : term.at("vars")) {
            const std::string fam = var.at("family").get<std::string>();
            Family family;
            if (fam == "omega")
                family = Family::Omega;
            else if (fam == "xi")
                family = Family::Xi;
            else if (fam == "eta")
                family = Family::Eta;
            else
                throw ParseError("function.terms.vars.family: unknown family '" + fam + "'");
            const int power = var.at("power").get<int>();
            if (power < 1) throw ParseError("function.terms.vars.power: must be >= 1");
            mono.push_back({Var{family, index_from_json(var.at("index"), "function var index")},
                            power});
        }
        std::sort(mono.begin(), mono.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < mono.size(); ++i)
            if (mono[i].first == mono[i - 1].first)
                throw ParseError("function.terms.vars: repeated variable in one term");
        body.add_term(mono, parse_fraction(term.at("coeff").get<std::string>()));
    }

    FunctionSpec f{j.at("n").get<int>(),
                   sig == "single" ? SignatureKind::Single : SignatureKind::Pair,
                   j.at("k").get<int>(), std::move(body)};
    f.validate(); // ValidationError on grade mismatches
    return f;
}

inline json canonical_to_json(const CanonicalExt& rep)
{
    json a = json::array();
    for (std::size_t r = 0; r < rep.coefficients.size(); ++r)
        a.push_back({{"r", static_cast<int>(r)}, {"form", form_to_json(rep.coefficients[r])}});
    return {{"n", rep.n},
            {"k", rep.k},
            {"basis", rep.basis == PairingBasis::Direct ? "omega" : "star"},
            {"a", std::move(a)}};
}

inline json canonical_to_json(const CanonicalExtInt& rep)
{
    json c = json::array();
    for (std::size_t s = 0; s < rep.c.size(); ++s)
        c.push_back({{"s", static_cast<int>(s)}, {"form", form_to_json(rep.c[s])}});
    json d = json::array();
    for (std::size_t r = 0; r < rep.d.size(); ++r)
        d.push_back({{"r", static_cast<int>(r)}, {"form", form_to_json(rep.d[r])}});
    return {{"n", rep.n}, {"k", rep.k}, {"c", std::move(c)}, {"d", std::move(d)}};
}

inline CanonicalExtInt canonical_ext_int_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("c") ||
        !j.contains("d"))
        throw ParseError("canonical: expected {n, k, c, d}");
    CanonicalExtInt rep;
    rep.n = j.at("n").get<int>();
    rep.k = j.at("k").get<int>();
    for (int s = 0; s <= rep.max_s(); ++s) rep.c.push_back(Form::zero(rep.n, rep.xi_grade() * s));
    for (int r = 0; r <= rep.max_r(); ++r)
        rep.d.push_back(Form::zero(rep.n, rep.star_eta_grade() * r));
    for (const auto& entry : j.at("c")) {
        const int s = entry.at("s").get<int>();
        if (s < 0 || s > rep.max_s()) throw ValidationError("canonical.c: power out of range");
        rep.c[static_cast<std::size_t>(s)] = form_from_json(entry.at("form"), "canonical.c");
    }
    for (const auto& entry : j.at("d")) {
        const int r = entry.at("r").get<int>();
        if (r < 0 || r > rep.max_r()) throw ValidationError("canonical.d: power out of range");
        rep.d[static_cast<std::size_t>(r)] = form_from_json(entry.at("form"), "canonical.d");
    }
    return rep;
}

inline json witness_to_json(const Witness& w)
{
    json base = json::array();
    for (const auto& f : w.base) base.push_back(form_to_json(f));
    return {{"base", std::move(base)},
            {"a", form_to_json(w.a)},
            {"b", form_to_json(w.b)},
            {"t_power", w.t_power},
            {"value", to_fraction_string(w.value)}};
}

template <typename Rep>
json verdict_to_json(const Verdict<Rep>& v)
{
    json out = {{"is_member", v.is_member}};
    if (v.canonical) out["canonical"] = canonical_to_json(*v.canonical);
    if (v.witness) out["witness"] = witness_to_json(*v.witness);
    return out;
}

inline json convexity_witness_to_json(const ConvexityWitness& w)
{
    json base = json::array();
    for (const auto& f : w.base) base.push_back(form_to_json(f));
    return {{"base", std::move(base)},
            {"a", form_to_json(w.a)},
            {"b", form_to_json(w.b)},
            {"t0", to_fraction_string(w.t0)},
            {"step", to_fraction_string(w.step)},
            {"second_difference", to_fraction_string(w.second_difference)}};
}

inline json parse_json_text(const std::string& text, const std::string& where)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

} // namespace extaff
