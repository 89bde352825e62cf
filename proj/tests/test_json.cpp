#include <catch2/catch_amalgamated.hpp>

#include "extaff/json_io.hpp"

using namespace extaff;

TEST_CASE("fraction strings are canonical and exact")
{
    CHECK(to_fraction_string(Rational(1, 3)) == "1/3");
    CHECK(to_fraction_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_fraction_string(Rational(5)) == "5");
    CHECK(parse_fraction("1/3") == Rational(1, 3));
    CHECK(parse_fraction("-7") == Rational(-7));
    CHECK(parse_fraction("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_fraction("1.5"), ParseError);
    CHECK_THROWS_AS(parse_fraction("1/0"), ParseError);
    CHECK_THROWS_AS(parse_fraction(""), ParseError);
    CHECK_THROWS_AS(parse_fraction("a/b"), ParseError);
}

TEST_CASE("form serialization round-trips byte-identically")
{
    Form f(4, 2);
    f.set(MultiIndex{1, 2}, Rational(1, 3));
    f.set(MultiIndex{3, 4}, Rational(-2));
    const std::string text = form_to_json(f).dump();
    const Form back = form_from_json(parse_json_text(text, "test"));
    CHECK(back == f);
    CHECK(form_to_json(back).dump() == text);

    // empty index serializes as []
    const std::string scalar = form_to_json(Form::unit_scalar(3)).dump();
    CHECK(scalar.find("\"index\":[]") != std::string::npos);
}

TEST_CASE("form parsing validates indices")
{
    const std::string bad = R"({"n":3,"k":2,"coeffs":[{"index":[2,1],"value":"1"}]})";
    CHECK_THROWS_AS(form_from_json(parse_json_text(bad, "test")), ValidationError);
    const std::string overflow = R"({"n":3,"k":2,"coeffs":[{"index":[2,4],"value":"1"}]})";
    CHECK_THROWS_AS(form_from_json(parse_json_text(overflow, "test")), DimensionMismatch);
    CHECK_THROWS_AS(parse_json_text("{not json", "test"), ParseError);
}

TEST_CASE("function serialization round-trips byte-identically")
{
    Polynomial body = symbolic_pairing(Form::basis(4, MultiIndex{1, 2, 3, 4}), Family::Xi, 2, 2) +
                      Polynomial::variable(Var{Family::Eta, MultiIndex{}}) * Rational(5, 2) +
                      Polynomial::constant(Rational(-1, 7));
    const FunctionSpec f = FunctionSpec::pair(4, 1, std::move(body));
    const std::string text = function_to_json(f).dump();
    const FunctionSpec back = function_from_json(parse_json_text(text, "test"));
    CHECK(back.body == f.body);
    CHECK(back.n == f.n);
    CHECK(back.k == f.k);
    CHECK(back.kind == f.kind);
    CHECK(function_to_json(back).dump() == text);
}

TEST_CASE("function parsing rejects bad schemas and grades")
{
    CHECK_THROWS_AS(function_from_json(parse_json_text(R"({"n":3})", "t")), ParseError);
    CHECK_THROWS_AS(function_from_json(parse_json_text(
                        R"({"n":3,"k":1,"signature":"weird","terms":[]})", "t")),
                    ParseError);
    // grade mismatch: an omega variable of grade 2 in a grade-1 function
    const std::string bad_grade =
        R"({"n":3,"k":1,"signature":"single",
            "terms":[{"coeff":"1","vars":[{"family":"omega","index":[1,2],"power":1}]}]})";
    CHECK_THROWS_AS(function_from_json(parse_json_text(bad_grade, "t")), ValidationError);
    // unsorted index inside a variable
    const std::string bad_index =
        R"({"n":3,"k":2,"signature":"single",
            "terms":[{"coeff":"1","vars":[{"family":"omega","index":[2,1],"power":1}]}]})";
    CHECK_THROWS_AS(function_from_json(parse_json_text(bad_index, "t")), ValidationError);
    // direction families are not valid input
    const std::string bad_family =
        R"({"n":3,"k":1,"signature":"single",
            "terms":[{"coeff":"1","vars":[{"family":"a","index":[1],"power":1}]}]})";
    CHECK_THROWS_AS(function_from_json(parse_json_text(bad_family, "t")), ParseError);
}

TEST_CASE("a golden function file parses to the expected polynomial")
{
    const std::string golden =
        R"({"k":1,"n":2,"signature":"pair",
            "terms":[{"coeff":"1","vars":[
              {"family":"xi","index":[1,2],"power":1},
              {"family":"eta","index":[],"power":1}]}]})";
    const FunctionSpec f = function_from_json(parse_json_text(golden, "golden"));
    const Polynomial expected = Polynomial::variable(Var{Family::Xi, MultiIndex{1, 2}}) *
                                Polynomial::variable(Var{Family::Eta, MultiIndex{}});
    CHECK(f.body == expected);
    CHECK(f.kind == SignatureKind::Pair);
}

TEST_CASE("canonical pair representations round-trip")
{
    const CanonicalExtInt rep = random_canonical(4, 1, 3);
    const std::string text = canonical_to_json(rep).dump();
    const CanonicalExtInt back = canonical_ext_int_from_json(parse_json_text(text, "t"));
    CHECK(back == rep);
    CHECK(canonical_to_json(back).dump() == text);
}

TEST_CASE("verdict serialization carries exactly one payload")
{
    const FunctionSpec affine = FunctionSpec::single(
        3, 1, Polynomial::variable(Var{Family::Omega, MultiIndex{1}}));
    const auto yes = verdict_to_json(is_ext_one_affine(affine));
    CHECK(yes.at("is_member") == true);
    CHECK(yes.contains("canonical"));
    CHECK_FALSE(yes.contains("witness"));

    const FunctionSpec not_affine = FunctionSpec::single(
        3, 1, Polynomial::variable(Var{Family::Omega, MultiIndex{1}}, 2));
    const auto no = verdict_to_json(is_ext_one_affine(not_affine));
    CHECK(no.at("is_member") == false);
    CHECK(no.contains("witness"));
    CHECK_FALSE(no.contains("canonical"));
    CHECK(no.at("witness").at("t_power") == 2);
}
