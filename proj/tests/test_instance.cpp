#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "twistring/instance.hpp"

using namespace twistring;
using nlohmann::json;

#ifndef TWISTRING_DATA_DIR
#define TWISTRING_DATA_DIR "data/instances"
#endif

TEST_CASE("ring descriptors") {
    Ring r = make_ring(json{{"kind", "zmod"}, {"modulus", 6}});
    CHECK(r.order() == 6);
    CHECK(r.kind() == Ring::Kind::ZMod);
    CHECK_THROWS_WITH_AS(make_ring(json{{"kind", "gf"}, {"modulus", 3}}),
                         doctest::Contains("MalformedInstance"), AlgebraError);
    CHECK_THROWS_WITH_AS(make_ring(json{{"kind", "gfp"}, {"modulus", 6}}),
                         doctest::Contains("NonPrimeModulus"), AlgebraError);
}

TEST_CASE("group descriptors, including nested ones") {
    Group g = build_group(json::parse(R"({
        "family": "product",
        "a": {"family": "central_product",
              "a": {"family": "quaternion8"},
              "b": {"family": "cyclic", "n": 4}, "za": 2, "zb": 2},
        "b": {"family": "cyclic", "n": 2}
    })"));
    CHECK(g.order() == 32);
    CHECK_THROWS_WITH_AS(build_group(json{{"family", "icosahedral"}}),
                         doctest::Contains("MalformedInstance"), AlgebraError);
    CHECK_THROWS_AS(build_group(json{{"family", "cyclic"}}), AlgebraError);
}

TEST_CASE("cocycle and f descriptors") {
    json file = {{"ring", {{"kind", "gfp"}, {"modulus", 5}}},
                 {"group", {{"family", "elem_abelian"}, {"k", 2}}},
                 {"cocycle", "quaternion_c2c2"},
                 {"f", "one"}};
    Instance inst = parse_instance(file);
    REQUIRE(inst.cocycle.has_value());
    CHECK(inst.cocycle->value(2, 1) == 4);
    CHECK(inst.f->at(3).value == 1);

    file["cocycle"] = json{{"kind", "coboundary"}, {"theta", {1, 2, 3, 4}}};
    CHECK_NOTHROW(parse_instance(file));

    file["cocycle"] = json{{"entries", std::vector<int>(16, 1)}};
    CHECK_NOTHROW(parse_instance(file));

    file["cocycle"] = "mystery";
    CHECK_THROWS_WITH_AS(parse_instance(file), doctest::Contains("MalformedInstance"),
                         AlgebraError);

    file["cocycle"] = "trivial";
    file["f"] = std::vector<int>{2, 1, 1, 1};
    CHECK_THROWS_WITH_AS(parse_instance(file), doctest::Contains("InvalidFMap"),
                         AlgebraError);

    file["f"] = std::vector<int>{1, 1, 1};
    CHECK_THROWS_AS(parse_instance(file), AlgebraError);
}

TEST_CASE("invalid cocycle files keep their semantic error codes") {
    json file = {{"ring", {{"kind", "gfp"}, {"modulus", 3}}},
                 {"group", {{"family", "cyclic"}, {"n", 2}}},
                 {"cocycle", {{"entries", {1, 2, 1, 1}}}}};
    try {
        parse_instance(file);
        FAIL("expected NotNormalized");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == errc::NotNormalized);
        CHECK(exit_code_for(e) == 1);
    }
    AlgebraError malformed(errc::MalformedInstance, "x");
    CHECK(exit_code_for(malformed) == 2);
    AlgebraError not_inv(errc::NotAnInvolution, "x");
    CHECK(exit_code_for(not_inv) == 1);
}

TEST_CASE("bundled instances round-trip through serialization") {
    namespace fs = std::filesystem;
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(TWISTRING_DATA_DIR)) {
        if (entry.path().extension() != ".json") continue;
        ++seen;
        Instance first = load_instance(entry.path().string());
        json echoed = serialize_instance(first);
        Instance second = parse_instance(echoed);
        CAPTURE(entry.path().string());
        CHECK(same_instance(first, second));
    }
    CHECK(seen == 8);
}

TEST_CASE("element literals round-trip") {
    json file = {{"ring", {{"kind", "gfp"}, {"modulus", 5}}},
                 {"group", {{"family", "quaternion8"}}},
                 {"cocycle", "trivial"}};
    Instance inst = parse_instance(file);
    json literal = {{"elem", {{1, 2}, {4, 3}}}};
    TwistedElement x = parse_element(literal, *inst.cocycle);
    CHECK(x.coeff(1).value == 2);
    CHECK(x.coeff(4).value == 3);
    json echoed = serialize_element(x);
    TwistedElement y = parse_element(echoed, *inst.cocycle);
    CHECK(x == y);
    // zero coefficients vanish from the literal
    json zero = {{"elem", {{1, 2}, {1, 3}}}};
    CHECK(parse_element(zero, *inst.cocycle).is_zero());
}

TEST_CASE("classification reports serialize deterministically") {
    json file = {{"ring", {{"kind", "gfp"}, {"modulus", 3}}},
                 {"group", {{"family", "dihedral8"}}},
                 {"cocycle", "trivial"},
                 {"f", "one"}};
    Instance inst = parse_instance(file);
    auto report = classify(*inst.cocycle, *inst.f);
    json a = report_to_json(report);
    json b = report_to_json(classify(*inst.cocycle, *inst.f));
    CHECK(a.dump() == b.dump());
    CHECK(a["matched"].empty());
    CHECK(a["sufficiency"] == "not_applicable");
    CHECK(a["oracle"]["normal"] == false);
    CHECK(a["oracle"]["witness"] == json::array({1, 4}));
    CHECK(a["agreement"] == "consistent");
}
