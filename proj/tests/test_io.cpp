#include "doctest.h"
#include "ftft/catalog.hpp"
#include "ftft/errors.hpp"
#include "ftft/io.hpp"

using namespace ftft;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const StructuralError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("scalars in files") {
    for (Scalar x : {Scalar(0), Scalar(-7, 3), Scalar::I(), Scalar(mpq_class(3, 5), mpq_class(-4, 5))}) {
        Json j = to_json(x);
        CHECK(Scalar::parse(j.get<std::string>()) == x);
    }
    CHECK(Scalar::parse("3/5+4/5i") == Scalar(mpq_class(3, 5), mpq_class(4, 5)));
}

TEST_CASE("every catalog fixture round-trips and validates") {
    for (const auto& [name, params] : catalog_samples()) {
        std::string label = name;
        for (const auto& [k, v] : params) label += " --" + k + " " + v;
        CAPTURE(label);
        Document d = make_fixture(name, params);
        std::string text = dump(to_json(d));
        Document again = parse_document(text);
        CHECK(kind_of(again) == kind_of(d));
        CHECK(dump(to_json(again)) == text);
        Report r = check_document(again);
        CHECK_MESSAGE(r.ok(), r.str());
    }
}

TEST_CASE("catalog parameters") {
    CHECK_THROWS_AS(make_fixture("no-such-fixture"), UnsupportedInput);
    CHECK_THROWS_AS(make_fixture("clifford", {{"r", "1"}}), UnsupportedInput);
    CHECK_THROWS_AS(make_fixture("clifford", {{"p", "x"}}), StructuralError);
    CHECK_THROWS_AS(make_fixture("pin-minus-tft", {{"xt-square", "2"}}), StructuralError);
    auto a = std::get<Superalgebra>(make_fixture("clifford", {{"p", "1"}, {"q", "1"}}));
    CHECK(a.dim() == 4);
    auto t = std::get<Tft2dFile>(make_fixture("pin-minus-tft", {{"xt-parity", "1"}, {"xt-square", "-1"}}));
    CHECK(t.bundle.grading.order() == 4);
}

TEST_CASE("structural errors carry locations") {
    CHECK(contains(error_of("{\"kind\": \"superalgebra\",\n \"field\": }"), "line 2"));
    CHECK(contains(error_of("{\"kind\": \"nonsense\"}"), "unknown kind"));
    CHECK(contains(error_of("{\"kind\": \"superalgebra\", \"field\": \"C\", \"parity\": [0]}"), "missing field \"unit\""));
    CHECK(contains(error_of("{\"kind\": \"superalgebra\", \"field\": \"C\", \"parity\": [0], \"unit\": [\"1\"],"
                            " \"mult\": [[[\"x\"]]]}"),
                   ".mult[0][0][0]"));
    CHECK(contains(error_of("{\"kind\": \"bimodule\", \"left\": \"C\", \"right\": \"Q\", \"parity\": [0],"
                            " \"left_act\": [], \"right_act\": []}"),
                   ".right"));
    CHECK(contains(error_of("{\"kind\": \"fermionic_group\", \"elements\": [\"1\"], \"unit\": \"1\", \"c\": \"1\","
                            " \"theta\": {\"1\": 0}, \"mult\": [[\"2\"]]}"),
                   "$"));
}

TEST_CASE("algebra references by name") {
    std::string text = R"({"kind": "bimodule", "left": "complex-clifford-1", "right": "complex-clifford-1",
        "parity": [0, 1],
        "left_act": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]],
        "right_act": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]]})";
    Document d = parse_document(text);
    const auto& m = std::get<Bimodule>(d);
    CHECK(m.left->dim() == 2);
    CHECK(check_document(d).ok());
    CHECK(algebra_fixture("clifford-0-2").dim() == 4);
    CHECK(algebra_fixture("matrix-real-1-1").field() == Field::R);
    CHECK_THROWS_AS(algebra_fixture("clifford-x"), StructuralError);
}

TEST_CASE("broken files fail the right clause") {
    auto t = std::get<Tft2dFile>(make_fixture("pin-minus-tft"));
    Json j = to_json(t);
    // drop one basis vector from the T component
    j["components"]["T"].erase(j["components"]["T"].size() - 1);
    Report r = check_document(from_json(j));
    CHECK_FALSE(r.ok("decomposition"));

    // x_T x_T = 0 breaks strong grading
    Json k = to_json(t);
    const size_t d = t.bundle.ambient->dim();
    for (size_t x : t.bundle.components[1])
        for (size_t y : t.bundle.components[1])
            for (size_t z = 0; z < d; ++z) k["ambient"]["mult"][x][y][z] = "0";
    Report s = check_document(from_json(k));
    CHECK_FALSE(s.ok("strong-grading"));
}
