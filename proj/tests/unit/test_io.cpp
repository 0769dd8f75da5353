#include "fracture/core/errors.hpp"
#include "fracture/fracture/build.hpp"
#include "fracture/fracture/convert.hpp"
#include "fracture/fracture/demo.hpp"
#include "fracture/fracture/reconstruct.hpp"
#include "fracture/io/json.hpp"
#include "fracture/io/report.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fracture;
using io::Json;

namespace {

template <class T, class F>
void round_trip(const T& x, F parse) {
    std::string a = io::canonical(io::to_json(x));
    T y = parse(io::parse(a));
    CHECK(y == x);
    CHECK(io::canonical(io::to_json(y)) == a);
}

} // namespace

TEST_CASE("canonical JSON round trips") {
    round_trip(Ring::padic_integers(3), io::ring_from_json);
    round_trip(Ring::finite_adeles({2, 5}), io::ring_from_json);
    ChainComplex x = demo_input("Q-mod-Z", {});
    round_trip(x, io::complex_from_json);
    for (Flavor f : {Flavor::Adelic, Flavor::Separated, Flavor::Complete}) {
        CospanDiagram d = build(demo_input("random", {}, 4), {2, 3}, f);
        round_trip(d.nub, io::placewise_from_json);
        round_trip(d, io::diagram_from_json);
    }
}

TEST_CASE("canonical text has sorted keys and no whitespace") {
    Json j = {{"b", 1}, {"a", {1, 2}}};
    CHECK(io::canonical(j) == R"({"a":[1,2],"b":1})");
}

TEST_CASE("parsers reject malformed input") {
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Mismatch;
    };
    CHECK(code([] { io::parse("{"); }) == ErrorCode::Input);
    Json c = io::to_json(demo_input("Z", {}));
    c["extra"] = 1;
    CHECK(code([&] { io::complex_from_json(c); }) == ErrorCode::Input);
}

TEST_CASE("demo reports") {
    Json r = io::demo_report("zero", {2, 3});
    for (const auto& [flavor, t] : r["tables"].items()) {
        CHECK(t["vertex"] == "0");
        CHECK(t["nub"] == "0");
        CHECK(t["splice"] == "0");
    }
    Json q = io::demo_report("random", {2}, 9);
    CHECK(q["seed"] == 9);
    CHECK(io::golden_view(q).contains("tables"));
    try {
        io::demo_report("nope", {2});
        FAIL("expected UnknownDemo");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownDemo);
    }
}

TEST_CASE("pullback reports serialize") {
    CospanDiagram d = build_adelic(demo_input("Z", {}), {2, 3});
    Json j = io::to_json(verify_pullback(d, demo_input("Z", {})));
    CHECK(j["pullback"] == true);
}
