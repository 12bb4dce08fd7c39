#include "doctest.h"

#include "orex/json_io.hpp"
#include "orex/parse.hpp"
#include "orex/selfcheck.hpp"
#include "orex/version.hpp"

using namespace orex;

namespace {

const DerivationSpec kX2DDX{Scalar(1), Scalar(0), Poly::x(2)};

}  // namespace

TEST_CASE("spec and verdict serialization uses parseable strings") {
    const DerivationSpec spec{Scalar(2), Scalar(Rational(1, 2)), Poly::x(2) - Poly(1)};
    const Json js = describe(spec);
    CHECK(parse_scalar(js["q"].get<std::string>()) == spec.q);
    CHECK(parse_scalar(js["b"].get<std::string>()) == spec.b);
    CHECK(parse_poly(js["dx"].get<std::string>()) == spec.dx);

    const DiamondVerdict verdict = decide_diamond(spec);
    const Json jv = describe(verdict);
    CHECK(jv["satisfied"] == false);
    CHECK(jv["reason"] == "q_not_root_of_unity");
    CHECK(jv["sigma_order"].is_null());
    CHECK(jv["normal_form"]["kind"] == "quantum_weyl");
    CHECK(parse_scalar(jv["normal_form"]["iso"]["r"].get<std::string>()) ==
          verdict.normal_form.iso.r);

    const Json root = describe(decide_diamond({Scalar::zeta(3), Scalar(0), Poly()}));
    CHECK(root["satisfied"] == true);
    CHECK(root["sigma_order"] == 3);
}

TEST_CASE("certificates embed recomputed verification blocks") {
    const Scalar alpha(1);
    const SkewPoly u(kX2DDX, {Poly::x() - Poly(1), Poly(1)});
    const Json jw = describe(essentialize(u, alpha), alpha);
    CHECK(jw["type"] == "essential_multiplier");
    CHECK(jw["verification"]["product_equals_multiplier_times_input"] == true);
    CHECK(jw["verification"]["product_in_theta_multiples"] == true);
    CHECK(jw["verification"]["product_outside_point_ideal"] == true);
    CHECK(parse_skew(jw["data"]["input"].get<std::string>(), kX2DDX) == u);

    const Json jc = describe(chain_certificate(Poly::x(), Scalar(1), 3));
    CHECK(jc["type"] == "descending_chain");
    CHECK(jc["data"]["links"].size() == 3);
    CHECK(jc["data"]["links"][1]["element"] == "x^2");
    CHECK(jc["verification"]["stable_closures_match"] == true);
    CHECK(jc["verification"]["inclusions_strict"] == true);

    const auto cert = maximality_certificate(alpha, SkewPoly::theta(kX2DDX), 8);
    REQUIRE(cert.has_value());
    const Json jm = describe(*cert);
    CHECK(jm["type"] == "maximality_cofactor");
    CHECK(jm["verification"]["residue_is_one"] == true);
    CHECK(parse_skew(jm["data"]["cofactor"].get<std::string>(), kX2DDX) ==
          cert->cofactor);
}

TEST_CASE("multi-derivation results serialize") {
    const MultiDerivation d({MPoly::variable(2, 1), MPoly::constant(2, Scalar(0))});
    const Json jn = describe(check_locally_nilpotent(d, 16));
    CHECK(jn["certified"] == true);
    CHECK(jn["kind"] == "triangular");

    const Json jd = describe(lie_datum(d, 16));
    CHECK(jd["dim_h"] == 2);
    CHECK(jd["dim_g"] == 3);
    CHECK(jd["nilpotency_class"] == 2);
    CHECK(jd["v_set"].size() == 2);
}

TEST_CASE("report envelope carries tool identity and echoes") {
    const Json report =
        make_report("classify", Json{{"q", "2"}}, Json{{"satisfied", false}}, 1.5);
    CHECK(report["tool"] == "orex");
    CHECK(report["version"] == kVersion);
    CHECK(report["command"] == "classify");
    CHECK(report["input"]["q"] == "2");
    CHECK(report["result"]["satisfied"] == false);
    CHECK(report["timing_ms"] == 1.5);

    // Key order is fixed so identical runs emit byte-identical text.
    const std::string dumped = report.dump();
    CHECK(dumped.find("\"tool\"") < dumped.find("\"version\""));
    CHECK(dumped.find("\"version\"") < dumped.find("\"command\""));
    CHECK(dumped.find("\"input\"") < dumped.find("\"result\""));
}

TEST_CASE("acceptance suite passes and is deterministic per seed") {
    const auto a = run_acceptance_suite(20260817);
    REQUIRE(a.size() == 10);
    for (const CheckResult& r : a) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.passed);
    }
    CHECK(all_passed(a));

    const auto b = run_acceptance_suite(20260817);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].detail == b[i].detail);
    }

    const auto c = run_acceptance_suite(7);
    CHECK(all_passed(c));
}
