#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "obstructa/families.hpp"
#include "obstructa/serialize.hpp"

using namespace obstructa;

TEST_CASE("classification record json") {
    const Json j = to_json(classify(complete_bipartite(2, 3)));
    CHECK(j.dump() ==
          R"({"two_connected":true,"wheel_free":true,"contains_3pc":true,"hamiltonian":false,"hc_obstruction":true,"recognized_3pc":"theta:2,2,2"})");
    CHECK(to_json(classify(complete_graph(4)))["recognized_3pc"].is_null());
}

TEST_CASE("certificates and verdicts") {
    const Json c = to_json(Certificate{CertificateTag::CutVertex, {{1}}});
    CHECK(c.dump() == R"({"tag":"CutVertex","parts":[[1]]})");

    const Json v = to_json(is_hc_obstruction(path_graph(3)));
    CHECK(v["is_obstruction"] == false);
    CHECK(v["failure_reason"] == "NotTwoConnected");
    CHECK(v["witness"]["tag"] == "CutVertex");
}

TEST_CASE("pipeline json") {
    const Json j = to_json(decompose_pipeline(cycle_graph(5)));
    REQUIRE(j.is_array());
    for (const auto& step : j) {
        CHECK(step.contains("step"));
        CHECK(step.contains("input_n"));
        CHECK(step.contains("certificate"));
    }
    CHECK(j.back()["certificate"]["tag"] == "HamCycle");
}
