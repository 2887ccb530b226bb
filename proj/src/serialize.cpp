#include "obstructa/serialize.hpp"

#include "obstructa/families.hpp"

namespace obstructa {

Json to_json(const Certificate& c) {
    Json j;
    j["tag"] = std::string(to_string(c.tag));
    j["parts"] = c.parts;
    return j;
}

Json to_json(const ClassificationRecord& r) {
    Json j;
    j["two_connected"] = r.two_connected;
    j["wheel_free"] = r.wheel_free;
    j["contains_3pc"] = r.contains_3pc;
    j["hamiltonian"] = r.hamiltonian;
    j["hc_obstruction"] = r.hc_obstruction;
    j["recognized_3pc"] = r.recognized_3pc ? Json(format_spec(*r.recognized_3pc)) : Json(nullptr);
    return j;
}

Json to_json(const ObstructionVerdict& v) {
    Json j;
    j["is_obstruction"] = v.is_obstruction;
    j["failure_reason"] = std::string(to_string(v.failure_reason));
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    return j;
}

Json to_json(const PipelineStep& s) {
    Json j;
    j["step"] = s.step;
    j["input_n"] = s.input_n;
    j["result"] = s.result;
    j["certificate"] = s.certificate ? to_json(*s.certificate) : Json(nullptr);
    return j;
}

Json to_json(const std::vector<PipelineStep>& steps) {
    Json j = Json::array();
    for (const auto& s : steps) j.push_back(to_json(s));
    return j;
}

}  // namespace obstructa
