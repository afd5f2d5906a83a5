#include "ordvis/json_io.hpp"

#include "ordvis/error.hpp"

namespace ordvis {

Json to_json(const Edge& e) { return Json::array({e.lo, e.hi}); }

Json to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) {
        out.push_back(to_json(e));
    }
    return out;
}

Json to_json(const HWitness& w) {
    return Json{{"u", w.u}, {"v", w.v}, {"seq_uv", to_json(w.seq_uv)}, {"seq_vu", to_json(w.seq_vu)}};
}

Json to_json(const HoleWitness& w) { return Json{{"cycle", w.cycle}}; }

Json to_json(const CappedViolation& w) {
    return Json{{"a", w.a}, {"b", w.b}, {"c", w.c}, {"d", w.d}};
}

Json to_json(const ColouringResult& r) {
    return Json{{"colours", r.colours},
                {"num_colours", r.num_colours},
                {"omega", r.omega},
                {"bound", r.bound},
                {"class", std::string(class_name(r.class_tag))}};
}

Json to_json(const CappedPartition& p) {
    Json parts = Json::array();
    for (const auto& part : p.parts) {
        parts.push_back(part);
    }
    return Json{{"parts", parts}};
}

std::vector<int> colours_from_json(const Json& j) {
    const Json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("colours")) {
            throw InputError("colouring JSON needs a \"colours\" array");
        }
        arr = &j.at("colours");
    }
    if (!arr->is_array()) {
        throw InputError("colours must be an array of integers");
    }
    std::vector<int> out;
    for (const Json& c : *arr) {
        if (!c.is_number_integer()) {
            throw InputError("colours must be an array of integers");
        }
        out.push_back(c.get<int>());
    }
    return out;
}

}  // namespace ordvis
