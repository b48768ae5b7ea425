#include "thf/json_io.hpp"

#include "thf/errors.hpp"

namespace thf {

nlohmann::ordered_json plmap_to_json(const PLMap& f) {
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const PLPoint& p : f.breakpoints()) pts.push_back({p.x.str(), p.y.str()});
    return nlohmann::ordered_json{{"breakpoints", std::move(pts)}};
}

PLMap plmap_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j["breakpoints"].is_array())
        throw ParseError("map JSON needs a \"breakpoints\" array");
    std::vector<PLPoint> pts;
    for (const auto& e : j["breakpoints"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError("each breakpoint must be a pair of dyadic strings");
        pts.push_back({Dyadic::parse(e[0].get<std::string>()), Dyadic::parse(e[1].get<std::string>())});
    }
    try {
        return PLMap::from_points(std::move(pts));
    } catch (const InvariantError& e) {
        throw ParseError(std::string("breakpoints do not describe a map: ") + e.what());
    }
}

nlohmann::ordered_json marking_to_json(const Marking& m) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const PLMap& f : m.images()) arr.push_back(plmap_to_json(f));
    return arr;
}

Marking marking_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("marking JSON must be a nonempty array of maps");
    std::vector<PLMap> images;
    for (const auto& e : j) images.push_back(plmap_from_json(e));
    return Marking(std::move(images));
}

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

}  // namespace thf
