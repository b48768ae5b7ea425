#ifndef THF_JSON_IO_HPP
#define THF_JSON_IO_HPP

#include "thf/marking.hpp"
#include "thf/plmap.hpp"

#include <json.hpp>

#include <string>

namespace thf {

// Maps serialize as {"breakpoints": [["x","y"], ...]} with dyadics in
// their text form; markings as plain arrays of maps.  ordered_json keeps
// the output byte-stable.

nlohmann::ordered_json plmap_to_json(const PLMap& f);
PLMap plmap_from_json(const nlohmann::json& j);

nlohmann::ordered_json marking_to_json(const Marking& m);
Marking marking_from_json(const nlohmann::json& j);

// Parse text as JSON, with errors rewrapped as ParseError.
nlohmann::json parse_json(const std::string& text);

}  // namespace thf

#endif
