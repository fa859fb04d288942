#ifndef TANGENTLAB_TOOLS_JSON_IO_HPP
#define TANGENTLAB_TOOLS_JSON_IO_HPP

#include <json.hpp>

#include "tangentlab/conditions.hpp"
#include "tangentlab/fibres.hpp"
#include "tangentlab/scenery.hpp"
#include "tangentlab/views.hpp"

namespace tangentlab::tools {

nlohmann::json to_json(const HypothesisReport& report);
nlohmann::json to_json(const GLStructure& gl);
nlohmann::json to_json(const ViewCover& view);
nlohmann::json to_json(const PatternReport& report);
nlohmann::json to_json(const std::vector<Interval>& intervals);
nlohmann::json to_json(const FibreComparison& cmp);
nlohmann::json to_json(const ZoomRow& row);
nlohmann::json to_json(const BoundaryReport& report);

/// Cells of a 1-D mask as a string of '0' and '1'.
std::string mask_string(const std::vector<bool>& mask);

}  // namespace tangentlab::tools

#endif
