#pragma once

#include <kakeya/movement.hpp>
#include <kakeya/report.hpp>
#include <kakeya/scene.hpp>
#include <kakeya/topology.hpp>

#include <json.hpp>

namespace kakeya {

using Json = nlohmann::ordered_json;

Json to_json(Point p);
Point point_from_json(const Json& j);

// {"u":[re,im],"c":[re,im]}
Json to_json(const RigidMotion& m);
RigidMotion motion_from_json(const Json& j);

// {"kind":"elementary","alpha":{...}} | {"kind":"spliced","beta":{...},"n":...,
// "segment":{...}} | {"kind":"sampled","samples":[[t,{...}],...]}.
// Movements without a closed form serialize as a dense sample table.
Json to_json(const Movement& m);
Movement movement_from_json(const Json& j);

Json to_json(const Scene& scene);
Scene scene_from_json(const Json& j);

Json to_json(const CheckReport& r);
Json to_json(const ConstructionReport& r);
Json to_json(const BoundReport& r);

ObstructionCase obstruction_case_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace kakeya
