// JSON census documents.

#ifndef TWOCOGRAPH_REPORT_HPP
#define TWOCOGRAPH_REPORT_HPP

#include "twocograph/enumerate.hpp"
#include "twocograph/io.hpp"

#include <json.hpp>

namespace twocograph {

/// Keys are emitted in a fixed order so reports diff cleanly.
inline nlohmann::ordered_json census_document(const ClassGReport& report) {
  nlohmann::ordered_json doc;
  doc["order"] = report.order;
  doc["graphs_scanned"] = report.graphs_scanned;
  doc["candidates_scanned"] = report.candidates_scanned;
  doc["members_total"] = report.members_total;
  doc["self_complementary"] = report.self_complementary;
  auto reps = nlohmann::ordered_json::array();
  for (const SmallGraph& g : report.representatives) reps.push_back(emit_graph6(g));
  doc["representatives"] = std::move(reps);
  doc["timing"] = {{"wall_seconds", report.wall_time.count()}};
  return doc;
}

}  // namespace twocograph

#endif  // TWOCOGRAPH_REPORT_HPP
