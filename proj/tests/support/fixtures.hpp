#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cocseg/fca.hpp"

namespace fixtures {

// The six-object tourism context used as the worked example throughout the
// test suite.
inline cocseg::FormalContext tourism_context() {
  const std::vector<std::string> objects = {"apartment", "car",  "motor-bike",
                                            "excursion", "trip", "hotel"};
  const std::vector<std::string> attributes = {"bookable", "rentable",
                                               "driveable", "rideable",
                                               "joinable"};
  const std::vector<std::vector<bool>> incidence = {
      {1, 1, 0, 0, 0},  // apartment
      {1, 1, 1, 0, 0},  // car
      {1, 1, 1, 1, 0},  // motor-bike
      {1, 0, 0, 0, 1},  // excursion
      {1, 0, 0, 0, 1},  // trip
      {1, 0, 0, 0, 0},  // hotel
  };
  return cocseg::FormalContext::create(objects, attributes, incidence);
}

using NamedConcept =
    std::pair<std::set<std::string>, std::set<std::string>>;

// All six concepts of the tourism context, by name.
inline std::set<NamedConcept> tourism_concepts() {
  return {
      {{"apartment", "car", "motor-bike", "excursion", "trip", "hotel"},
       {"bookable"}},
      {{"apartment", "car", "motor-bike"}, {"bookable", "rentable"}},
      {{"car", "motor-bike"}, {"bookable", "rentable", "driveable"}},
      {{"motor-bike"}, {"bookable", "rentable", "driveable", "rideable"}},
      {{"excursion", "trip"}, {"bookable", "joinable"}},
      {{},
       {"bookable", "rentable", "driveable", "rideable", "joinable"}},
  };
}

inline NamedConcept named(const cocseg::FormalContext& ctx,
                          const cocseg::FormalConcept& c) {
  NamedConcept out;
  for (int g : c.extent) out.first.insert(ctx.objects[g]);
  for (int m : c.intent) out.second.insert(ctx.attributes[m]);
  return out;
}

// The ten quasi-tree edges read off the tourism lattice.
inline std::set<std::pair<std::string, std::string>> tourism_taxonomy_edges() {
  return {
      {"bookable", "hotel"},     {"bookable", "joinable"},
      {"bookable", "rentable"},  {"joinable", "excursion"},
      {"joinable", "trip"},      {"rentable", "apartment"},
      {"rentable", "driveable"}, {"driveable", "car"},
      {"driveable", "rideable"}, {"rideable", "motor-bike"},
  };
}

}  // namespace fixtures
