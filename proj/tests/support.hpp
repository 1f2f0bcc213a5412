#pragma once

#include <string>
#include <vector>

#include "singraph/graph.hpp"

namespace testing_support {

using singraph::Int;

// Centre "c" with arms a<i>_<j>, listed from the centre outward.
inline singraph::WeightedDualGraph make_star(Int centre, const std::vector<std::vector<Int>>& arms) {
  std::vector<singraph::VertexSpec> vs{{"c", centre}};
  std::vector<singraph::EdgeSpec> es;
  for (std::size_t a = 0; a < arms.size(); ++a) {
    std::string prev = "c";
    for (std::size_t j = 0; j < arms[a].size(); ++j) {
      std::string id = "a" + std::to_string(a + 1) + "_" + std::to_string(j + 1);
      vs.push_back({id, arms[a][j]});
      es.push_back({prev, id});
      prev = id;
    }
  }
  return singraph::WeightedDualGraph(std::move(vs), std::move(es));
}

inline std::string corpus_path(const std::string& rel) { return std::string(SINGRAPH_CORPUS_DIR) + "/" + rel; }

}  // namespace testing_support
