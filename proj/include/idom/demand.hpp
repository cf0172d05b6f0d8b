#pragma once

#include "idom/graph.hpp"

namespace idom {

/// An obligation that a solution intersect `hitset`. `ghost` is the root-graph
/// id of the deleted vertex the demand exists to dominate, or -1 when the
/// demand did not come from a deletion.
struct Demand {
  long ghost = -1;
  VertexSet hitset;
};

}  // namespace idom
