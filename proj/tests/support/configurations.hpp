#pragma once

#include <string>
#include <vector>

#include "defcol/discharging.hpp"
#include "defcol/plane_graph.hpp"

namespace defcol::testing {

/// A small plane graph in which the final charge of `members` (summed) is
/// known in closed form. `expected` is that hand computation, written as
/// initial charge plus each incoming and outgoing transfer.
struct ChargeIdentity {
  std::string name;
  Section section;
  PlaneGraph graph;
  std::vector<Element> members;
  Charge expected;
};

std::vector<ChargeIdentity> charge_identities();

/// Id of the face whose boundary visits exactly `vertices` (as a set).
int face_on(const PlaneGraph& g, std::vector<Vertex> vertices);

}  // namespace defcol::testing
