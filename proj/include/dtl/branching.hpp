#pragma once

#include "dtl/diagram.hpp"
#include "dtl/ring.hpp"
#include "dtl/symgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dtl {

// Vertex label of a branching diagram: the level of the base diagram the
// vertex reflects (`origin`) plus family content: Young diagram components
// and, for contour vertices, a character index of Z_m.
struct Label {
  int origin = 0;
  std::vector<YoungDiagram> shapes;
  int charge = -1;

  bool operator==(const Label& o) const {
    return origin == o.origin && shapes == o.shapes && charge == o.charge;
  }
  bool operator<(const Label& o) const;
  std::string str() const;
};

Label young_label(const YoungDiagram& d);                       // brauer / partition
Label tl_label(int k);                                          // through count
Label pair_label(const YoungDiagram& a, const YoungDiagram& b); // walled
Label contour_label(int origin, int charge);

Label parse_label(Family family, const std::string& text);

struct BranchingDiagram {
  std::vector<std::vector<Label>> levels;
  // edges[l]: (index at level l, index at level l+1), multiset
  std::vector<std::vector<std::pair<int, int>>> edges;

  int level_count() const { return static_cast<int>(levels.size()); }
  int index_of(int level, const Label& l) const;  // -1 if absent
  std::vector<int> lower_neighbors(int level, int idx) const;
  std::vector<int> upper_neighbors(int level, int idx) const;
  void validate() const;  // abstract branching-diagram invariants
};

// The reflected diagram: level k holds copies of base levels k, k-2, ...;
// (v,k) ~ (w,k+1) iff their base levels differ by one and v ~ w in the base.
BranchingDiagram reflect(const BranchingDiagram& base, int n_levels);

// Tower parameters: one sequence A_0 <= A_1 <= ... per family.
struct TowerParams {
  Family family = Family::brauer;
  int t = 0;        // walled: A_{2k} = B_{k,k+t}
  int modulus = 0;  // contour
  int depth = 0;    // contour

  DiagramParams level_params(int k) const;
  std::string str() const;
};

struct FamilyBranching {
  BranchingDiagram diagram;
  // tower level k sits at diagram level k + offset (walled augmentation)
  int offset = 0;

  const std::vector<Label>& tower_level(int k) const {
    return diagram.levels[static_cast<std::size_t>(k + offset)];
  }
  int diagram_level(int k) const { return k + offset; }
};

// base (quotient-tower) branching diagram of the family
BranchingDiagram quotient_branching(const TowerParams& params, int n_levels);
// the family's generic branching diagram, through tower level n_levels
FamilyBranching family_branching(const TowerParams& params, int n_levels);

Int count_paths(const BranchingDiagram& b, int level, int vertex);
// paths as label sequences from level 0, ordered lexicographically by the
// serialized labels
std::vector<std::vector<Label>> enum_paths(const BranchingDiagram& b, int level, int vertex);

}  // namespace dtl
