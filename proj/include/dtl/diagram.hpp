#pragma once

#include <string>
#include <tuple>
#include <vector>

namespace dtl {

enum class Family { brauer, tl, walled, partition, contour };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Parameters pinning down one diagram family at one size.
//  brauer / tl     : rank = n
//  walled          : rank = r + s, wall = r
//  partition       : rank = n (points per row), odd_level: T_n,B_n same block
//  contour         : rank = n, modulus = m, depth = d
struct DiagramParams {
  Family family = Family::brauer;
  int rank = 0;
  int wall = 0;
  bool odd_level = false;
  int modulus = 0;
  int depth = 0;

  auto key() const { return std::tie(family, rank, wall, odd_level, modulus, depth); }
  bool operator==(const DiagramParams& o) const { return key() == o.key(); }
  bool operator!=(const DiagramParams& o) const { return !(*this == o); }
  bool operator<(const DiagramParams& o) const { return key() < o.key(); }

  static DiagramParams brauer_n(int n) { return {Family::brauer, n, 0, false, 0, 0}; }
  static DiagramParams tl_n(int n) { return {Family::tl, n, 0, false, 0, 0}; }
  static DiagramParams walled_rs(int r, int s) { return {Family::walled, r + s, r, false, 0, 0}; }
  // partition algebra level k (A_k): rank = ceil(k/2) points per row
  static DiagramParams partition_level(int k) {
    return {Family::partition, (k + 1) / 2, 0, k % 2 == 1, 0, 0};
  }
  static DiagramParams contour_n(int n, int m, int d) {
    return {Family::contour, n, 0, false, m, d};
  }
  int partition_level() const { return odd_level ? 2 * rank - 1 : 2 * rank; }
};

// Vertex encoding: 0..n-1 are T1..Tn, n..2n-1 are B1..Bn.
inline int top_vertex(int i, int /*n*/) { return i - 1; }
inline int bottom_vertex(int i, int n) { return n + i - 1; }
std::string vertex_name(int v, int n);
int parse_vertex(const std::string& s, int n);

// A basis diagram in canonical form.  Blocks are sorted ascending and listed
// by first element; matchings are blocks of size two.  Contour diagrams carry
// one residue label per strand, parallel to `blocks`.
class Diagram {
 public:
  Diagram() = default;
  Diagram(DiagramParams params, std::vector<std::vector<int>> blocks,
          std::vector<int> labels = {});

  const DiagramParams& params() const { return params_; }
  int rank() const { return params_.rank; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& labels() const { return labels_; }

  bool is_matching() const;
  bool operator==(const Diagram& o) const {
    return params_ == o.params_ && blocks_ == o.blocks_ && labels_ == o.labels_;
  }
  bool operator<(const Diagram& o) const {
    return std::tie(params_, blocks_, labels_) < std::tie(o.params_, o.blocks_, o.labels_);
  }

  std::string str() const;

  // partner array for matchings: partner[v] = matched vertex
  std::vector<int> partners() const;
  // label of the strand containing v (contour); 0 otherwise
  int strand_label_at(int v) const;

 private:
  DiagramParams params_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> labels_;
  void canonicalize();
  void validate() const;
};

struct ComposeResult {
  int loops = 0;                 // closed loops / absorbed middle classes
  std::vector<int> loop_labels;  // contour: residue of each closed loop
  Diagram diagram;
};

// Product diagram of x*y: y stacked over x; loop data reported separately.
ComposeResult compose(const Diagram& x, const Diagram& y);

// Reflection in the horizontal axis; contour labels are negated mod m.
Diagram involute(const Diagram& x);

// Through strands (matchings) or propagating blocks (partition).
int through_count(const Diagram& x);

// Number of strands (s' != s) whose away-from-west boundary arc strictly
// contains strand s, plus one for s itself; planar diagrams only.
int strand_depth(const Diagram& x, std::size_t strand_index);
// depth of every strand, indexed like blocks()
std::vector<int> strand_depths(const Diagram& x);

bool is_noncrossing(const Diagram& x);
bool respects_wall(const Diagram& x);  // walled predicate

// Complete duplicate-free enumeration in canonical order.
std::vector<Diagram> enumerate_diagrams(const DiagramParams& params);

Diagram identity_diagram(const DiagramParams& params);
Diagram e_diagram(const DiagramParams& params, int j);          // brauer/tl/contour
Diagram s_diagram(const DiagramParams& params, int j);          // brauer/partition
Diagram p_diagram(const DiagramParams& params, int k);          // partition p_k
Diagram walled_e_diagram(const DiagramParams& params, int a, int b);
Diagram contour_label_diagram(const DiagramParams& params, int j, int residue);  // a^{(j)}

Diagram parse_diagram(const DiagramParams& params, const std::string& text);

// left-right mirror (columns reversed); used by the walled maps
Diagram mirror(const Diagram& x);

}  // namespace dtl
