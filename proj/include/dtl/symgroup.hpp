#pragma once

#include "dtl/linalg.hpp"
#include "dtl/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace dtl {

// Permutation of {0..n-1}; p[i] is the image of i, composition (p*q)(i) = p[q[i]].
struct Perm {
  std::vector<int> img;

  explicit Perm(int n = 0) : img(n) {
    for (int i = 0; i < n; ++i) img[i] = i;
  }
  static Perm transposition(int n, int i);  // swaps i, i+1 (0-based)
  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }
  Perm operator*(const Perm& q) const;
  Perm inverse() const;
  int sign() const;
  // factorization into adjacent transpositions (indices 0..n-2)
  std::vector<int> adjacent_word() const;
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

std::vector<Perm> all_perms(int n);

// Young diagram as weakly decreasing positive row lengths.
struct YoungDiagram {
  std::vector<int> rows;

  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> r);
  int size() const;
  int row_count() const { return static_cast<int>(rows.size()); }
  bool operator==(const YoungDiagram& o) const { return rows == o.rows; }
  bool operator<(const YoungDiagram& o) const { return rows < o.rows; }
  std::string str() const;  // [3,1]
  static YoungDiagram parse(const std::string&);
};

std::vector<YoungDiagram> partitions_of(int n);
// strict dominance: a > b (same size)
bool dominates_strictly(const YoungDiagram& a, const YoungDiagram& b);
// 1 if shapes differ by adding/removing one box, else 0
int branching_multiplicity(const YoungDiagram& a, const YoungDiagram& b);
std::vector<YoungDiagram> add_one_box(const YoungDiagram& d);
std::vector<YoungDiagram> remove_one_box(const YoungDiagram& d);

// Standard tableau stored row by row with entries 1..n.
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> standard_tableaux(const YoungDiagram& shape);
long tableau_count(const YoungDiagram& shape);  // hook length formula

// Integral Specht module realized by standard polytabloids inside the
// tabloid permutation module.  Action matrices of adjacent transpositions
// are computed by exact solve against the polytabloid coordinate matrix.
class SpechtModule {
 public:
  explicit SpechtModule(YoungDiagram shape);

  const YoungDiagram& shape() const { return shape_; }
  int dim() const { return static_cast<int>(standard_.size()); }
  int group_rank() const { return shape_.size(); }
  const std::vector<Tableau>& standard_basis() const { return standard_; }

  // f x #tabloids integer matrix of polytabloid coordinates
  const std::vector<std::vector<Int>>& polytabloid_matrix() const { return poly_; }
  // action of adjacent transposition s_i (1-based i, swaps i,i+1)
  const std::vector<std::vector<Int>>& action(int i) const;
  std::vector<std::vector<Int>> action_of(const Perm& p) const;
  // Gram matrix of standard polytabloids (tabloid-orthonormal form)
  std::vector<std::vector<Int>> gram() const;

 private:
  YoungDiagram shape_;
  std::vector<Tableau> standard_;
  std::vector<std::vector<std::vector<int>>> tabloids_;  // rows as sorted sets
  std::map<std::vector<std::vector<int>>, int> tabloid_index_;
  std::vector<std::vector<Int>> poly_;
  std::vector<std::vector<std::vector<Int>>> actions_;  // [i-1] for s_i
  void build();
};

// Formal Z-linear combination of permutations.
using GroupAlgElem = std::map<Perm, Int>;
GroupAlgElem ga_mul(const GroupAlgElem& a, const GroupAlgElem& b);
GroupAlgElem ga_involute(const GroupAlgElem& a);  // w -> w^{-1}

// Group algebra handle for S_n (or S_a x S_b embedded in S_{a+b}).
class GroupAlgebra {
 public:
  explicit GroupAlgebra(int n) : n_(n) {}
  int n() const { return n_; }
  std::size_t dim() const;
  GroupAlgElem unit() const { return {{Perm(n_), Int(1)}}; }
  GroupAlgElem gen_s(int i) const { return {{Perm::transposition(n_, i - 1), Int(1)}}; }

 private:
  int n_;
};

// Murphy cellular element m_{st} = d(s)^{-1} * (sum of the row stabilizer of
// the row-reading tableau) * d(t), for standard s, t of the same shape.
GroupAlgElem murphy_element(const YoungDiagram& shape, const Tableau& s, const Tableau& t);
// the permutation d(t) with d(t) . t^shape = t (relabeling action)
Perm tableau_perm(const YoungDiagram& shape, const Tableau& t);

}  // namespace dtl
