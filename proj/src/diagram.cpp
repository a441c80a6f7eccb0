#include "dtl/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dtl {

std::string family_name(Family f) {
  switch (f) {
    case Family::brauer: return "brauer";
    case Family::tl: return "tl";
    case Family::walled: return "walled";
    case Family::partition: return "partition";
    case Family::contour: return "contour";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "brauer") return Family::brauer;
  if (name == "tl") return Family::tl;
  if (name == "walled") return Family::walled;
  if (name == "partition") return Family::partition;
  if (name == "contour") return Family::contour;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string vertex_name(int v, int n) {
  if (v < n) return "T" + std::to_string(v + 1);
  return "B" + std::to_string(v - n + 1);
}

int parse_vertex(const std::string& s, int n) {
  if (s.size() < 2 || (s[0] != 'T' && s[0] != 'B'))
    throw std::invalid_argument("bad vertex '" + s + "'");
  int i = std::stoi(s.substr(1));
  if (i < 1 || i > n) throw std::invalid_argument("vertex index out of range: " + s);
  return s[0] == 'T' ? i - 1 : n + i - 1;
}

namespace {

// boundary position in the cyclic order T1..Tn, Bn..B1 (west cut before T1)
inline int boundary_pos(int v, int n) { return v < n ? v : 3 * n - v - 1; }

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Diagram::Diagram(DiagramParams params, std::vector<std::vector<int>> blocks,
                 std::vector<int> labels)
    : params_(params), blocks_(std::move(blocks)), labels_(std::move(labels)) {
  if (params_.family == Family::contour && labels_.empty())
    labels_.assign(blocks_.size(), 0);
  canonicalize();
  validate();
}

void Diagram::canonicalize() {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  std::vector<std::size_t> order(blocks_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return blocks_[a] < blocks_[b];
  });
  std::vector<std::vector<int>> nb;
  std::vector<int> nl;
  nb.reserve(blocks_.size());
  for (std::size_t i : order) {
    nb.push_back(std::move(blocks_[i]));
    if (!labels_.empty()) nl.push_back(labels_[i]);
  }
  blocks_ = std::move(nb);
  labels_ = std::move(nl);
  if (params_.family == Family::contour)
    for (auto& l : labels_) l = ((l % params_.modulus) + params_.modulus) % params_.modulus;
}

void Diagram::validate() const {
  int n = params_.rank;
  std::vector<int> seen(2 * n, 0);
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("Diagram: empty block");
    for (int v : b) {
      if (v < 0 || v >= 2 * n) throw std::invalid_argument("Diagram: vertex out of range");
      if (seen[v]++) throw std::invalid_argument("Diagram: repeated vertex");
    }
  }
  for (int v = 0; v < 2 * n; ++v)
    if (!seen[v]) throw std::invalid_argument("Diagram: uncovered vertex");

  switch (params_.family) {
    case Family::brauer:
      if (!is_matching()) throw std::invalid_argument("Brauer diagram must be a matching");
      break;
    case Family::tl:
      if (!is_matching() || !is_noncrossing(*this))
        throw std::invalid_argument("TL diagram must be a noncrossing matching");
      break;
    case Family::walled:
      if (!is_matching() || !respects_wall(*this))
        throw std::invalid_argument("walled diagram violates the wall condition");
      break;
    case Family::partition:
      if (params_.odd_level) {
        // T_n and B_n must lie in a common block
        for (const auto& b : blocks_) {
          bool tn = std::find(b.begin(), b.end(), n - 1) != b.end();
          bool bn = std::find(b.begin(), b.end(), 2 * n - 1) != b.end();
          if (tn != bn)
            throw std::invalid_argument("odd-level partition diagram: T_n,B_n not joined");
          if (tn) break;
        }
      }
      break;
    case Family::contour: {
      if (!is_matching() || !is_noncrossing(*this))
        throw std::invalid_argument("contour diagram must be a noncrossing matching");
      if (labels_.size() != blocks_.size())
        throw std::invalid_argument("contour diagram: label arity mismatch");
      auto depths = strand_depths(*this);
      for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (labels_[i] != 0 && depths[i] > params_.depth)
          throw std::invalid_argument("contour diagram: nonzero label beyond depth bound");
      break;
    }
  }
}

bool Diagram::is_matching() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const std::vector<int>& b) { return b.size() == 2; });
}

std::vector<int> Diagram::partners() const {
  std::vector<int> p(2 * params_.rank, -1);
  for (const auto& b : blocks_) {
    if (b.size() != 2) throw std::logic_error("partners(): not a matching");
    p[b[0]] = b[1];
    p[b[1]] = b[0];
  }
  return p;
}

int Diagram::strand_label_at(int v) const {
  if (labels_.empty()) return 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::find(blocks_[i].begin(), blocks_[i].end(), v) != blocks_[i].end())
      return labels_[i];
  return 0;
}

std::string Diagram::str() const {
  std::ostringstream os;
  int n = params_.rank;
  bool braces = params_.family == Family::partition;
  os << (braces ? "{" : "[");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ",";
    os << (braces ? "{" : "[");
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) os << ",";
      os << vertex_name(blocks_[i][j], n);
    }
    os << (braces ? "}" : "]");
    if (params_.family == Family::contour) os << ":" << labels_[i];
  }
  os << (braces ? "}" : "]");
  return os.str();
}

Diagram parse_diagram(const DiagramParams& params, const std::string& text) {
  int n = params.rank;
  std::vector<std::vector<int>> blocks;
  std::vector<int> labels;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("diagram parse error at position " + std::to_string(pos) +
                                  ": expected '" + std::string(1, c) + "'");
    ++pos;
  };
  char open = params.family == Family::partition ? '{' : '[';
  char close = params.family == Family::partition ? '}' : ']';
  expect(open);
  skip();
  while (pos < text.size() && text[pos] != close) {
    expect(open);
    std::vector<int> block;
    skip();
    while (pos < text.size() && text[pos] != close) {
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != ',' && text[pos] != close) ++pos;
      std::string name = text.substr(start, pos - start);
      name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
      block.push_back(parse_vertex(name, n));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip();
      }
    }
    expect(close);
    blocks.push_back(std::move(block));
    int label = 0;
    skip();
    if (params.family == Family::contour) {
      expect(':');
      skip();
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '-'))
        ++pos;
      label = std::stoi(text.substr(start, pos - start));
      skip();
    }
    labels.push_back(label);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip();
    }
  }
  expect(close);
  skip();
  if (pos != text.size())
    throw std::invalid_argument("diagram parse error at position " + std::to_string(pos) +
                                ": trailing input");
  if (params.family != Family::contour) labels.clear();
  return Diagram(params, std::move(blocks), std::move(labels));
}

bool is_noncrossing(const Diagram& x) {
  int n = x.rank();
  std::vector<std::pair<int, int>> iv;
  for (const auto& b : x.blocks()) {
    if (b.size() != 2) return false;
    int u = boundary_pos(b[0], n), v = boundary_pos(b[1], n);
    if (u > v) std::swap(u, v);
    iv.push_back({u, v});
  }
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (std::size_t j = i + 1; j < iv.size(); ++j) {
      auto [a, b] = iv[i];
      auto [c, d] = iv[j];
      bool c_inside = a < c && c < b;
      bool d_inside = a < d && d < b;
      if (c_inside != d_inside) return false;
    }
  return true;
}

bool respects_wall(const Diagram& x) {
  int n = x.rank(), r = x.params().wall;
  auto is_left = [&](int v) { return (v < n ? v : v - n) < r; };
  auto is_top = [&](int v) { return v < n; };
  for (const auto& b : x.blocks()) {
    if (b.size() != 2) return false;
    bool vertical = is_top(b[0]) != is_top(b[1]);
    if (vertical) {
      if (is_left(b[0]) != is_left(b[1])) return false;
    } else {
      if (is_left(b[0]) == is_left(b[1])) return false;
    }
  }
  return true;
}

int through_count(const Diagram& x) {
  int n = x.rank(), c = 0;
  for (const auto& b : x.blocks()) {
    bool top = false, bot = false;
    for (int v : b) (v < n ? top : bot) = true;
    if (top && bot) ++c;
  }
  return c;
}

std::vector<int> strand_depths(const Diagram& x) {
  int n = x.rank();
  std::vector<std::pair<int, int>> iv;
  for (const auto& b : x.blocks()) {
    int u = boundary_pos(b[0], n), v = boundary_pos(b[1], n);
    if (u > v) std::swap(u, v);
    iv.push_back({u, v});
  }
  std::vector<int> d(iv.size(), 1);
  for (std::size_t i = 0; i < iv.size(); ++i)
    for (std::size_t j = 0; j < iv.size(); ++j) {
      if (i == j) continue;
      if (iv[j].first < iv[i].first && iv[i].second < iv[j].second) ++d[i];
    }
  return d;
}

int strand_depth(const Diagram& x, std::size_t strand_index) {
  auto d = strand_depths(x);
  if (strand_index >= d.size()) throw std::invalid_argument("strand_depth: bad strand index");
  return d[strand_index];
}

Diagram involute(const Diagram& x) {
  int n = x.rank();
  std::vector<std::vector<int>> blocks;
  std::vector<int> labels;
  for (std::size_t i = 0; i < x.blocks().size(); ++i) {
    std::vector<int> nb;
    for (int v : x.blocks()[i]) nb.push_back(v < n ? v + n : v - n);
    blocks.push_back(std::move(nb));
    if (x.params().family == Family::contour) labels.push_back(-x.labels()[i]);
  }
  return Diagram(x.params(), std::move(blocks), std::move(labels));
}

Diagram mirror(const Diagram& x) {
  int n = x.rank();
  DiagramParams p = x.params();
  if (p.family == Family::walled) p.wall = n - p.wall;
  std::vector<std::vector<int>> blocks;
  std::vector<int> labels;
  for (std::size_t i = 0; i < x.blocks().size(); ++i) {
    std::vector<int> nb;
    for (int v : x.blocks()[i])
      nb.push_back(v < n ? n - 1 - v : n + (2 * n - 1 - v));
    blocks.push_back(std::move(nb));
    if (!x.labels().empty()) labels.push_back(x.labels()[i]);
  }
  return Diagram(p, std::move(blocks), std::move(labels));
}

namespace {

ComposeResult compose_matching(const Diagram& x, const Diagram& y) {
  int n = x.rank();
  auto px = x.partners();
  auto py = y.partners();
  int m = x.params().modulus;
  auto norm = [m](int l) { return m > 0 ? ((l % m) + m) % m : 0; };

  // outer vertices: 0..n-1 = y's top, n..2n-1 = x's bottom
  std::vector<int> out_partner(2 * n, -1);
  std::vector<int> out_label(2 * n, 0);
  std::vector<bool> mid_used(n, false);

  // walk from an outer vertex to the opposite outer endpoint
  auto trace = [&](int start) {
    bool in_y = start < n;
    int cur = in_y ? start : start;  // y vertex enc / x vertex enc coincide
    int label = 0;
    while (true) {
      const auto& part = in_y ? py : px;
      const Diagram& d = in_y ? y : x;
      int w = part[cur];
      label += d.strand_label_at(cur);
      if (in_y) {
        if (w < n) return std::pair<int, int>{w, label};  // outer top
        int j = w - n;
        mid_used[j] = true;
        in_y = false;
        cur = j;  // x top vertex j
      } else {
        if (w >= n) return std::pair<int, int>{n + (w - n), label};  // outer bottom
        int j = w;
        mid_used[j] = true;
        in_y = true;
        cur = n + j;  // y bottom vertex j
      }
    }
  };

  for (int v = 0; v < 2 * n; ++v) {
    if (out_partner[v] >= 0) continue;
    auto [w, label] = trace(v);
    out_partner[v] = w;
    out_partner[w] = v;
    int key = std::min(v, w);
    out_label[key] = norm(label);
  }

  ComposeResult res;
  for (int j = 0; j < n; ++j) {
    if (mid_used[j]) continue;
    // middle loop through column j
    int label = 0;
    int col = j;
    do {
      int w = py[n + col];  // y strand from its bottom
      label += y.strand_label_at(n + col);
      int c2 = w - n;
      mid_used[c2] = true;
      int w2 = px[c2];  // x strand from its top
      label += x.strand_label_at(c2);
      mid_used[w2] = true;
      col = w2;
    } while (col != j);
    ++res.loops;
    res.loop_labels.push_back(norm(label));
  }
  std::sort(res.loop_labels.begin(), res.loop_labels.end());

  std::vector<std::vector<int>> blocks;
  std::vector<int> labels;
  for (int v = 0; v < 2 * n; ++v) {
    if (out_partner[v] < v) continue;
    blocks.push_back({v, out_partner[v]});
    labels.push_back(out_label[v]);
  }
  if (x.params().family != Family::contour) labels.clear();
  res.diagram = Diagram(x.params(), std::move(blocks), std::move(labels));
  return res;
}

ComposeResult compose_partition(const Diagram& x, const Diagram& y) {
  int n = x.rank();
  // 0..n-1: outer top (y top); n..2n-1: middle; 2n..3n-1: outer bottom (x bottom)
  Dsu dsu(3 * n);
  for (const auto& b : y.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) dsu.unite(b[0], b[i]);  // y enc = 0..2n-1
  for (const auto& b : x.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) dsu.unite(b[0] + n, b[i] + n);
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < 3 * n; ++v) classes[dsu.find(v)].push_back(v);

  ComposeResult res;
  std::vector<std::vector<int>> blocks;
  for (auto& [root, vs] : classes) {
    std::vector<int> outer;
    for (int v : vs) {
      if (v < n)
        outer.push_back(v);  // top
      else if (v >= 2 * n)
        outer.push_back(v - n);  // bottom -> enc n..2n-1
    }
    if (outer.empty())
      ++res.loops;  // class absorbed in the middle row
    else
      blocks.push_back(std::move(outer));
  }
  res.diagram = Diagram(x.params(), std::move(blocks));
  return res;
}

}  // namespace

ComposeResult compose(const Diagram& x, const Diagram& y) {
  if (x.params() != y.params())
    throw std::invalid_argument("compose: family/rank mismatch");
  if (x.params().family == Family::partition) return compose_partition(x, y);
  return compose_matching(x, y);
}

namespace {

void enum_matchings(std::vector<int>& partner, int next, int total,
                    std::vector<std::vector<std::vector<int>>>& out) {
  while (next < total && partner[next] >= 0) ++next;
  if (next == total) {
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < total; ++v)
      if (partner[v] > v) blocks.push_back({v, partner[v]});
    out.push_back(std::move(blocks));
    return;
  }
  for (int w = next + 1; w < total; ++w) {
    if (partner[w] >= 0) continue;
    partner[next] = w;
    partner[w] = next;
    enum_matchings(partner, next + 1, total, out);
    partner[next] = partner[w] = -1;
  }
}

// noncrossing matchings of boundary positions [lo, hi)
void enum_noncrossing(int lo, int hi, std::vector<std::pair<int, int>>& cur,
                      std::vector<std::vector<std::pair<int, int>>>& out) {
  if (lo >= hi) {
    out.push_back(cur);
    return;
  }
  for (int w = lo + 1; w < hi; w += 2) {
    cur.push_back({lo, w});
    // inner segment (lo, w), outer segment (w, hi): combine recursively
    std::vector<std::vector<std::pair<int, int>>> inner;
    std::vector<std::pair<int, int>> tmp;
    enum_noncrossing(lo + 1, w, tmp, inner);
    for (auto& in : inner) {
      std::vector<std::pair<int, int>> base = cur;
      base.insert(base.end(), in.begin(), in.end());
      std::vector<std::vector<std::pair<int, int>>> outer;
      std::vector<std::pair<int, int>> tmp2;
      enum_noncrossing(w + 1, hi, tmp2, outer);
      for (auto& o : outer) {
        std::vector<std::pair<int, int>> full = base;
        full.insert(full.end(), o.begin(), o.end());
        out.push_back(std::move(full));
      }
    }
    cur.pop_back();
  }
}

int vertex_of_boundary_pos(int p, int n) { return p < n ? p : 3 * n - p - 1; }

std::vector<Diagram> enumerate_tl(const DiagramParams& params) {
  int n = params.rank;
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> cur;
  enum_noncrossing(0, 2 * n, cur, matchings);
  std::vector<Diagram> out;
  for (auto& m : matchings) {
    std::vector<std::vector<int>> blocks;
    for (auto [a, b] : m)
      blocks.push_back({vertex_of_boundary_pos(a, n), vertex_of_boundary_pos(b, n)});
    out.push_back(Diagram(params, std::move(blocks)));
  }
  return out;
}

void enum_set_partitions(int total, std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<int> assign(total, 0);
  // restricted growth strings
  std::vector<int> maxv(total, 0);
  int i = 0;
  assign[0] = 0;
  maxv[0] = 0;
  while (true) {
    if (i == total - 1) {
      std::vector<std::vector<int>> blocks(maxv[i] + 2);
      for (int v = 0; v < total; ++v) blocks[assign[v]].push_back(v);
      blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                  [](const std::vector<int>& b) { return b.empty(); }),
                   blocks.end());
      out.push_back(std::move(blocks));
      // advance
      while (i > 0 && assign[i] == maxv[i - 1] + 1) --i;
      if (i == 0) return;
      ++assign[i];
      maxv[i] = std::max(maxv[i - 1], assign[i]);
    } else {
      ++i;
      assign[i] = 0;
      maxv[i] = maxv[i - 1];
    }
  }
}

void enum_injections(const std::vector<int>& from, const std::vector<int>& to,
                     std::vector<std::vector<std::pair<int, int>>>& out) {
  std::vector<int> perm(to.begin(), to.end());
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::pair<int, int>> m;
    for (std::size_t i = 0; i < from.size(); ++i) m.push_back({from[i], perm[i]});
    out.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(idx);
      return;
    }
    for (int v = start; v < n; ++v) {
      idx[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
}

std::vector<Diagram> enumerate_walled(const DiagramParams& params) {
  int n = params.rank, r = params.wall, s = n - r;
  std::vector<Diagram> out;
  for (int k = 0; k <= std::min(r, s); ++k) {
    std::vector<std::vector<int>> lt, rt, lb, rb;
    subsets_of_size(r, k, lt);
    subsets_of_size(s, k, rt);
    subsets_of_size(r, k, lb);
    subsets_of_size(s, k, rb);
    for (const auto& A : lt)
      for (const auto& B : rt)
        for (const auto& C : lb)
          for (const auto& D : rb) {
            // top arcs A x B, bottom arcs C x D, throughs on the rest
            std::vector<int> Bv, Dv;
            for (int b : B) Bv.push_back(r + b);
            for (int d : D) Dv.push_back(r + d);
            std::vector<std::vector<std::pair<int, int>>> tops, bots, lth, rth;
            enum_injections(A, Bv, tops);
            enum_injections(C, Dv, bots);
            std::vector<int> lts, lbs, rts, rbs;
            for (int v = 0; v < r; ++v) {
              if (std::find(A.begin(), A.end(), v) == A.end()) lts.push_back(v);
              if (std::find(C.begin(), C.end(), v) == C.end()) lbs.push_back(v);
            }
            for (int v = 0; v < s; ++v) {
              if (std::find(B.begin(), B.end(), v) == B.end()) rts.push_back(r + v);
              if (std::find(D.begin(), D.end(), v) == D.end()) rbs.push_back(r + v);
            }
            enum_injections(lts, lbs, lth);
            enum_injections(rts, rbs, rth);
            for (const auto& t : tops)
              for (const auto& b : bots)
                for (const auto& l : lth)
                  for (const auto& rr : rth) {
                    std::vector<std::vector<int>> blocks;
                    for (auto [u, v] : t) blocks.push_back({u, v});
                    for (auto [u, v] : b) blocks.push_back({n + u, n + v});
                    for (auto [u, v] : l) blocks.push_back({u, n + v});
                    for (auto [u, v] : rr) blocks.push_back({u, n + v});
                    out.push_back(Diagram(params, std::move(blocks)));
                  }
            lth.clear();
            rth.clear();
          }
  }
  return out;
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(const DiagramParams& params) {
  std::vector<Diagram> out;
  int n = params.rank;
  switch (params.family) {
    case Family::brauer: {
      std::vector<std::vector<std::vector<int>>> ms;
      std::vector<int> partner(2 * n, -1);
      enum_matchings(partner, 0, 2 * n, ms);
      for (auto& b : ms) out.push_back(Diagram(params, std::move(b)));
      break;
    }
    case Family::tl:
      out = enumerate_tl(params);
      break;
    case Family::walled:
      out = enumerate_walled(params);
      break;
    case Family::partition: {
      std::vector<std::vector<std::vector<int>>> ps;
      if (n == 0) {
        out.push_back(Diagram(params, {}));
        break;
      }
      enum_set_partitions(2 * n, ps);
      for (auto& b : ps) {
        if (params.odd_level) {
          bool ok = false;
          for (const auto& blk : b) {
            bool tn = std::find(blk.begin(), blk.end(), n - 1) != blk.end();
            bool bn = std::find(blk.begin(), blk.end(), 2 * n - 1) != blk.end();
            if (tn && bn) ok = true;
            if (tn != bn) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
        }
        out.push_back(Diagram(params, std::move(b)));
      }
      break;
    }
    case Family::contour: {
      DiagramParams tlp = DiagramParams::tl_n(n);
      auto base = enumerate_tl(tlp);
      for (const auto& d : base) {
        Diagram cd(params, d.blocks());
        auto depths = strand_depths(cd);
        std::vector<std::size_t> free_strands;
        for (std::size_t i = 0; i < depths.size(); ++i)
          if (depths[i] <= params.depth) free_strands.push_back(i);
        std::vector<int> labels(d.blocks().size(), 0);
        std::size_t count = 1;
        for (std::size_t i = 0; i < free_strands.size(); ++i)
          count *= static_cast<std::size_t>(params.modulus);
        for (std::size_t code = 0; code < count; ++code) {
          std::size_t c = code;
          std::fill(labels.begin(), labels.end(), 0);
          for (std::size_t f : free_strands) {
            labels[f] = static_cast<int>(c % params.modulus);
            c /= params.modulus;
          }
          out.push_back(Diagram(params, d.blocks(), labels));
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) throw std::logic_error("enumerate_diagrams: duplicate");
  return out;
}

Diagram identity_diagram(const DiagramParams& params) {
  int n = params.rank;
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
  return Diagram(params, std::move(blocks));
}

Diagram e_diagram(const DiagramParams& params, int j) {
  int n = params.rank;
  if (j < 1 || j >= n) throw std::invalid_argument("e_diagram: index out of range");
  std::vector<std::vector<int>> blocks;
  blocks.push_back({j - 1, j});
  blocks.push_back({n + j - 1, n + j});
  for (int i = 0; i < n; ++i)
    if (i != j - 1 && i != j) blocks.push_back({i, n + i});
  return Diagram(params, std::move(blocks));
}

Diagram s_diagram(const DiagramParams& params, int j) {
  int n = params.rank;
  if (j < 1 || j >= n) throw std::invalid_argument("s_diagram: index out of range");
  std::vector<std::vector<int>> blocks;
  blocks.push_back({j - 1, n + j});
  blocks.push_back({j, n + j - 1});
  for (int i = 0; i < n; ++i)
    if (i != j - 1 && i != j) blocks.push_back({i, n + i});
  return Diagram(params, std::move(blocks));
}

Diagram p_diagram(const DiagramParams& params, int k) {
  int n = params.rank;
  int level = params.partition_level();
  if (k < 1 || k >= level) throw std::invalid_argument("p_diagram: index out of range");
  std::vector<std::vector<int>> blocks;
  if (k % 2 == 1) {
    int j = (k + 1) / 2;  // singletons at column j
    blocks.push_back({j - 1});
    blocks.push_back({n + j - 1});
    for (int i = 1; i <= n; ++i)
      if (i != j) blocks.push_back({i - 1, n + i - 1});
  } else {
    int j = k / 2;  // merged columns j, j+1
    blocks.push_back({j - 1, j, n + j - 1, n + j});
    for (int i = 1; i <= n; ++i)
      if (i != j && i != j + 1) blocks.push_back({i - 1, n + i - 1});
  }
  return Diagram(params, std::move(blocks));
}

Diagram walled_e_diagram(const DiagramParams& params, int a, int b) {
  int n = params.rank, r = params.wall;
  if (a < 1 || a > r || b <= r || b > n)
    throw std::invalid_argument("walled_e_diagram: arc must cross the wall");
  std::vector<std::vector<int>> blocks;
  blocks.push_back({a - 1, b - 1});
  blocks.push_back({n + a - 1, n + b - 1});
  for (int i = 1; i <= n; ++i)
    if (i != a && i != b) blocks.push_back({i - 1, n + i - 1});
  return Diagram(params, std::move(blocks));
}

Diagram contour_label_diagram(const DiagramParams& params, int j, int residue) {
  int n = params.rank;
  if (j < 1 || j > n) throw std::invalid_argument("contour_label_diagram: index out of range");
  std::vector<std::vector<int>> blocks;
  std::vector<int> labels;
  for (int i = 0; i < n; ++i) {
    blocks.push_back({i, n + i});
    labels.push_back(i == j - 1 ? residue : 0);
  }
  return Diagram(params, std::move(blocks), std::move(labels));
}

}  // namespace dtl
