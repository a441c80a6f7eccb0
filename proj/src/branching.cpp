#include "dtl/branching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace dtl {

bool Label::operator<(const Label& o) const {
  if (origin != o.origin) return origin < o.origin;
  if (shapes != o.shapes) return shapes < o.shapes;
  return charge < o.charge;
}

std::string Label::str() const {
  if (charge >= 0) {
    if (origin == 0) return "[]";
    return "z" + std::to_string(charge) + ":" + std::to_string(origin);
  }
  if (shapes.empty()) return std::to_string(origin);  // tl: through count
  if (shapes.size() == 1) return shapes[0].str();
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (i) os << ",";
    os << shapes[i].str();
  }
  os << "]";
  return os.str();
}

Label young_label(const YoungDiagram& d) {
  Label l;
  l.origin = d.size();
  l.shapes = {d};
  return l;
}

Label tl_label(int k) {
  Label l;
  l.origin = k;
  return l;
}

Label pair_label(const YoungDiagram& a, const YoungDiagram& b) {
  Label l;
  l.shapes = {a, b};
  l.origin = 0;  // caller fixes the base level
  return l;
}

Label contour_label(int origin, int charge) {
  Label l;
  l.origin = origin;
  l.charge = origin == 0 ? 0 : charge;
  return l;
}

Label parse_label(Family family, const std::string& text) {
  switch (family) {
    case Family::tl: {
      return tl_label(std::stoi(text));
    }
    case Family::brauer:
    case Family::partition:
      return young_label(YoungDiagram::parse(text));
    case Family::walled: {
      // [[a],[b]] — split at the top-level comma
      std::string t;
      for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
      if (t.size() < 4 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("walled label must be a pair: " + text);
      t = t.substr(1, t.size() - 2);
      int depth = 0;
      std::size_t cut = std::string::npos;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '[' || t[i] == '(') ++depth;
        if (t[i] == ']' || t[i] == ')') --depth;
        if (t[i] == ',' && depth == 0) {
          cut = i;
          break;
        }
      }
      if (cut == std::string::npos) throw std::invalid_argument("walled label: no comma");
      return pair_label(YoungDiagram::parse(t.substr(0, cut)),
                        YoungDiagram::parse(t.substr(cut + 1)));
    }
    case Family::contour: {
      if (text == "[]") return contour_label(0, 0);
      // z<charge>:<origin>
      if (text.size() < 4 || text[0] != 'z')
        throw std::invalid_argument("contour label: expected z<c>:<i> or []");
      auto colon = text.find(':');
      int c = std::stoi(text.substr(1, colon - 1));
      int i = std::stoi(text.substr(colon + 1));
      return contour_label(i, c);
    }
  }
  throw std::invalid_argument("parse_label: bad family");
}

int BranchingDiagram::index_of(int level, const Label& l) const {
  if (level < 0 || level >= level_count()) return -1;
  const auto& row = levels[static_cast<std::size_t>(level)];
  // serialized form identifies a vertex within its level
  std::string key = l.str();
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i].str() == key) return static_cast<int>(i);
  return -1;
}

std::vector<int> BranchingDiagram::lower_neighbors(int level, int idx) const {
  std::vector<int> out;
  if (level <= 0) return out;
  for (const auto& [lo, hi] : edges[static_cast<std::size_t>(level - 1)])
    if (hi == idx) out.push_back(lo);
  return out;
}

std::vector<int> BranchingDiagram::upper_neighbors(int level, int idx) const {
  std::vector<int> out;
  if (level + 1 >= level_count()) return out;
  for (const auto& [lo, hi] : edges[static_cast<std::size_t>(level)])
    if (lo == idx) out.push_back(hi);
  return out;
}

void BranchingDiagram::validate() const {
  if (levels.empty()) throw std::logic_error("branching diagram: no levels");
  if (edges.size() + 1 != levels.size())
    throw std::logic_error("branching diagram: edge row count mismatch");
  for (std::size_t l = 0; l < edges.size(); ++l)
    for (const auto& [lo, hi] : edges[l]) {
      if (lo < 0 || lo >= static_cast<int>(levels[l].size()) || hi < 0 ||
          hi >= static_cast<int>(levels[l + 1].size()))
        throw std::logic_error("branching diagram: edge endpoint out of range");
    }
  // every vertex above level 0 has a lower neighbor
  for (std::size_t l = 1; l < levels.size(); ++l)
    for (std::size_t v = 0; v < levels[l].size(); ++v)
      if (lower_neighbors(static_cast<int>(l), static_cast<int>(v)).empty())
        throw std::logic_error("branching diagram: vertex with no lower neighbor");
}

BranchingDiagram reflect(const BranchingDiagram& base, int n_levels) {
  BranchingDiagram out;
  out.levels.resize(static_cast<std::size_t>(n_levels) + 1);
  // vertex at reflected level k with base level i keeps its base label
  // (origin identifies i); record base index for edge generation
  std::vector<std::vector<std::pair<int, int>>> src(static_cast<std::size_t>(n_levels) + 1);
  for (int k = 0; k <= n_levels; ++k) {
    for (int i = k; i >= 0; i -= 2) {
      if (i >= base.level_count()) continue;
      for (std::size_t b = 0; b < base.levels[static_cast<std::size_t>(i)].size(); ++b) {
        out.levels[static_cast<std::size_t>(k)].push_back(
            base.levels[static_cast<std::size_t>(i)][b]);
        src[static_cast<std::size_t>(k)].push_back({i, static_cast<int>(b)});
      }
    }
  }
  out.edges.resize(static_cast<std::size_t>(n_levels));
  auto base_adjacent = [&](int i, int bi, int j, int bj) -> int {
    // number of base edges between (level i, index bi) and (level j, index bj)
    int lo_level = std::min(i, j);
    int lo = i < j ? bi : bj;
    int hi = i < j ? bj : bi;
    int count = 0;
    if (lo_level < 0 || lo_level >= static_cast<int>(base.edges.size())) return 0;
    for (const auto& [a, b] : base.edges[static_cast<std::size_t>(lo_level)])
      if (a == lo && b == hi) ++count;
    return count;
  };
  for (int k = 0; k < n_levels; ++k) {
    for (std::size_t v = 0; v < out.levels[static_cast<std::size_t>(k)].size(); ++v)
      for (std::size_t w = 0; w < out.levels[static_cast<std::size_t>(k) + 1].size(); ++w) {
        auto [i, bi] = src[static_cast<std::size_t>(k)][v];
        auto [j, bj] = src[static_cast<std::size_t>(k) + 1][w];
        if (std::abs(i - j) != 1) continue;
        int mult = base_adjacent(i, bi, j, bj);
        for (int e = 0; e < mult; ++e)
          out.edges[static_cast<std::size_t>(k)].push_back(
              {static_cast<int>(v), static_cast<int>(w)});
      }
  }
  out.validate();
  return out;
}

DiagramParams TowerParams::level_params(int k) const {
  switch (family) {
    case Family::brauer:
      return DiagramParams::brauer_n(k);
    case Family::tl:
      return DiagramParams::tl_n(k);
    case Family::contour:
      return DiagramParams::contour_n(k, modulus, depth);
    case Family::partition:
      return DiagramParams::partition_level(k);
    case Family::walled: {
      int half = k / 2;
      if (k % 2 == 0) return DiagramParams::walled_rs(half, half + t);
      return DiagramParams::walled_rs(half, half + t + 1);
    }
  }
  throw std::logic_error("level_params");
}

std::string TowerParams::str() const {
  std::string s = family_name(family);
  if (family == Family::walled) s += "(t=" + std::to_string(t) + ")";
  if (family == Family::contour)
    s += "(m=" + std::to_string(modulus) + ",d=" + std::to_string(depth) + ")";
  return s;
}

BranchingDiagram quotient_branching(const TowerParams& params, int n_levels) {
  BranchingDiagram b;
  b.levels.resize(static_cast<std::size_t>(n_levels) + 1);
  b.edges.resize(static_cast<std::size_t>(n_levels));
  auto add_edge = [&](int level, const Label& lo, const Label& hi) {
    int li = b.index_of(level, lo), hi_i = b.index_of(level + 1, hi);
    if (li >= 0 && hi_i >= 0)
      b.edges[static_cast<std::size_t>(level)].push_back({li, hi_i});
  };
  switch (params.family) {
    case Family::brauer: {
      // Young's lattice
      for (int l = 0; l <= n_levels; ++l)
        for (const auto& p : partitions_of(l))
          b.levels[static_cast<std::size_t>(l)].push_back(young_label(p));
      for (int l = 0; l < n_levels; ++l)
        for (const auto& lo : b.levels[static_cast<std::size_t>(l)])
          for (const auto& up : add_one_box(lo.shapes[0]))
            add_edge(l, lo, young_label(up));
      break;
    }
    case Family::tl: {
      for (int l = 0; l <= n_levels; ++l)
        b.levels[static_cast<std::size_t>(l)].push_back(tl_label(l));
      for (int l = 0; l < n_levels; ++l)
        b.edges[static_cast<std::size_t>(l)].push_back({0, 0});
      break;
    }
    case Family::partition: {
      // Q_{2n} = Q_{2n+1} = S_n: level l holds partitions of floor(l/2)
      for (int l = 0; l <= n_levels; ++l)
        for (const auto& p : partitions_of(l / 2))
          b.levels[static_cast<std::size_t>(l)].push_back(young_label(p));
      for (int l = 0; l < n_levels; ++l) {
        bool grows = (l + 1) / 2 > l / 2;
        for (const auto& lo : b.levels[static_cast<std::size_t>(l)]) {
          if (grows) {
            for (const auto& up : add_one_box(lo.shapes[0])) add_edge(l, lo, young_label(up));
          } else {
            add_edge(l, lo, lo);
          }
        }
      }
      break;
    }
    case Family::walled: {
      // even level 2k: (k, k+t); odd: (k, k+t+1); one box changes per step
      for (int l = 0; l <= n_levels; ++l) {
        int k = l / 2;
        int second = l % 2 == 0 ? k + params.t : k + params.t + 1;
        for (const auto& a : partitions_of(k))
          for (const auto& bshape : partitions_of(second)) {
            Label lab = pair_label(a, bshape);
            lab.origin = l;
            b.levels[static_cast<std::size_t>(l)].push_back(lab);
          }
      }
      for (int l = 0; l < n_levels; ++l)
        for (const auto& lo : b.levels[static_cast<std::size_t>(l)]) {
          if (l % 2 == 0) {
            for (const auto& up : add_one_box(lo.shapes[1])) {
              Label hi = pair_label(lo.shapes[0], up);
              hi.origin = l + 1;
              add_edge(l, lo, hi);
            }
          } else {
            for (const auto& up : add_one_box(lo.shapes[0])) {
              Label hi = pair_label(up, lo.shapes[1]);
              hi.origin = l + 1;
              add_edge(l, lo, hi);
            }
          }
        }
      break;
    }
    case Family::contour: {
      int m = params.modulus;
      int d = params.depth;
      if (d != 1)
        throw std::invalid_argument("contour branching implemented for depth bound d = 1");
      b.levels[0].push_back(contour_label(0, 0));
      for (int l = 1; l <= n_levels; ++l)
        for (int c = 0; c < m; ++c)
          b.levels[static_cast<std::size_t>(l)].push_back(contour_label(l, c));
      for (int l = 0; l < n_levels; ++l) {
        if (l == 0) {
          for (int c = 0; c < m; ++c)
            b.edges[0].push_back({0, c});
        } else {
          for (int c = 0; c < m; ++c) {
            int lo = b.index_of(l, contour_label(l, c));
            int hi = b.index_of(l + 1, contour_label(l + 1, c));
            b.edges[static_cast<std::size_t>(l)].push_back({lo, hi});
          }
        }
      }
      break;
    }
  }
  b.validate();
  return b;
}

namespace {

BranchingDiagram partition_family_branching(int n_levels) {
  // levels 2n and 2n+1 hold all Young diagrams of size <= n; going up from an
  // even level a box is removed or kept, from an odd level added or kept
  BranchingDiagram b;
  b.levels.resize(static_cast<std::size_t>(n_levels) + 1);
  b.edges.resize(static_cast<std::size_t>(n_levels));
  for (int l = 0; l <= n_levels; ++l)
    for (int sz = 0; sz <= l / 2; ++sz)
      for (const auto& p : partitions_of(sz))
        b.levels[static_cast<std::size_t>(l)].push_back(young_label(p));
  for (int l = 0; l < n_levels; ++l) {
    for (std::size_t vi = 0; vi < b.levels[static_cast<std::size_t>(l)].size(); ++vi) {
      const Label& lo = b.levels[static_cast<std::size_t>(l)][vi];
      std::vector<YoungDiagram> ups;
      if (l % 2 == 0) {
        ups = remove_one_box(lo.shapes[0]);
        ups.push_back(lo.shapes[0]);
      } else {
        ups = add_one_box(lo.shapes[0]);
        ups.push_back(lo.shapes[0]);
      }
      for (const auto& u : ups) {
        int hi = b.index_of(l + 1, young_label(u));
        if (hi >= 0)
          b.edges[static_cast<std::size_t>(l)].push_back({static_cast<int>(vi), hi});
      }
    }
  }
  b.validate();
  return b;
}

}  // namespace

FamilyBranching family_branching(const TowerParams& params, int n_levels) {
  FamilyBranching fb;
  switch (params.family) {
    case Family::brauer:
    case Family::tl:
    case Family::contour: {
      BranchingDiagram base = quotient_branching(params, n_levels);
      fb.diagram = reflect(base, n_levels);
      fb.offset = 0;
      break;
    }
    case Family::partition:
      fb.diagram = partition_family_branching(n_levels);
      fb.offset = 0;
      break;
    case Family::walled: {
      BranchingDiagram base = quotient_branching(params, n_levels);
      BranchingDiagram refl = reflect(base, n_levels);
      // augment with Young's lattice pairs ([], mu), |mu| < t, so that paths
      // start at ([], []) and reach the tower levels after `t` steps
      int t = params.t;
      BranchingDiagram aug;
      aug.levels.resize(static_cast<std::size_t>(t + n_levels) + 1);
      aug.edges.resize(static_cast<std::size_t>(t + n_levels));
      for (int l = 0; l < t; ++l)
        for (const auto& p : partitions_of(l)) {
          Label lab = pair_label(YoungDiagram(), p);
          lab.origin = l - t;  // below the tower
          aug.levels[static_cast<std::size_t>(l)].push_back(lab);
        }
      for (int l = 0; l <= n_levels; ++l)
        aug.levels[static_cast<std::size_t>(t + l)] = refl.levels[static_cast<std::size_t>(l)];
      for (int l = 0; l + 1 < t; ++l)
        for (std::size_t vi = 0; vi < aug.levels[static_cast<std::size_t>(l)].size(); ++vi) {
          const Label& lo = aug.levels[static_cast<std::size_t>(l)][vi];
          for (const auto& up : add_one_box(lo.shapes[1])) {
            Label hi = pair_label(YoungDiagram(), up);
            hi.origin = l + 1 - t;
            int hi_i = aug.index_of(l + 1, hi);
            if (hi_i >= 0)
              aug.edges[static_cast<std::size_t>(l)].push_back(
                  {static_cast<int>(vi), hi_i});
          }
        }
      if (t >= 1) {
        // connect augmentation level t-1 to tower level 0
        int l = t - 1;
        for (std::size_t vi = 0; vi < aug.levels[static_cast<std::size_t>(l)].size(); ++vi) {
          const Label& lo = aug.levels[static_cast<std::size_t>(l)][vi];
          for (const auto& up : add_one_box(lo.shapes[1])) {
            Label hi = pair_label(YoungDiagram(), up);
            hi.origin = 0;
            int hi_i = aug.index_of(t, hi);
            if (hi_i >= 0)
              aug.edges[static_cast<std::size_t>(l)].push_back({static_cast<int>(vi), hi_i});
          }
        }
      }
      for (int l = 0; l < n_levels; ++l)
        aug.edges[static_cast<std::size_t>(t + l)] = refl.edges[static_cast<std::size_t>(l)];
      aug.validate();
      fb.diagram = std::move(aug);
      fb.offset = t;
      break;
    }
  }
  return fb;
}

Int count_paths(const BranchingDiagram& b, int level, int vertex) {
  if (level < 0 || level >= b.level_count() || vertex < 0 ||
      vertex >= static_cast<int>(b.levels[static_cast<std::size_t>(level)].size()))
    throw std::invalid_argument("count_paths: unknown vertex");
  std::vector<std::vector<Int>> dp(static_cast<std::size_t>(level) + 1);
  dp[0].assign(b.levels[0].size(), 1);
  for (int l = 0; l < level; ++l) {
    dp[static_cast<std::size_t>(l) + 1].assign(b.levels[static_cast<std::size_t>(l) + 1].size(),
                                               0);
    for (const auto& [lo, hi] : b.edges[static_cast<std::size_t>(l)])
      dp[static_cast<std::size_t>(l) + 1][static_cast<std::size_t>(hi)] +=
          dp[static_cast<std::size_t>(l)][static_cast<std::size_t>(lo)];
  }
  return dp[static_cast<std::size_t>(level)][static_cast<std::size_t>(vertex)];
}

std::vector<std::vector<Label>> enum_paths(const BranchingDiagram& b, int level, int vertex) {
  if (level < 0 || level >= b.level_count() || vertex < 0 ||
      vertex >= static_cast<int>(b.levels[static_cast<std::size_t>(level)].size()))
    throw std::invalid_argument("enum_paths: unknown vertex");
  std::vector<std::vector<Label>> out;
  std::vector<int> cur{vertex};
  std::function<void(int, int)> walk = [&](int l, int v) {
    if (l == 0) {
      // cur holds vertices from `vertex` down to level 0
      std::vector<Label> path;
      for (int lev = 0; lev <= level; ++lev)
        path.push_back(b.levels[static_cast<std::size_t>(lev)]
                               [static_cast<std::size_t>(cur[static_cast<std::size_t>(level - lev)])]);
      out.push_back(std::move(path));
      return;
    }
    auto lows = b.lower_neighbors(l, v);
    std::sort(lows.begin(), lows.end());
    for (int lo : lows) {
      cur.push_back(lo);
      walk(l - 1, lo);
      cur.pop_back();
    }
  };
  walk(level, vertex);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string sa = a[i].str(), sb = b2[i].str();
      if (sa != sb) return sa < sb;
    }
    return false;
  });
  return out;
}

}  // namespace dtl
