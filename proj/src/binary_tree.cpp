#include "hkl/binary_tree.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace hkl {

std::string edgeKindName(EdgeKind k) {
  switch (k) {
    case EdgeKind::Pair: return "pair";
    case EdgeKind::Unpaired: return "unpaired";
    case EdgeKind::Terminal: return "terminal";
    case EdgeKind::DoubleOne: return "11";
  }
  return "?";
}

std::string edgeMarkName(EdgeMark m) {
  switch (m) {
    case EdgeMark::None: return "";
    case EdgeMark::O: return "o";
    case EdgeMark::E: return "e";
    case EdgeMark::Plus: return "+";
  }
  return "?";
}

nlohmann::json BinaryTree::toJson() const {
  auto es = nlohmann::json::array();
  for (const auto& e : edges)
    es.push_back({{"parent", e.parent},
                  {"kind", edgeKindName(e.kind)},
                  {"mark", edgeMarkName(e.mark)},
                  {"pos", e.pos},
                  {"end", e.end}});
  auto ar = nlohmann::json::array();
  for (const auto& [u, v] : arrows) ar.push_back({u, v});
  return {{"beta", beta}, {"case", kase.name()}, {"edges", es}, {"arrows", ar}};
}

std::map<int, int> matchOneTwo(const BinaryString& b) {
  std::vector<int> stack;
  std::map<int, int> pairs;
  for (int k = 1; k <= static_cast<int>(b.size()); ++k) {
    if (b[k - 1] == '1') {
      stack.push_back(k);
    } else if (!stack.empty()) {
      pairs[stack.back()] = k;
      stack.pop_back();
    }
  }
  return pairs;
}

namespace {

enum class Role { O, E, Terminal, PairLeft, PairRight, Extra };

struct RoleInfo {
  Role role = Role::Extra;
  int label = 0;    // terminal index 1..m
  int partner = 0;  // right 1 of a PairLeft
};

}  // namespace

BinaryTree buildTree(const BinaryString& beta, const CaseTag& kase) {
  validateString(beta);
  const int N = static_cast<int>(beta.size());
  BinaryTree tree;
  tree.beta = beta;
  tree.kase = kase;

  const auto pairs = matchOneTwo(beta);
  std::set<int> closers;
  for (const auto& [i, j] : pairs) closers.insert(j);
  std::vector<int> fromRight;  // unpaired 1s, rightmost first
  for (int k = N; k >= 1; --k)
    if (beta[k - 1] == '1' && !pairs.count(k)) fromRight.push_back(k);

  std::map<int, RoleInfo> role;
  const int n = static_cast<int>(fromRight.size());
  for (int k = 1; k <= n; ++k) {
    const int p = fromRight[k - 1];
    if (kase.isA()) {
      role[p] = {k % 2 == 1 ? Role::O : Role::E};
      continue;
    }
    const int m = kase.m;
    if (k <= m) {
      role[p] = {Role::Terminal, m + 1 - k};
    } else if ((k - m) % 2 == 1) {
      if (k + 1 <= n) {
        role[p] = {Role::PairRight};
        role[fromRight[k]] = {Role::PairLeft, 0, p};
      } else {
        role[p] = {Role::Extra};
      }
    }
  }

  auto addEdge = [&](int parent, EdgeKind kind, EdgeMark mark, int pos, int end) {
    tree.edges.push_back({parent, kind, mark, pos, end, {}});
    const int id = static_cast<int>(tree.edges.size()) - 1;
    if (parent >= 0) tree.edges[parent].children.push_back(id);
    return id;
  };

  // Builds the forest of beta[lo, hi) under `parent`.  An edge for an
  // unpaired 1 sits above everything to its right.
  std::function<void(int, int, int)> grow = [&](int lo, int hi, int parent) {
    int k = lo;
    while (k < hi) {
      const char ch = beta[k - 1];
      if (ch == '2') {
        if (closers.count(k)) throw std::logic_error("unexpected closing 2 in tree build");
        ++k;
        continue;
      }
      if (auto it = pairs.find(k); it != pairs.end()) {
        const int e = addEdge(parent, EdgeKind::Pair, EdgeMark::None, k, it->second);
        grow(k + 1, it->second, e);
        k = it->second + 1;
        continue;
      }
      const RoleInfo& r = role.at(k);
      switch (r.role) {
        case Role::Extra:
        case Role::PairRight:
          ++k;
          continue;
        case Role::O:
        case Role::E: {
          const int e = addEdge(parent, EdgeKind::Unpaired, r.role == Role::O ? EdgeMark::O : EdgeMark::E,
                                k, N);
          grow(k + 1, hi, e);
          return;
        }
        case Role::Terminal: {
          const int e = addEdge(parent, EdgeKind::Terminal, r.label == 1 ? EdgeMark::Plus : EdgeMark::None,
                                k, N);
          grow(k + 1, hi, e);
          return;
        }
        case Role::PairLeft: {
          const int e = addEdge(parent, EdgeKind::DoubleOne, EdgeMark::Plus, k, r.partner);
          grow(k + 1, hi, e);
          return;
        }
      }
    }
  };
  grow(1, N + 1, -1);

  if (!kase.isA()) {
    std::map<int, int> edgeAt;
    for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) edgeAt[tree.edges[e].pos] = e;
    std::map<int, int> opener;  // closing 2 -> its 1
    for (const auto& [i, j] : pairs) opener[j] = i;
    for (int r = 0; kase.m + 2 * r <= n; ++r) {
      const int p = fromRight[kase.m + 2 * r - 1];
      // Irreducible balanced blocks immediately left of p, nearest first.
      std::vector<int> chain{edgeAt.at(p)};
      for (int q = p - 1; q >= 1 && opener.count(q);) {
        const int s = opener.at(q);
        chain.push_back(edgeAt.at(s));
        q = s - 1;
      }
      for (std::size_t k = 1; k < chain.size(); ++k) tree.arrows.emplace_back(chain[k - 1], chain[k]);
    }
  }
  return tree;
}

std::map<int, int> capacities(const BinaryTree& tree, const BinaryString& alpha) {
  const auto& beta = tree.beta;
  if (!bruhatLeq(alpha, beta, Sign::Plus)) throw std::domain_error(alpha + " is not below " + beta);
  const auto ha = heights(alpha, Sign::Plus);
  const auto hb = heights(beta, Sign::Plus);
  const int N = static_cast<int>(beta.size());
  const auto ones = [](const BinaryString& s) { return static_cast<int>(std::count(s.begin(), s.end(), '1')); };
  std::map<int, int> cap;
  for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
    if (!tree.isLeaf(e)) continue;
    const auto& edge = tree.edges[e];
    int c;
    if (edge.kind == EdgeKind::Pair) {
      if (edge.end != edge.pos + 1) throw std::logic_error("leaf pair is not adjacent");
      c = (ha[edge.pos] - hb[edge.pos]) / 2;
    } else {
      if (edge.pos != N) throw std::logic_error("unpaired leaf is not the last letter");
      c = ones(alpha) - ones(beta);
    }
    if (c < 0) throw std::logic_error("negative capacity");
    cap[e] = c;
  }
  return cap;
}

std::vector<Labelling> enumerateLabellings(const BinaryTree& tree, const std::map<int, int>& caps,
                                           const LabellingOptions& opt) {
  const int n = static_cast<int>(tree.edges.size());
  // A label is bounded by every leaf capacity below it.
  std::vector<int> bound(n, 0);
  for (int e = n - 1; e >= 0; --e) {
    if (tree.isLeaf(e)) {
      bound[e] = caps.at(e);
    } else {
      bound[e] = bound[tree.edges[e].children.front()];
      for (int c : tree.edges[e].children) bound[e] = std::min(bound[e], bound[c]);
    }
  }
  std::vector<std::set<int>> preds(n);
  for (const auto& [u, v] : tree.arrows) preds[v].insert(u);
  if (opt.transitivePrecedence) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        auto grown = preds[v];
        for (int u : preds[v]) grown.insert(preds[u].begin(), preds[u].end());
        if (grown != preds[v]) {
          preds[v] = std::move(grown);
          changed = true;
        }
      }
    }
  }

  const bool caseB = !tree.kase.isA();
  auto admissible = [&](const Labelling& lab) {
    if (!caseB) return true;
    for (int v = 0; v < n; ++v) {
      if (lab[v] % 2 == 0) continue;
      if (tree.edges[v].mark == EdgeMark::Plus) return false;
      if (preds[v].empty()) continue;
      if (std::all_of(preds[v].begin(), preds[v].end(), [&](int u) { return lab[v] <= lab[u]; })) return false;
    }
    return true;
  };

  std::vector<Labelling> out;
  Labelling lab(n, 0);
  std::function<void(int)> rec = [&](int e) {
    if (e == n) {
      if (admissible(lab)) out.push_back(lab);
      return;
    }
    const int parent = tree.edges[e].parent;
    for (int x = parent < 0 ? 0 : lab[parent]; x <= bound[e]; ++x) {
      lab[e] = x;
      rec(e + 1);
    }
  };
  rec(0);
  return out;
}

Laurent labellingWeight(const BinaryTree& tree, const Labelling& lab) {
  Laurent w(1);
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    const int x = lab[e];
    const Coeff s = x % 2 == 0 ? 1 : -1;
    if (!tree.kase.isA()) {
      w *= Laurent::t(2 * x);
      continue;
    }
    switch (tree.edges[e].mark) {
      case EdgeMark::O: w *= Laurent::monomial(0, 2 * x, s); break;
      case EdgeMark::E: w *= Laurent::monomial(2 * x, -2 * x, s); break;
      default: w *= Laurent::t(2 * x); break;
    }
  }
  return w;
}

Laurent rPolynomial(const BinaryString& alpha, const BinaryString& beta, const CaseTag& kase,
                    const LabellingOptions& opt) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("length mismatch");
  if (!bruhatLeq(alpha, beta, Sign::Plus)) return {};
  const auto tree = buildTree(beta, kase);
  const auto caps = capacities(tree, alpha);
  Laurent r;
  for (const auto& lab : enumerateLabellings(tree, caps, opt)) r += labellingWeight(tree, lab);
  return r;
}

namespace {

int rightEnd(const TreeEdge& e, int N) { return e.kind == EdgeKind::Pair ? e.end : N; }

// Placement order: 11 edges, then other unpaired edges, both leftmost
// first, then pairs by decreasing span.
std::vector<int> placementOrder(const BinaryTree& tree) {
  const int N = static_cast<int>(tree.beta.size());
  std::vector<int> doubles, singles, pairs;
  for (int e = 0; e < static_cast<int>(tree.edges.size()); ++e) {
    switch (tree.edges[e].kind) {
      case EdgeKind::DoubleOne: doubles.push_back(e); break;
      case EdgeKind::Pair: pairs.push_back(e); break;
      default: singles.push_back(e); break;
    }
  }
  auto byPos = [&](int x, int y) { return tree.edges[x].pos < tree.edges[y].pos; };
  std::stable_sort(doubles.begin(), doubles.end(), byPos);
  std::stable_sort(singles.begin(), singles.end(), byPos);
  std::stable_sort(pairs.begin(), pairs.end(), [&](int x, int y) {
    const auto& a = tree.edges[x];
    const auto& b = tree.edges[y];
    return rightEnd(a, N) - a.pos > rightEnd(b, N) - b.pos;
  });
  std::vector<int> order = doubles;
  order.insert(order.end(), singles.begin(), singles.end());
  order.insert(order.end(), pairs.begin(), pairs.end());
  return order;
}

}  // namespace

StripConfiguration labellingToConfiguration(const BinaryString& alpha, const BinaryTree& tree,
                                            const Labelling& lab) {
  const auto& beta = tree.beta;
  const int N = static_cast<int>(beta.size());
  const auto hb = heights(beta, Sign::Plus);
  const BoxSet region = skewShape(alpha, beta, Sign::Plus);

  std::vector<int> cover(N + 2, 0);
  std::vector<std::vector<Box>> paths;
  for (int e : placementOrder(tree)) {
    const auto& edge = tree.edges[e];
    const int parentLabel = edge.parent < 0 ? 0 : lab[edge.parent];
    const int first = edge.pos, last = rightEnd(edge, N);
    for (int r = 0; r < lab[e] - parentLabel; ++r) {
      int layer = 0;
      for (int s = first; s <= last; ++s) layer = std::max(layer, cover[s]);
      for (int s = first; s <= last; ++s) cover[s] = layer + 1;
      std::vector<Box> p;
      for (int x = first - 1; x <= last; ++x) p.push_back({x, hb[x] + 1 + 2 * layer});
      paths.push_back(std::move(p));
    }
  }

  // Join paths sharing an end box with a start box.
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t p = 0; p < paths.size() && !merged; ++p)
      for (std::size_t q = 0; q < paths.size(); ++q) {
        if (p == q || paths[p].back() != paths[q].front()) continue;
        paths[p].insert(paths[p].end(), paths[q].begin() + 1, paths[q].end());
        paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(q));
        merged = true;
        break;
      }
  }

  StripConfiguration conf;
  conf.N = N;
  BoxSet used;
  for (auto& p : paths) {
    for (const auto& b : p)
      if (!region.count(b) || !used.insert(b).second)
        throw std::logic_error("labelling places a path outside the skew shape");
    conf.strips.push_back({std::move(p)});
  }
  for (const auto& b : region)
    if (!used.count(b)) conf.strips.push_back({{b}});
  conf.normalize();
  return conf;
}

Labelling configurationToLabelling(const BinaryTree& tree, const StripConfiguration& conf) {
  const auto hb = heights(tree.beta, Sign::Plus);
  std::map<Box, Box> next;
  for (const auto& s : conf.strips)
    for (std::size_t k = 1; k < s.trace.size(); ++k) next[s.trace[k - 1]] = s.trace[k];
  Labelling lab(tree.edges.size(), 0);
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    const int i = tree.edges[e].pos;
    if (i == 1) continue;
    int n = 0;
    for (;; ++n) {
      const Box u{i - 1, hb[i - 1] + 1 + 2 * n};
      const Box v{i, hb[i] + 1 + 2 * n};
      auto it = next.find(u);
      if (it == next.end() || it->second != v) break;
    }
    lab[e] = n;
  }
  return lab;
}

}  // namespace hkl
