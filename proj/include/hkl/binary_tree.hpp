#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hkl/ballot.hpp"
#include "hkl/laurent.hpp"
#include "hkl/strings_paths.hpp"

namespace hkl {

enum class EdgeKind {
  Pair,       // a matched 1...2
  Unpaired,   // unpaired 1, case A
  Terminal,   // one of the m rightmost unpaired 1s, case B
  DoubleOne,  // two unpaired 1s joined in case B; the edge sits at the left one
};

enum class EdgeMark { None, O, E, Plus };

std::string edgeKindName(EdgeKind k);
std::string edgeMarkName(EdgeMark m);

struct TreeEdge {
  int parent = -1;
  EdgeKind kind = EdgeKind::Pair;
  EdgeMark mark = EdgeMark::None;
  int pos = 0;  // 1-based position of the letter that opens the edge
  int end = 0;  // closing 2 of a pair, or the right 1 of a DoubleOne
  std::vector<int> children;
};

// Edges are stored parents first.
struct BinaryTree {
  BinaryString beta;
  CaseTag kase;
  std::vector<TreeEdge> edges;
  std::vector<std::pair<int, int>> arrows;  // (u, v): u immediately precedes v

  bool empty() const { return edges.empty(); }
  bool isLeaf(int e) const { return edges[e].children.empty(); }
  nlohmann::json toJson() const;
};

// Pairs each 1 with the nearest unmatched 2 to its right; keys are the 1s.
std::map<int, int> matchOneTwo(const BinaryString& b);

BinaryTree buildTree(const BinaryString& beta, const CaseTag& kase);

// Leaf edge -> capacity.  Throws std::domain_error unless alpha <= beta.
std::map<int, int> capacities(const BinaryTree& tree, const BinaryString& alpha);

using Labelling = std::vector<int>;

struct LabellingOptions {
  // Case B: compare against every edge earlier in an arrow chain, not only
  // the immediate predecessor.
  bool transitivePrecedence = true;
};

std::vector<Labelling> enumerateLabellings(const BinaryTree& tree, const std::map<int, int>& caps,
                                           const LabellingOptions& opt = {});

Laurent labellingWeight(const BinaryTree& tree, const Labelling& lab);

// Zero unless alpha <= beta.
Laurent rPolynomial(const BinaryString& alpha, const BinaryString& beta, const CaseTag& kase,
                    const LabellingOptions& opt = {});

// Stacks ballot paths layer by layer over each edge, then fills with single boxes.
// Throws std::logic_error if a path leaves the skew shape or overlaps.
StripConfiguration labellingToConfiguration(const BinaryString& alpha, const BinaryTree& tree,
                                            const Labelling& lab);
Labelling configurationToLabelling(const BinaryTree& tree, const StripConfiguration& conf);

}  // namespace hkl
