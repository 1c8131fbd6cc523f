#include "hkl/linkpattern.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hkl {

std::vector<Arc> matchTwoOne(const BinaryString& a) {
  std::vector<int> stack;
  std::vector<Arc> arcs;
  for (int k = 1; k <= static_cast<int>(a.size()); ++k) {
    if (a[k - 1] == '2') {
      stack.push_back(k);
    } else if (!stack.empty()) {
      arcs.emplace_back(stack.back(), k);
      stack.pop_back();
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

namespace {

struct Residue {
  std::vector<Arc> arcs;
  std::vector<int> ones;  // unpaired 1s, left to right
  std::vector<int> twos;  // unpaired 2s, left to right
};

Residue residue(const BinaryString& a) {
  validateString(a);
  Residue r;
  r.arcs = matchTwoOne(a);
  std::set<int> used;
  for (const auto& [i, j] : r.arcs) used.insert({i, j});
  for (int k = 1; k <= static_cast<int>(a.size()); ++k) {
    if (used.count(k)) continue;
    (a[k - 1] == '1' ? r.ones : r.twos).push_back(k);
  }
  return r;
}

nlohmann::json arcsJson(const std::vector<Arc>& arcs) {
  auto j = nlohmann::json::array();
  for (const auto& [a, b] : arcs) j.push_back({a, b});
  return j;
}

// Tensor product of local blocks: each block fixes some positions and
// offers weighted letter choices for them.
struct Block {
  std::vector<int> positions;
  std::vector<std::pair<std::string, Laurent>> choices;
};

ModuleVector expand(int N, const std::vector<Block>& blocks) {
  std::vector<std::pair<BinaryString, Laurent>> partial{{BinaryString(N, '?'), Laurent(1)}};
  for (const auto& blk : blocks) {
    std::vector<std::pair<BinaryString, Laurent>> next;
    for (const auto& [s, c] : partial)
      for (const auto& [letters, w] : blk.choices) {
        BinaryString t = s;
        for (std::size_t k = 0; k < blk.positions.size(); ++k) t[blk.positions[k] - 1] = letters[k];
        next.emplace_back(std::move(t), c * w);
      }
    partial.swap(next);
  }
  ModuleVector v;
  for (const auto& [s, c] : partial) {
    if (s.find('?') != std::string::npos) throw std::logic_error("uncovered position in link pattern");
    addScaled(v, basisVector(s), c);
  }
  return v;
}

Block arcBlock(const Arc& arc) {
  return {{arc.first, arc.second}, {{"21", Laurent(1)}, {"12", Laurent::t(-1)}}};
}

}  // namespace

nlohmann::json LinkPatternA::toJson() const {
  return {{"N", N}, {"arcs", arcsJson(arcs)}, {"o", oMarks}, {"e", eMarks}, {"circled1", circledOnes}};
}

nlohmann::json LinkPatternB::toJson() const {
  auto lab = nlohmann::json::object();
  for (const auto& [pos, p] : labeledVerticals) lab[std::to_string(pos)] = p;
  return {{"N", N},          {"m", m},
          {"arcs", arcsJson(arcs)}, {"verticals", lab},
          {"dotted", arcsJson(dottedPairs)}, {"circled1", circledOnes},
          {"circled2", circledTwos}};
}

LinkPatternA linkPatternA(const BinaryString& a) {
  const auto r = residue(a);
  LinkPatternA lp;
  lp.N = static_cast<int>(a.size());
  lp.arcs = r.arcs;
  lp.circledOnes = r.ones;
  for (std::size_t k = 0; k < r.twos.size(); ++k) {
    const int pos = r.twos[r.twos.size() - 1 - k];
    (k % 2 == 0 ? lp.oMarks : lp.eMarks).push_back(pos);
  }
  std::sort(lp.oMarks.begin(), lp.oMarks.end());
  std::sort(lp.eMarks.begin(), lp.eMarks.end());
  return lp;
}

LinkPatternB linkPatternB(const BinaryString& a, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const auto r = residue(a);
  LinkPatternB lp;
  lp.N = static_cast<int>(a.size());
  lp.m = m;
  lp.arcs = r.arcs;
  lp.circledOnes = r.ones;
  const int n = static_cast<int>(r.twos.size());
  auto fromRight = [&](int j) { return r.twos[n - j]; };  // j-th from the right, 1-based
  for (int j = 1; j <= n; ++j) {
    if (j <= m) {
      lp.labeledVerticals[fromRight(j)] = m + 1 - j;
    } else if ((j - m) % 2 == 1) {
      if (j + 1 <= n)
        lp.dottedPairs.emplace_back(fromRight(j + 1), fromRight(j));
      else
        lp.circledTwos.push_back(fromRight(j));
    }
  }
  std::sort(lp.dottedPairs.begin(), lp.dottedPairs.end());
  return lp;
}

ModuleVector varpiA(const BinaryString& a) {
  const auto lp = linkPatternA(a);
  std::vector<Block> blocks;
  for (const auto& arc : lp.arcs) blocks.push_back(arcBlock(arc));
  for (int k : lp.oMarks) blocks.push_back({{k}, {{"2", Laurent(1)}, {"1", Laurent::tN(-1)}}});
  for (int k : lp.eMarks) blocks.push_back({{k}, {{"2", Laurent(1)}, {"1", Laurent::monomial(-1, 1)}}});
  for (int k : lp.circledOnes) blocks.push_back({{k}, {{"1", Laurent(1)}}});
  return expand(lp.N, blocks);
}

ModuleVector varpiB(const BinaryString& a, int m) {
  const auto lp = linkPatternB(a, m);
  std::vector<Block> blocks;
  for (const auto& arc : lp.arcs) blocks.push_back(arcBlock(arc));
  for (const auto& [k, p] : lp.labeledVerticals)
    blocks.push_back({{k}, {{"2", Laurent(1)}, {"1", Laurent::monomial(-p, 0, (m - p) % 2 == 0 ? 1 : -1)}}});
  for (const auto& [i, j] : lp.dottedPairs)
    blocks.push_back({{i, j}, {{"22", Laurent(1)}, {"11", Laurent::t(-1)}}});
  for (int k : lp.circledOnes) blocks.push_back({{k}, {{"1", Laurent(1)}}});
  for (int k : lp.circledTwos) blocks.push_back({{k}, {{"2", Laurent(1)}}});
  return expand(lp.N, blocks);
}

ModuleVector varpi(const BinaryString& a, const CaseTag& kase) {
  return kase.isA() ? varpiA(a) : varpiB(a, kase.m);
}

namespace {

// Number of flipped arcs, or -1 if some arc is neither kept nor flipped.
int flippedArcs(const BinaryString& a, const std::vector<Arc>& arcs) {
  int d = 0;
  for (const auto& [i, j] : arcs) {
    const char x = a[i - 1], y = a[j - 1];
    if (x == '2' && y == '1') continue;
    if (x == '1' && y == '2') {
      ++d;
      continue;
    }
    return -1;
  }
  return d;
}

}  // namespace

Laurent pMinusClosedFormA(const BinaryString& a, const BinaryString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  const auto lp = linkPatternA(b);
  const int d = flippedArcs(a, lp.arcs);
  if (d < 0) return {};
  for (int k : lp.circledOnes)
    if (a[k - 1] != '1') return {};
  int dO = 0, dE = 0;
  for (int k : lp.oMarks) dO += a[k - 1] == '1';
  for (int k : lp.eMarks) dE += a[k - 1] == '1';
  // t^-d t_N^-dO (t/t_N)^-dE
  return Laurent::monomial(-d - dE, -dO + dE);
}

Laurent pMinusClosedFormB(const BinaryString& a, const BinaryString& b, int m) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  const auto lp = linkPatternB(b, m);
  int d = flippedArcs(a, lp.arcs);
  if (d < 0) return {};
  for (int k : lp.circledOnes)
    if (a[k - 1] != '1') return {};
  for (int k : lp.circledTwos)
    if (a[k - 1] != '2') return {};
  for (const auto& [i, j] : lp.dottedPairs) {
    if (a[i - 1] != a[j - 1]) return {};
    d += a[i - 1] == '1';
  }
  int sigma = 0;
  for (const auto& [k, p] : lp.labeledVerticals)
    if (a[k - 1] == '1') {
      sigma += m - p;
      d += p;
    }
  return Laurent::monomial(-d, 0, sigma % 2 == 0 ? 1 : -1);
}

Laurent pMinusClosedForm(const BinaryString& a, const BinaryString& b, const CaseTag& kase) {
  return kase.isA() ? pMinusClosedFormA(a, b) : pMinusClosedFormB(a, b, kase.m);
}

Laurent pMinusFromClosedForm(const BinaryString& a, const BinaryString& b, const CaseTag& kase) {
  return pMinusClosedForm(a, b, kase) * boldTDiff(b, a, kase);
}

bool checkVarpiBRecurrence(int prefixOnes, int l, int m) {
  const int N = prefixOnes + l + 1;
  const BinaryString pre(prefixOnes, '1');
  const HeckeAction act{Sign::Minus, CaseTag::caseB(m)};
  const ModuleVector lhs = varpiB(pre + BinaryString(l + 1, '2'), m);
  const ModuleVector base = varpiB(pre + BinaryString(l, '2') + "1", m);
  ModuleVector rhs = applyT(N, base, act);
  addScaled(rhs, base, Laurent::t(-m));
  for (int k = std::max(1, m - l + 1); k <= m; ++k) {
    const BinaryString s = pre + BinaryString(l - m + k - 1, '2') + "1" + BinaryString(m - k + 1, '2');
    const Laurent coef = (m - k) % 2 == 0 ? -angle(k - 1) : angle(k - 1);
    addScaled(rhs, varpiB(s, m), coef);
  }
  return lhs == rhs;
}

}  // namespace hkl
