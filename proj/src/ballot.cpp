#include "hkl/ballot.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace hkl {

std::string ruleName(Rule r) { return r == Rule::I ? "I" : "II"; }

StripShape PlacedStrip::shape() const {
  const int rise = trace.back().j - trace.front().j;
  const int steps = static_cast<int>(trace.size()) - 1;
  return {(steps - rise) / 2, rise};
}

void StripConfiguration::normalize() { std::sort(strips.begin(), strips.end()); }

nlohmann::json StripConfiguration::toJson() const {
  auto arr = nlohmann::json::array();
  for (const auto& s : strips) {
    const auto sh = s.shape();
    arr.push_back({sh.l, sh.lPrime, s.start().i, s.start().j});
  }
  return arr;
}

bool isBallotTrace(const std::vector<Box>& trace) {
  if (trace.empty()) return false;
  const int y0 = trace.front().j;
  for (std::size_t k = 1; k < trace.size(); ++k) {
    if (trace[k].i != trace[k - 1].i + 1) return false;
    if (std::abs(trace[k].j - trace[k - 1].j) != 1) return false;
    if (trace[k].j < y0) return false;
  }
  return true;
}

bool satisfiesRule0(const PlacedStrip& s, int N) {
  return s.shape().lPrime == 0 || s.end().i == N;
}

bool tiles(const StripConfiguration& c, const BoxSet& arena) {
  BoxSet seen;
  for (const auto& s : c.strips)
    for (const auto& b : s.trace)
      if (!arena.count(b) || !seen.insert(b).second) return false;
  return seen.size() == arena.size();
}

namespace {

std::map<Box, int> owners(const StripConfiguration& c) {
  std::map<Box, int> own;
  for (int k = 0; k < static_cast<int>(c.strips.size()); ++k)
    for (const auto& b : c.strips[k].trace) own[b] = k;
  return own;
}

int ownerOf(const std::map<Box, int>& own, const Box& b) {
  auto it = own.find(b);
  return it == own.end() ? -1 : it->second;
}

// Strips of length (l, l') with l' >= m: count even if l' - m is even, none otherwise.
bool ruleIb(const StripConfiguration& c, int m, bool perShape) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& s : c.strips) {
    const auto sh = s.shape();
    if (sh.lPrime < m) continue;
    ++count[{perShape ? sh.l : 0, sh.lPrime}];
  }
  for (const auto& [key, n] : count) {
    const bool evenLevel = (key.second - m) % 2 == 0;
    if (evenLevel ? n % 2 != 0 : n != 0) return false;
  }
  return true;
}

bool someBoxJustAbove(const PlacedStrip& upper, const PlacedStrip& lower) {
  for (const auto& b : lower.trace)
    if (std::find(upper.trace.begin(), upper.trace.end(), Box{b.i, b.j + 2}) != upper.trace.end())
      return true;
  return false;
}

bool ruleIIb(const StripConfiguration& c, int m) {
  for (const auto& d : c.strips) {
    const auto sh = d.shape();
    if (sh.lPrime < m) continue;
    const bool up = (sh.lPrime - m) % 2 == 0;
    bool found = false;
    for (const auto& e : c.strips) {
      const auto se = e.shape();
      if (up && se.lPrime == sh.lPrime + 1 && se.l >= sh.l && someBoxJustAbove(e, d)) found = true;
      if (!up && se.lPrime == sh.lPrime - 1 && se.l <= sh.l && someBoxJustAbove(d, e)) found = true;
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool validateRuleI(const StripConfiguration& c, const CaseTag& kase, const BallotOptions& opt) {
  const auto own = owners(c);
  for (int top = 0; top < static_cast<int>(c.strips.size()); ++top) {
    // Boxes just below the strip; those outside the arena count as foreign.
    std::set<int> below;
    for (const auto& b : c.strips[top].trace) below.insert(ownerOf(own, {b.i, b.j - 2}));
    if (below.size() > 1) return false;
  }
  if (!kase.isA() && !ruleIb(c, kase.m, opt.parityPerShape)) return false;
  return true;
}

bool validateRuleII(const StripConfiguration& c, const CaseTag& kase) {
  const auto own = owners(c);
  for (int d = 0; d < static_cast<int>(c.strips.size()); ++d) {
    // Just above, NW and NE of the strip; columns past N are ignored.
    std::vector<int> ups;
    for (const auto& b : c.strips[d].trace)
      for (const Box u : {Box{b.i, b.j + 2}, Box{b.i - 1, b.j + 1}, Box{b.i + 1, b.j + 1}})
        if (u.i <= c.N) ups.push_back(ownerOf(own, u));
    std::set<int> others;
    for (int k : ups)
      if (k != d) others.insert(k);
    others.erase(-1);
    for (int k : others)
      for (int o : ups)
        if (o != d && o != k) return false;
  }
  if (!kase.isA() && !ruleIIb(c, kase.m)) return false;
  return true;
}

std::vector<StripConfiguration> enumerateTilings(const BoxSet& arena, int N) {
  std::vector<Box> order(arena.begin(), arena.end());
  std::sort(order.begin(), order.end(),
            [](const Box& x, const Box& y) { return std::tie(x.j, x.i) < std::tie(y.j, y.i); });

  std::vector<StripConfiguration> out;
  BoxSet covered;
  StripConfiguration current;
  current.N = N;

  // Lowest, then leftmost uncovered box starts the next strip.
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    while (from < order.size() && covered.count(order[from])) ++from;
    if (from == order.size()) {
      auto done = current;
      done.normalize();
      out.push_back(std::move(done));
      return;
    }
    const Box start = order[from];
    std::vector<Box> path{start};
    auto grow = [&](auto&& g) -> void {
      const Box last = path.back();
      const int rise = last.j - start.j;
      if (rise == 0 || last.i == N) {
        current.strips.push_back({path});
        for (const auto& b : path) covered.insert(b);
        self(self, from + 1);
        for (const auto& b : path) covered.erase(b);
        current.strips.pop_back();
      }
      for (int dy : {1, -1}) {
        const Box nb{last.i + 1, last.j + dy};
        if (nb.j < start.j || !arena.count(nb) || covered.count(nb)) continue;
        path.push_back(nb);
        g(g);
        path.pop_back();
      }
    };
    grow(grow);
  };
  recurse(recurse, 0);
  return out;
}

std::vector<StripConfiguration> enumerateConf(const BinaryString& a, const BinaryString& b, Sign eps,
                                              Rule rule, const CaseTag& kase,
                                              const BallotOptions& opt) {
  const int N = static_cast<int>(a.size());
  const auto arena = skewShape(a, b, eps);
  std::vector<StripConfiguration> out;
  for (auto& c : enumerateTilings(arena, N)) {
    const bool ok = rule == Rule::I ? validateRuleI(c, kase, opt) : validateRuleII(c, kase);
    if (ok) out.push_back(std::move(c));
  }
  return out;
}

Laurent stripWeight(const StripShape& s, const CaseTag& kase, Rule rule) {
  const int sigma = rule == Rule::I ? 1 : -1;
  const int l = s.l, lp = s.lPrime;
  if (kase.isA()) {
    if (lp % 2 == 0) return Laurent::t(2 * l + lp);
    return Laurent::monomial(2 * l + lp - 1, 2, -sigma);
  }
  const int m = kase.m;
  if (lp <= m - 1) return Laurent::monomial(2 * l + 2 * lp, 0, lp % 2 == 0 ? 1 : sigma);
  if ((lp - m) % 2 == 0) return Laurent::t(m + lp + 2 * l);
  return Laurent::t(m + lp + 2 * l - 1);
}

Laurent configurationWeight(const StripConfiguration& c, const CaseTag& kase, Rule rule) {
  Laurent w(1);
  for (const auto& s : c.strips) w *= stripWeight(s.shape(), kase, rule);
  return w;
}

Laurent qPolynomial(const BinaryString& a, const BinaryString& b, Sign eps, Rule rule,
                    const CaseTag& kase, const BallotOptions& opt) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  if (!bruhatLeq(a, b, eps)) return {};
  Laurent q;
  for (const auto& c : enumerateConf(a, b, eps, rule, kase, opt)) q += configurationWeight(c, kase, rule);
  return q;
}

InversionReport checkBallotInversion(int N, const CaseTag& kase) {
  const auto S = allStrings(N);
  std::map<std::pair<BinaryString, BinaryString>, Laurent> qI, qII;
  for (const auto& a : S)
    for (const auto& b : S)
      if (bruhatLeq(a, b, Sign::Minus)) {
        qI[{a, b}] = qPolynomial(a, b, Sign::Minus, Rule::I, kase);
        qII[{a, b}] = qPolynomial(a, b, Sign::Minus, Rule::II, kase);
      }
  InversionReport rep;
  for (const auto& a : S)
    for (const auto& c : S) {
      Laurent total;
      const int sc = static_cast<int>(boxCount(c, Sign::Minus));
      for (const auto& b : S) {
        auto x = qI.find({a, b});
        auto y = qII.find({b, c});
        if (x == qI.end() || y == qII.end()) continue;
        const int sb = static_cast<int>(boxCount(b, Sign::Minus));
        Laurent term = x->second * y->second;
        total += (sb + sc) % 2 == 0 ? term : -term;
      }
      ++rep.pairsChecked;
      const Laurent expect = a == c ? Laurent(1) : Laurent();
      if (total != expect) rep.violations.push_back(a + "," + c + ": " + total.str());
    }
  return rep;
}

}  // namespace hkl
