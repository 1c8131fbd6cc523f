#include "hkl/hecke_module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hkl {

void addScaled(ModuleVector& v, const ModuleVector& w, const Laurent& p) {
  if (p.isZero()) return;
  for (const auto& [a, c] : w) {
    auto& slot = v[a];
    slot += c * p;
    if (slot.isZero()) v.erase(a);
  }
}

ModuleVector scaled(const ModuleVector& v, const Laurent& p) {
  ModuleVector r;
  addScaled(r, v, p);
  return r;
}

ModuleVector basisVector(const BinaryString& a) { return {{a, Laurent(1)}}; }

nlohmann::json toJson(const ModuleVector& v) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [a, c] : v) j[a] = c.toJson();
  return j;
}

std::string formatVector(const ModuleVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (!first) os << " + ";
    os << "(" << it->second.str() << ")*m_" << it->first;
    first = false;
  }
  return os.str();
}

Laurent HeckeAction::tN() const { return kase.isA() ? Laurent::tN() : Laurent::t(kase.m); }

Laurent HeckeAction::gap(int i, int N) const {
  const Laurent x = i < N ? Laurent::t() : tN();
  return x - x.bar();
}

ModuleVector applyT(int i, const ModuleVector& v, const HeckeAction& act) {
  ModuleVector r;
  if (v.empty()) return r;
  const int N = static_cast<int>(v.begin()->first.size());
  if (i < 1 || i > N) throw std::out_of_range("generator index out of range");
  const Laurent gap = act.gap(i, N);
  const Laurent diag = act.eps == Sign::Plus ? Laurent::t() : -Laurent::t(-1);
  for (const auto& [a, c] : v) {
    if (i < N) {
      const char x = a[i - 1], y = a[i];
      if (x == y) {
        addScaled(r, basisVector(a), c * diag);
        continue;
      }
      BinaryString s = a;
      std::swap(s[i - 1], s[i]);
      addScaled(r, basisVector(s), c);
      if (x == '2') addScaled(r, basisVector(a), c * gap);
    } else {
      BinaryString s = a;
      s[N - 1] = a[N - 1] == '1' ? '2' : '1';
      addScaled(r, basisVector(s), c);
      if (a[N - 1] == '2') addScaled(r, basisVector(a), c * gap);
    }
  }
  return r;
}

ModuleVector applyTInverse(int i, const ModuleVector& v, const HeckeAction& act) {
  if (v.empty()) return {};
  const int N = static_cast<int>(v.begin()->first.size());
  ModuleVector r = applyT(i, v, act);
  addScaled(r, v, -act.gap(i, N));
  return r;
}

ModuleVector applyWord(const std::vector<int>& word, const ModuleVector& v, const HeckeAction& act) {
  ModuleVector r = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = applyT(*it, r, act);
  return r;
}

KLBasis::KLBasis(int N, HeckeAction act) : N_(N), act_(act) {
  if (N < 1) throw std::invalid_argument("N must be positive");
}

const ModuleVector& KLBasis::barOfBasis(const BinaryString& a) {
  validateString(a, N_);
  auto it = bars_.find(a);
  if (it != bars_.end()) return it->second;
  // m_a = T_w m_{1..1}, so bar(m_a) = T_{i1}^-1 ... T_{ik}^-1 m_{1..1}.
  const auto word = cosetWord(a, act_.eps);
  ModuleVector v = basisVector(BinaryString(N_, '1'));
  for (auto w = word.rbegin(); w != word.rend(); ++w) v = applyTInverse(*w, v, act_);
  return bars_.emplace(a, std::move(v)).first->second;
}

ModuleVector KLBasis::bar(const ModuleVector& v) {
  ModuleVector r;
  for (const auto& [a, c] : v) addScaled(r, barOfBasis(a), c.bar());
  return r;
}

const ModuleVector& KLBasis::canonical(const BinaryString& b) {
  validateString(b, N_);
  auto it = canon_.find(b);
  if (it != canon_.end()) return it->second;

  const Sign e = Sign::Plus;  // containment is the same for both signs
  std::vector<std::pair<std::size_t, BinaryString>> below;
  for (const auto& a : allStrings(N_))
    if (a != b && bruhatLeq(a, b, e)) below.emplace_back(boxCount(a, e), a);
  std::sort(below.begin(), below.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

  ModuleVector c = basisVector(b);
  std::vector<BinaryString> done{b};
  for (const auto& [size, g] : below) {
    // c_g - bar(c_g) = sum over a > g of bar(c_a) [m_g] bar(m_a)
    Laurent rhs;
    for (const auto& a : done) {
      if (!c.count(a) || !bruhatLeq(g, a, e)) continue;
      const auto& bm = barOfBasis(a);
      auto f = bm.find(g);
      if (f != bm.end()) rhs += f->second * c.at(a).bar();
    }
    Laurent neg, rest;
    for (const auto& [ex, k] : rhs.terms()) {
      auto& dst = inGammaMinus(ex.first, ex.second, act_.kase) ? neg : rest;
      dst += Laurent::monomial(ex.first, ex.second, k);
    }
    if (!(rest + neg.bar()).isZero())
      throw std::logic_error("canonical basis: no bar-invariant solution at " + g + " below " + b);
    if (!neg.isZero()) c[g] = neg;
    done.push_back(g);
  }
  return canon_.emplace(b, std::move(c)).first->second;
}

Laurent KLBasis::P(const BinaryString& a, const BinaryString& b) {
  if (!bruhatLeq(a, b, Sign::Plus)) return {};
  return extractP(canonical(b), a, b, act_.kase);
}

Laurent extractP(const ModuleVector& C, const BinaryString& a, const BinaryString& b,
                 const CaseTag& c) {
  auto it = C.find(a);
  if (it == C.end()) return {};
  return it->second * boldTDiff(b, a, c);
}

ModuleVector factorizedAMinus(const BinaryString& a) {
  validateString(a);
  const int N = static_cast<int>(a.size());
  const HeckeAction act{Sign::Minus, CaseTag::caseA()};
  ModuleVector v = basisVector(BinaryString(N, '1'));
  const auto word = cosetWord(a, Sign::Minus);
  for (auto w = word.rbegin(); w != word.rend(); ++w) {
    ModuleVector next = applyT(*w, v, act);
    addScaled(next, v, *w < N ? Laurent::t(-1) : Laurent::tN(-1));
    v = std::move(next);
  }
  return v;
}

std::map<Box, int> capacityTable(const BinaryString& a) {
  const auto d = stringToDiagram(a, Sign::Plus);
  std::vector<Box> order(d.boxes.begin(), d.boxes.end());
  std::sort(order.begin(), order.end(), [](const Box& x, const Box& y) { return x.j < y.j; });
  std::map<Box, int> r;
  auto at = [&](int i, int j) {
    auto it = r.find({i, j});
    return it == r.end() ? 0 : it->second;
  };
  for (const auto& b : order) r[b] = std::max(at(b.i - 1, b.j - 1), at(b.i + 1, b.j - 1)) + 1;
  return r;
}

std::vector<std::pair<int, int>> tildeCFactors(const BinaryString& a) {
  const auto d = stringToDiagram(a, Sign::Plus);
  const auto r = capacityTable(a);
  std::map<int, std::vector<Box>> columns;
  for (const auto& b : d.boxes) columns[b.j - b.i].push_back(b);
  std::vector<std::vector<Box>> cols;
  for (auto& [key, col] : columns) cols.push_back(col);
  std::stable_sort(cols.begin(), cols.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::vector<std::pair<int, int>> out;
  for (const auto& col : cols)
    for (const auto& b : col) out.emplace_back(b.i, r.at(b));
  return out;
}

ModuleVector factorizedTildeC(const BinaryString& a, Sign eps) {
  validateString(a);
  const int N = static_cast<int>(a.size());
  const HeckeAction act{eps, CaseTag::caseA()};
  const auto factors = tildeCFactors(a);
  // Each factor is scaled by [p] so everything stays a Laurent polynomial;
  // the product of the brackets is divided out at the end.
  ModuleVector v = basisVector(BinaryString(N, '1'));
  Laurent denominator(1);
  for (auto f = factors.rbegin(); f != factors.rend(); ++f) {
    const auto [i, p] = *f;
    const Laurent bp = bracket(p);
    ModuleVector next = scaled(applyT(i, v, act), bp);
    if (i < N) {
      addScaled(next, v, Laurent::t(-p));
    } else {
      const int lo = p / 2, hi = (p + 1) / 2;
      const Laurent extra =
          bracket(hi) * (Laurent::monomial(lo, 1) + Laurent::monomial(-lo, -1)) - bp * Laurent::tN();
      addScaled(next, v, extra);
    }
    v = std::move(next);
    denominator *= bp;
  }
  ModuleVector out;
  for (const auto& [s, c] : v) out[s] = c.divideExactT(denominator);
  return out;
}

}  // namespace hkl
