#include "hkl/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hkl/ballot.hpp"
#include "hkl/hecke_module.hpp"
#include "hkl/linkpattern.hpp"

namespace hkl {

void SuiteReport::fail(std::string msg) {
  if (failures.size() < 50) failures.push_back(std::move(msg));
  else if (failures.size() == 50) failures.push_back("...");
}

void SuiteReport::merge(const SuiteReport& other) {
  checked += other.checked;
  for (const auto& f : other.failures) fail(f);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

nlohmann::json SuiteReport::toJson() const {
  return {{"suite", name}, {"checked", checked}, {"ok", ok()}, {"failures", failures}, {"notes", notes}};
}

namespace {

std::string tag(int N, const CaseTag& kase) { return "N=" + std::to_string(N) + " " + kase.name(); }

int ones(const BinaryString& s) { return static_cast<int>(std::count(s.begin(), s.end(), '1')); }

}  // namespace

SuiteReport verifyInversionBallot(int N, const CaseTag& kase) {
  SuiteReport rep{"inversion-ballot"};
  const auto inv = checkBallotInversion(N, kase);
  rep.checked = inv.pairsChecked;
  for (const auto& v : inv.violations) rep.fail(tag(N, kase) + " " + v);
  return rep;
}

SuiteReport verifyInversionKL(int N, const CaseTag& kase) {
  SuiteReport rep{"inversion-KL"};
  KLBasis plus(N, {Sign::Plus, kase});
  KLBasis minus(N, {Sign::Minus, kase});
  const auto S = allStrings(N);
  std::map<BinaryString, int> size;
  for (const auto& s : S) size[s] = static_cast<int>(boxCount(s, Sign::Plus));
  for (const auto& x : S)
    for (const auto& y : S) {
      Laurent total;
      for (const auto& b : S) {
        const Laurent term = plus.P(flipConvention(b), flipConvention(x)) * minus.P(b, y);
        total += (size[b] + size[y]) % 2 == 0 ? term : -term;
      }
      ++rep.checked;
      if (total != (x == y ? Laurent(1) : Laurent()))
        rep.fail(tag(N, kase) + " " + x + "," + y + ": " + total.str());
    }
  return rep;
}

SuiteReport verifyQEqualsR(int N, const CaseTag& kase, const LabellingOptions& opt) {
  SuiteReport rep{"Q-equals-R"};
  const auto S = allStrings(N);
  for (const auto& a : S)
    for (const auto& b : S) {
      if (!bruhatLeq(a, b, Sign::Plus)) continue;
      ++rep.checked;
      const Laurent q = qPolynomial(a, b, Sign::Plus, Rule::I, kase);
      const Laurent r = rPolynomial(a, b, kase, opt);
      if (q != r) rep.fail(tag(N, kase) + " " + a + "," + b + ": Q=" + q.str() + " R=" + r.str());
    }
  return rep;
}

SuiteReport verifyVarpiCanonical(int N, const CaseTag& kase) {
  SuiteReport rep{"varpi-equals-canonical"};
  KLBasis minus(N, {Sign::Minus, kase});
  KLBasis plus(N, {Sign::Plus, kase});
  const auto S = allStrings(N);
  for (const auto& b : S) {
    ++rep.checked;
    const auto v = varpi(b, kase);
    if (v != minus.canonical(b))
      rep.fail(tag(N, kase) + " varpi(" + b + ") = " + formatVector(v) + " but C^- = " + formatVector(minus.canonical(b)));
  }
  for (const auto& a : S)
    for (const auto& b : S) {
      if (!bruhatLeq(a, b, Sign::Plus)) continue;
      ++rep.checked;
      const Laurent q = qPolynomial(a, b, Sign::Plus, Rule::I, kase);
      const Laurent p = plus.P(a, b);
      if (q != p) rep.fail(tag(N, kase) + " " + a + "," + b + ": Q^{I,+}=" + q.str() + " P^+=" + p.str());
    }
  return rep;
}

SuiteReport verifyFactorization(int N) {
  SuiteReport rep{"factorization"};
  const CaseTag A = CaseTag::caseA();
  KLBasis minus(N, {Sign::Minus, A});
  KLBasis plus(N, {Sign::Plus, A});
  int matchPlus = 0, matchMinus = 0;
  for (const auto& a : allStrings(N)) {
    ++rep.checked;
    if (factorizedAMinus(a) != varpiA(a)) rep.fail(tag(N, A) + " coset-word product differs from varpi(" + a + ")");
    ModuleVector c;
    try {
      c = factorizedTildeC(a, Sign::Plus);
    } catch (const std::domain_error&) {
      rep.fail(tag(N, A) + " " + a + ": bracket denominator does not clear");
      continue;
    }
    const bool p = c == plus.canonical(a);
    bool m = false;
    try {
      m = factorizedTildeC(a, Sign::Minus) == minus.canonical(a);
    } catch (const std::domain_error&) {
    }
    matchPlus += p;
    matchMinus += m;
    if (!p && !m) rep.fail(tag(N, A) + " T_i(p) product for " + a + " matches neither canonical basis");
  }
  rep.notes.push_back(tag(N, A) + ": T_i(p) product equals C^{A,+} for " + std::to_string(matchPlus) +
                      " strings and C^{A,-} for " + std::to_string(matchMinus) + " of " +
                      std::to_string(1 << N));
  return rep;
}

namespace {

// P on strings of any length, with the empty pair giving 1.
class PTable {
 public:
  explicit PTable(const CaseTag& kase) : kase_(kase) {}
  Laurent operator()(const BinaryString& a, const BinaryString& b) {
    if (a.empty()) return Laurent(1);
    const int N = static_cast<int>(a.size());
    auto it = bases_.find(N);
    if (it == bases_.end()) it = bases_.emplace(N, KLBasis(N, {Sign::Plus, kase_})).first;
    return it->second.P(a, b);
  }

 private:
  CaseTag kase_;
  std::map<int, KLBasis> bases_;
};

}  // namespace

SuiteReport verifyRecurrences(int N, const CaseTag& kase) {
  SuiteReport rep{"recurrences"};
  if (N < 2) return rep;
  PTable P(kase);
  const auto S = allStrings(N);
  const auto hts = [](const BinaryString& s) { return heights(s, Sign::Plus); };
  for (const auto& w1 : S)
    for (int k = 1; k < N; ++k) {
      if (w1.substr(k - 1, 2) != "12") continue;
      const BinaryString w = w1.substr(0, k - 1), wp = w1.substr(k + 1);
      for (const auto& v1 : S) {
        if (v1.substr(k - 1, 2) != "12") continue;
        if (!bruhatLeq(v1, w1, Sign::Plus)) continue;
        const BinaryString v = v1.substr(0, k - 1), vp = v1.substr(k + 1);
        const int c = (hts(v1)[k] - hts(w1)[k]) / 2;
        const Laurent lhs = P(v1, w1);
        const Laurent rhs = Laurent::t(2 * c) * P(v + vp, w + wp) + P(v + "21" + vp, w1);
        ++rep.checked;
        if (lhs != rhs)
          rep.fail(tag(N, kase) + " first recurrence at " + v1 + "," + w1 + " k=" + std::to_string(k) +
                   ": " + lhs.str() + " vs " + rhs.str());
      }
    }
  if (kase.isA()) {
    for (const auto& w : allStrings(N - 1))
      for (const auto& v : allStrings(N - 1)) {
        const BinaryString v1 = v + "1", w1 = w + "1";
        if (!bruhatLeq(v1, w1, Sign::Plus)) continue;
        const int c = ones(v1) - ones(w1);
        const Laurent lhs = P(v1, w1);
        const Laurent rhs = Laurent::monomial(0, 2 * c, c % 2 == 0 ? 1 : -1) * P(v, w).swapTN() + P(v + "2", w1);
        ++rep.checked;
        if (lhs != rhs)
          rep.fail(tag(N, kase) + " second recurrence at " + v1 + "," + w1 + ": " + lhs.str() + " vs " + rhs.str());
      }
  }
  return rep;
}

SuiteReport verifyBijection(int N, const CaseTag& kase) {
  SuiteReport rep{"bijection-roundtrip"};
  const auto S = allStrings(N);
  for (const auto& a : S)
    for (const auto& b : S) {
      if (!bruhatLeq(a, b, Sign::Plus)) continue;
      const std::string where = tag(N, kase) + " " + a + "," + b;
      const auto tree = buildTree(b, kase);
      const auto labs = enumerateLabellings(tree, capacities(tree, a));
      auto confs = enumerateConf(a, b, Sign::Plus, Rule::I, kase);
      std::set<StripConfiguration> conf(confs.begin(), confs.end());
      std::set<StripConfiguration> image;
      for (const auto& lab : labs) {
        ++rep.checked;
        StripConfiguration c;
        try {
          c = labellingToConfiguration(a, tree, lab);
        } catch (const std::logic_error& e) {
          rep.fail(where + ": " + e.what());
          continue;
        }
        if (!conf.count(c)) rep.fail(where + ": image of a labelling violates Rule I");
        if (configurationToLabelling(tree, c) != lab) rep.fail(where + ": labelling does not round trip");
        if (configurationWeight(c, kase, Rule::I) != labellingWeight(tree, lab)) rep.fail(where + ": weight changed");
        image.insert(std::move(c));
      }
      if (image != conf)
        rep.fail(where + ": " + std::to_string(image.size()) + " images for " + std::to_string(conf.size()) +
                 " configurations");
      for (const auto& c : conf) {
        ++rep.checked;
        try {
          if (labellingToConfiguration(a, tree, configurationToLabelling(tree, c)) != c)
            rep.fail(where + ": configuration does not round trip");
        } catch (const std::logic_error& e) {
          rep.fail(where + ": " + e.what());
        }
      }
    }
  return rep;
}

std::vector<std::string> suiteNames() {
  return {"inversion-ballot", "inversion-KL", "Q-equals-R", "varpi-equals-canonical",
          "factorization",    "recurrences",  "bijection-roundtrip"};
}

SuiteReport runSuite(const std::string& name, int maxN, const CaseTag& kase) {
  SuiteReport total{name};
  for (int N = 1; N <= maxN; ++N) {
    SuiteReport r;
    if (name == "inversion-ballot") r = verifyInversionBallot(N, kase);
    else if (name == "inversion-KL") r = verifyInversionKL(N, kase);
    else if (name == "Q-equals-R") r = verifyQEqualsR(N, kase);
    else if (name == "varpi-equals-canonical") r = verifyVarpiCanonical(N, kase);
    else if (name == "factorization") r = verifyFactorization(N);
    else if (name == "recurrences") r = verifyRecurrences(N, kase);
    else if (name == "bijection-roundtrip") r = verifyBijection(N, kase);
    else throw std::invalid_argument("unknown suite: " + name);
    total.merge(r);
  }
  return total;
}

}  // namespace hkl
