#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hkl/hecke_module.hpp"

namespace hkl {

using Arc = std::pair<int, int>;  // 1-based positions i < j

// Pairs each 1 with the nearest unmatched 2 to its left.
std::vector<Arc> matchTwoOne(const BinaryString& a);

struct LinkPatternA {
  int N = 0;
  std::vector<Arc> arcs;
  std::vector<int> oMarks;  // odd-numbered unpaired 2s from the right
  std::vector<int> eMarks;
  std::vector<int> circledOnes;
  nlohmann::json toJson() const;
};

struct LinkPatternB {
  int N = 0;
  int m = 1;
  std::vector<Arc> arcs;
  std::map<int, int> labeledVerticals;  // position -> p in 1..m
  std::vector<Arc> dottedPairs;
  std::vector<int> circledOnes;
  std::vector<int> circledTwos;
  nlohmann::json toJson() const;
};

LinkPatternA linkPatternA(const BinaryString& a);
LinkPatternB linkPatternB(const BinaryString& a, int m);

ModuleVector varpiA(const BinaryString& a);
ModuleVector varpiB(const BinaryString& a, int m);
ModuleVector varpi(const BinaryString& a, const CaseTag& kase);

// Coefficient of m_a in varpi(b): a monomial when a is obtained from b by
// flipping pieces of the link pattern, zero otherwise.
Laurent pMinusClosedFormA(const BinaryString& a, const BinaryString& b);
Laurent pMinusClosedFormB(const BinaryString& a, const BinaryString& b, int m);
Laurent pMinusClosedForm(const BinaryString& a, const BinaryString& b, const CaseTag& kase);

// The same with the bold-t prefactor removed, i.e. P^-_{a,b} itself.
Laurent pMinusFromClosedForm(const BinaryString& a, const BinaryString& b, const CaseTag& kase);

// varpi^B(2^{l+1}) against (T_N + t^-m) varpi^B(2^l 1) minus the correction sum,
// with an optional prefix of 1s.
bool checkVarpiBRecurrence(int prefixOnes, int l, int m);

}  // namespace hkl
