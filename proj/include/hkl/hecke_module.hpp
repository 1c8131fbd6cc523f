#pragma once

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hkl/laurent.hpp"
#include "hkl/strings_paths.hpp"

namespace hkl {

// Finitely supported map string -> coefficient, i.e. sum c_a m_a.
using ModuleVector = std::map<BinaryString, Laurent>;

void addScaled(ModuleVector& v, const ModuleVector& w, const Laurent& p);
ModuleVector scaled(const ModuleVector& v, const Laurent& p);
ModuleVector basisVector(const BinaryString& a);
nlohmann::json toJson(const ModuleVector& v);
std::string formatVector(const ModuleVector& v);

struct HeckeAction {
  Sign eps = Sign::Minus;
  CaseTag kase = CaseTag::caseA();

  // t_N, or t^m in case B
  Laurent tN() const;
  // t - t^-1 for i < N, t_N - t_N^-1 for i = N
  Laurent gap(int i, int N) const;
};

ModuleVector applyT(int i, const ModuleVector& v, const HeckeAction& act);
ModuleVector applyTInverse(int i, const ModuleVector& v, const HeckeAction& act);
// Applies word[k] for k from the back to the front.
ModuleVector applyWord(const std::vector<int>& word, const ModuleVector& v, const HeckeAction& act);

// Bar involution, canonical basis and P extraction on one module.
// Results are memoised; one instance should not be shared between threads.
class KLBasis {
 public:
  KLBasis(int N, HeckeAction act);

  int rank() const { return N_; }
  const HeckeAction& action() const { return act_; }

  const ModuleVector& barOfBasis(const BinaryString& a);
  ModuleVector bar(const ModuleVector& v);
  const ModuleVector& canonical(const BinaryString& b);
  // P_{a,b}; zero unless a <= b.
  Laurent P(const BinaryString& a, const BinaryString& b);

 private:
  int N_;
  HeckeAction act_;
  std::map<BinaryString, ModuleVector> bars_;
  std::map<BinaryString, ModuleVector> canon_;
};

// Coefficient of m_a in C divided by bold t^{l(a)-l(b)}.
Laurent extractP(const ModuleVector& C, const BinaryString& a, const BinaryString& b,
                 const CaseTag& c);

// Product over the coset word of (T_i + t^-1) and (T_N + t_N^-1) on m_{1..1}.
ModuleVector factorizedAMinus(const BinaryString& a);

// r_{i,j} = max(r_{i-1,j-1}, r_{i+1,j-1}) + 1 on the + diagram.
std::map<Box, int> capacityTable(const BinaryString& a);

// (generator, r) pairs of the factorised element, leftmost factor first.
std::vector<std::pair<int, int>> tildeCFactors(const BinaryString& a);

// The factorised element built from T_i(p) in case A on the module of sign eps.
ModuleVector factorizedTildeC(const BinaryString& a, Sign eps);

}  // namespace hkl
