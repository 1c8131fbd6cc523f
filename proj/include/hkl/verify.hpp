#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hkl/binary_tree.hpp"
#include "hkl/laurent.hpp"

namespace hkl {

struct SuiteReport {
  explicit SuiteReport(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void fail(std::string msg);  // keeps the first 50
  void merge(const SuiteReport& other);
  nlohmann::json toJson() const;
};

// sum_b Q^{I,-}_{a,b} Q^{II,-}_{b,c} (-1)^{|b|+|c|} = delta_{a,c}
SuiteReport verifyInversionBallot(int N, const CaseTag& kase);

// sum_b P^+_{flip b, flip x} P^-_{b,y} (-1)^{|b|+|y|} = delta_{x,y}
SuiteReport verifyInversionKL(int N, const CaseTag& kase);

// Ballot and binary-tree generating functions agree on every pair.
SuiteReport verifyQEqualsR(int N, const CaseTag& kase, const LabellingOptions& opt = {});

// varpi equals the canonical basis of M^-, and Q^{I,+} equals P^+ from M^+.
SuiteReport verifyVarpiCanonical(int N, const CaseTag& kase);

// Product over the coset word against varpi^A, and the T_i(p) product
// against both canonical bases in case A.
SuiteReport verifyFactorization(int N);

// P_{v12v',w1} = t^{2c} P_{vv',ww'} + P_{v21v',w1}, c the half height gap at the 12 of w1;
// in case A also P_{v1,w1} = (-t_N^2)^c P_{v,w}(t, t/t_N) + P_{v2,w1}, c = #1(v1) - #1(w1).
SuiteReport verifyRecurrences(int N, const CaseTag& kase);

// Labellings and Rule-I configurations: round trips, weights, image = Conf^I.
SuiteReport verifyBijection(int N, const CaseTag& kase);

std::vector<std::string> suiteNames();
// Runs one suite on every rank 1..maxN.  Throws std::invalid_argument on an unknown name.
SuiteReport runSuite(const std::string& name, int maxN, const CaseTag& kase);

}  // namespace hkl
