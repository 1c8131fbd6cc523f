#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hkl/laurent.hpp"
#include "hkl/strings_paths.hpp"

namespace hkl {

enum class Rule { I, II };
std::string ruleName(Rule r);

struct StripShape {
  int l = 0;       // Dyck part
  int lPrime = 0;  // rise
  int boxCount() const { return 2 * l + lPrime + 1; }
  bool operator==(const StripShape&) const = default;
};

// A ballot strip: boxes at the vertices of a ballot path, left to right.
struct PlacedStrip {
  std::vector<Box> trace;

  StripShape shape() const;
  const Box& start() const { return trace.front(); }
  const Box& end() const { return trace.back(); }
  auto operator<=>(const PlacedStrip&) const = default;
};

// A set of strips, kept sorted so equal tilings compare equal.
struct StripConfiguration {
  int N = 0;
  std::vector<PlacedStrip> strips;

  void normalize();
  bool operator==(const StripConfiguration& o) const { return strips == o.strips; }
  bool operator<(const StripConfiguration& o) const { return strips < o.strips; }
  nlohmann::json toJson() const;
};

struct BallotOptions {
  // Case B, Rule I(b): parity per (l, l') (default) or per l' summed over l.
  bool parityPerShape = true;
};

bool isBallotTrace(const std::vector<Box>& trace);
bool satisfiesRule0(const PlacedStrip& s, int N);
bool tiles(const StripConfiguration& c, const BoxSet& arena);

bool validateRuleI(const StripConfiguration& c, const CaseTag& kase, const BallotOptions& opt = {});
bool validateRuleII(const StripConfiguration& c, const CaseTag& kase);

// Every tiling of the arena by ballot strips obeying Rule 0.
std::vector<StripConfiguration> enumerateTilings(const BoxSet& arena, int N);

std::vector<StripConfiguration> enumerateConf(const BinaryString& a, const BinaryString& b, Sign eps,
                                              Rule rule, const CaseTag& kase,
                                              const BallotOptions& opt = {});

Laurent stripWeight(const StripShape& s, const CaseTag& kase, Rule rule);
Laurent configurationWeight(const StripConfiguration& c, const CaseTag& kase, Rule rule);

// Sum of weights over Conf^rule(a, b); zero if a is not below b.
Laurent qPolynomial(const BinaryString& a, const BinaryString& b, Sign eps, Rule rule,
                    const CaseTag& kase, const BallotOptions& opt = {});

struct InversionReport {
  std::size_t pairsChecked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// sum_b Q^{I,-}_{a,b} Q^{II,-}_{b,c} (-1)^{|b|+|c|} = delta_{a,c}
InversionReport checkBallotInversion(int N, const CaseTag& kase);

}  // namespace hkl
