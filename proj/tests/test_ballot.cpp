#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "hkl/ballot.hpp"

using namespace hkl;

namespace {

const CaseTag A = CaseTag::caseA();

Laurent sumOf(std::initializer_list<std::pair<int, int>> exps) {
  Laurent p;
  for (const auto& [e, eN] : exps) p += Laurent::monomial(e, eN);
  return p;
}

}  // namespace

TEST_CASE("the worked pair 111111 < 211212") {
  const auto start = std::chrono::steady_clock::now();
  const Laurent qa = qPolynomial("111111", "211212", Sign::Plus, Rule::I, A);
  CHECK(qa == sumOf({{0, 0}, {2, 0}, {2, 0}, {4, 0}, {4, 0}, {6, 0}}) - Laurent::monomial(4, 2) -
                  Laurent::monomial(6, 2));
  const Laurent big = (Laurent(1) + Laurent::t(2)) * (Laurent(1) + Laurent::t(2)) * (Laurent(1) + Laurent::t(4));
  for (int m = 2; m <= 4; ++m)
    CHECK(qPolynomial("111111", "211212", Sign::Plus, Rule::I, CaseTag::caseB(m)) == big);
  CHECK(qPolynomial("111111", "211212", Sign::Plus, Rule::I, CaseTag::caseB(1)) ==
        sumOf({{0, 0}, {2, 0}, {2, 0}, {4, 0}, {4, 0}, {6, 0}}));
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
}

TEST_CASE("configuration counts of the worked pair") {
  CHECK(enumerateConf("111111", "211212", Sign::Plus, Rule::I, A).size() == 8);
  CHECK(enumerateConf("111111", "211212", Sign::Plus, Rule::I, CaseTag::caseB(1)).size() == 6);
}

TEST_CASE("strip weights") {
  CHECK(stripWeight({0, 0}, A, Rule::I) == Laurent(1));
  CHECK(stripWeight({1, 0}, A, Rule::I) == Laurent::t(2));
  CHECK(stripWeight({0, 1}, A, Rule::I) == -Laurent::tN(2));
  CHECK(StripShape{2, 1}.boxCount() == 6);
}

TEST_CASE("ballot traces") {
  CHECK(isBallotTrace({{3, 2}}));
  CHECK(isBallotTrace({{3, 2}, {4, 3}, {5, 2}}));
  CHECK_FALSE(isBallotTrace({{3, 2}, {4, 1}}));
  CHECK_FALSE(isBallotTrace({{3, 2}, {5, 2}}));
}

TEST_CASE("the diagonal has one empty configuration") {
  for (int N = 1; N <= 5; ++N)
    for (const auto& a : allStrings(N))
      for (Rule r : {Rule::I, Rule::II}) {
        const auto cs = enumerateConf(a, a, Sign::Plus, r, A);
        REQUIRE(cs.size() == 1);
        CHECK(cs.front().strips.empty());
        CHECK(qPolynomial(a, a, Sign::Minus, r, CaseTag::caseB(2)) == Laurent(1));
      }
}

TEST_CASE("Rule II admits at most one configuration") {
  for (const auto& kase : {A, CaseTag::caseB(1), CaseTag::caseB(2), CaseTag::caseB(3)})
    for (int N = 1; N <= 5; ++N)
      for (const auto& a : allStrings(N))
        for (const auto& b : allStrings(N)) {
          if (!bruhatLeq(a, b, Sign::Minus)) continue;
          CHECK(enumerateConf(a, b, Sign::Minus, Rule::II, kase).size() <= 1);
        }
}

TEST_CASE("validated configurations are the filtered tilings") {
  for (const auto& kase : {A, CaseTag::caseB(1), CaseTag::caseB(2)})
    for (int N = 1; N <= 4; ++N)
      for (const auto& a : allStrings(N))
        for (const auto& b : allStrings(N)) {
          if (!bruhatLeq(a, b, Sign::Plus)) continue;
          const auto arena = skewShape(a, b, Sign::Plus);
          std::size_t nI = 0, nII = 0;
          for (const auto& c : enumerateTilings(arena, N)) {
            CHECK(tiles(c, arena));
            nI += validateRuleI(c, kase);
            nII += validateRuleII(c, kase);
          }
          CHECK(enumerateConf(a, b, Sign::Plus, Rule::I, kase).size() == nI);
          CHECK(enumerateConf(a, b, Sign::Plus, Rule::II, kase).size() == nII);
        }
}

TEST_CASE("Q is zero off the order") {
  CHECK(qPolynomial("21", "12", Sign::Plus, Rule::I, A).isZero());
  CHECK(qPolynomial("12", "21", Sign::Plus, Rule::I, A) == Laurent(1));
}

TEST_CASE("ballot inversion") {
  for (const auto& kase : {A, CaseTag::caseB(1), CaseTag::caseB(2), CaseTag::caseB(3)})
    for (int N = 1; N <= 4; ++N) {
      const auto rep = checkBallotInversion(N, kase);
      CHECK(rep.ok());
      CHECK(rep.pairsChecked == static_cast<std::size_t>(1) << (2 * N));
    }
}
