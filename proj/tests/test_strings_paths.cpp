#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hkl/coxeter_oracle.hpp"
#include "hkl/strings_paths.hpp"

using namespace hkl;
namespace ox = hkl::oracle;

namespace {

// Integral points (i, j) above the path with 0 < i <= N, |j| <= i, i + j odd.
std::size_t bruteBoxes(const BinaryString& a, Sign e) {
  const int N = static_cast<int>(a.size());
  int h = 0;
  std::size_t n = 0;
  for (int i = 1; i <= N; ++i) {
    h += (a[i - 1] == '1') == (e == Sign::Plus) ? 1 : -1;
    for (int j = -i; j <= i; ++j) {
      if ((i + j) % 2 == 0) continue;
      if (e == Sign::Plus ? j > h : j < h) ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(validateString("1212"));
  CHECK_THROWS(validateString("1203"));
  CHECK_THROWS(validateString(""));
  CHECK_THROWS(validateString("12", 3));
}

TEST_CASE("strings are listed lexicographically") {
  const auto S = allStrings(3);
  CHECK(S.size() == 8);
  CHECK(S.front() == "111");
  CHECK(S.back() == "222");
  CHECK(std::is_sorted(S.begin(), S.end()));
}

TEST_CASE("diagrams") {
  CHECK(stringToDiagram("111111", Sign::Plus).size() == 0);
  const auto d = stringToDiagram("221121", Sign::Plus);
  CHECK(d.size() == 13);
  CHECK(d.anchors() == std::vector<Box>{{6, 1}, {6, 3}, {6, 5}});
  CHECK(boxCount("221121", Sign::Plus) == 13);
  for (int N = 1; N <= 6; ++N)
    for (const auto& a : allStrings(N)) {
      CHECK(boxCount(a, Sign::Plus) == bruteBoxes(a, Sign::Plus));
      CHECK(boxCount(a, Sign::Minus) == bruteBoxes(a, Sign::Minus));
      const auto plus = stringToDiagram(a, Sign::Plus).boxes;
      // The - diagram is the + diagram reflected in the axis.
      BoxSet mirror;
      for (const auto& b : plus) mirror.insert({b.i, -b.j});
      CHECK(stringToDiagram(a, Sign::Minus).boxes == mirror);
      // Exchanging letters and sign gives the complement in the full triangle.
      const auto flipped = stringToDiagram(flipConvention(a), Sign::Minus).boxes;
      CHECK(plus.size() + flipped.size() == static_cast<std::size_t>(N * (N + 1) / 2));
      for (const auto& b : flipped) CHECK_FALSE(plus.count(b));
    }
}

TEST_CASE("the full diagram has N(N+1)/2 boxes") {
  for (int N = 1; N <= 6; ++N) {
    const BinaryString top(N, '2');
    CHECK(bruteBoxes(top, Sign::Plus) == static_cast<std::size_t>(N * (N + 1) / 2));
    CHECK(boxCount(top, Sign::Plus) == bruteBoxes(top, Sign::Plus));
  }
}

TEST_CASE("flip") {
  CHECK(flipConvention("221121") == "112212");
  CHECK(flipConvention("1111") == "2222");
  for (int N = 1; N <= 8; ++N)
    for (const auto& a : allStrings(N)) CHECK(flipConvention(flipConvention(a)) == a);
}

TEST_CASE("coset word of the worked example") {
  CHECK(cosetWord("221121", Sign::Plus) == std::vector<int>{5, 6, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6});
  CHECK(cosetWord("1111", Sign::Plus).empty());
  CHECK(cosetWord("1111", Sign::Minus).empty());
}

TEST_CASE("coset words against the signed permutation oracle") {
  for (int N = 1; N <= 4; ++N) {
    ox::WeylGroupB W(N);
    const auto reps = W.minimalCosetReps();
    CHECK(reps.size() == static_cast<std::size_t>(1) << N);
    std::set<ox::SignedPermutation> seen;
    for (const auto& a : allStrings(N)) {
      const auto word = cosetWord(a, Sign::Plus);
      CHECK(word == cosetWord(a, Sign::Minus));
      CHECK(ox::isReducedWord(W, word));
      const auto x = ox::evaluate(word, N);
      CHECK(W.isMinimalCosetRep(x));
      CHECK(W.length(x) == static_cast<int>(boxCount(a, Sign::Plus)));
      const auto lt = W.lengthTriple(x);
      const auto ls = lengthSplit(a);
      CHECK(lt.lPrime == ls.lPrime);
      CHECK(lt.lN == ls.lN);
      seen.insert(x);
    }
    CHECK(seen.size() == reps.size());
  }
  const auto w = ox::evaluate(cosetWord("221121", Sign::Plus), 6);
  const auto split = lengthSplit("221121");
  CHECK(split.lPrime + split.lN == 13);
  CHECK(split.lN == 3);
  int sN = 0;
  for (int g : cosetWord("221121", Sign::Plus)) sN += g == 6;
  CHECK(sN == 3);
  CHECK(w.size() == 6);
}

TEST_CASE("containment is Bruhat order on coset representatives") {
  for (int N = 1; N <= 3; ++N) {
    ox::WeylGroupB W(N);
    for (const auto& a : allStrings(N))
      for (const auto& b : allStrings(N)) {
        const auto u = ox::evaluate(cosetWord(a, Sign::Plus), N);
        const bool oracle = W.subwordContains(cosetWord(b, Sign::Plus), u);
        CHECK(bruhatLeq(a, b, Sign::Plus) == oracle);
        CHECK(bruhatLeq(a, b, Sign::Minus) == oracle);
      }
  }
  CHECK(bruhatLeq("111111", "211212", Sign::Plus));
  CHECK_THROWS(bruhatLeq("11", "111", Sign::Plus));
}

TEST_CASE("skew shapes") {
  CHECK(skewShape("1212", "1212", Sign::Plus).empty());
  CHECK(skewShape("111111", "211212", Sign::Plus).size() == 10);
  CHECK_THROWS_AS(skewShape("21", "12", Sign::Plus), std::domain_error);
}

TEST_CASE("bold t") {
  const CaseTag A = CaseTag::caseA();
  CHECK(boldT(2, 1, A) == Laurent::monomial(2, 1));
  CHECK(boldT(2, 1, CaseTag::caseB(3)) == Laurent::t(5));
  CHECK(boldTDiff("2", "1", A) == Laurent::tN());
  CHECK(boldTDiff("21", "12", A) == Laurent::t());
}
