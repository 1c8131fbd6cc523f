#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "hkl/laurent.hpp"

namespace hkl {

// Binary strings over {1,2} stored as text, e.g. "221121".
using BinaryString = std::string;

enum class Sign { Plus, Minus };

inline int sgn(Sign e) { return e == Sign::Plus ? 1 : -1; }
inline Sign opposite(Sign e) { return e == Sign::Plus ? Sign::Minus : Sign::Plus; }
Sign parseSign(const std::string& s);
std::string signName(Sign e);

// Box centred at (i, j): column i, height j.
struct Box {
  int i = 0;
  int j = 0;
  auto operator<=>(const Box&) const = default;
};

using BoxSet = std::set<Box>;

struct ShiftedDiagram {
  int N = 0;
  BoxSet boxes;

  std::size_t size() const { return boxes.size(); }
  bool contains(const Box& b) const { return boxes.count(b) != 0; }
  bool isAnchor(const Box& b) const { return b.i == N; }
  std::vector<Box> anchors() const;
};

void validateString(const BinaryString& a);
void validateString(const BinaryString& a, int N);

// All strings of length N in lexicographic order (1 < 2).
std::vector<BinaryString> allStrings(int N);

// Heights h(0..N) of the path: letter 1 steps up for +, down for -.
std::vector<int> heights(const BinaryString& a, Sign e);

// Boxes (i,j), 1<=i<=N, |j|<i, i+j odd, strictly above (+) or below (-) the path.
ShiftedDiagram stringToDiagram(const BinaryString& a, Sign e);

// Exchange 1 and 2.
BinaryString flipConvention(const BinaryString& a);

// The coset word read column by column, shortest column first; each column
// is s_{N-k+1} ... s_N.  Applying it right to left to m_{1..1} gives m_a.
std::vector<int> cosetWord(const BinaryString& a, Sign e);

std::size_t boxCount(const BinaryString& a, Sign e);

// Containment of diagrams.  Throws on length mismatch.
bool bruhatLeq(const BinaryString& a, const BinaryString& b, Sign e);

// Skew shape diagram(b) \ diagram(a); throws std::domain_error if a is not below b.
BoxSet skewShape(const BinaryString& a, const BinaryString& b, Sign e);

// (l', l_N): non-anchor and anchor box counts.
struct LengthSplit {
  int lPrime = 0;
  int lN = 0;
};
LengthSplit lengthSplit(const BinaryString& a);

// Bold t^{l(x)}: t^{l'} t_N^{l_N} in case A, t^{l' + m l_N} in case B.
Laurent boldT(int dlPrime, int dlN, const CaseTag& c);

// Bold t^{l(a) - l(b)}.
Laurent boldTDiff(const BinaryString& a, const BinaryString& b, const CaseTag& c);

}  // namespace hkl
