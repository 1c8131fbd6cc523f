#include "hkl/strings_paths.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hkl {

Sign parseSign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::Plus;
  if (s == "-" || s == "minus") return Sign::Minus;
  throw std::invalid_argument("sign must be + or -: " + s);
}

std::string signName(Sign e) { return e == Sign::Plus ? "+" : "-"; }

std::vector<Box> ShiftedDiagram::anchors() const {
  std::vector<Box> out;
  for (const auto& b : boxes)
    if (b.i == N) out.push_back(b);
  return out;
}

void validateString(const BinaryString& a) {
  if (a.empty()) throw std::invalid_argument("empty string");
  for (char ch : a)
    if (ch != '1' && ch != '2') throw std::invalid_argument("letters must be 1 or 2: " + a);
}

void validateString(const BinaryString& a, int N) {
  validateString(a);
  if (static_cast<int>(a.size()) != N)
    throw std::invalid_argument("expected length " + std::to_string(N) + ": " + a);
}

std::vector<BinaryString> allStrings(int N) {
  if (N < 1 || N > 20) throw std::invalid_argument("N out of range");
  std::vector<BinaryString> out;
  out.reserve(std::size_t{1} << N);
  for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
    BinaryString s(N, '1');
    for (int k = 0; k < N; ++k)
      if (mask >> (N - 1 - k) & 1) s[k] = '2';
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> heights(const BinaryString& a, Sign e) {
  std::vector<int> h(a.size() + 1, 0);
  const int up = sgn(e);
  for (std::size_t k = 0; k < a.size(); ++k) h[k + 1] = h[k] + (a[k] == '1' ? up : -up);
  return h;
}

ShiftedDiagram stringToDiagram(const BinaryString& a, Sign e) {
  validateString(a);
  const int N = static_cast<int>(a.size());
  const auto h = heights(a, e);
  ShiftedDiagram d;
  d.N = N;
  for (int i = 1; i <= N; ++i)
    for (int j = -i + 1; j < i; ++j) {
      if ((i + j) % 2 == 0) continue;
      if (e == Sign::Plus ? j > h[i] : j < h[i]) d.boxes.insert({i, j});
    }
  return d;
}

BinaryString flipConvention(const BinaryString& a) {
  BinaryString r = a;
  for (char& ch : r) ch = ch == '1' ? '2' : '1';
  return r;
}

std::vector<int> cosetWord(const BinaryString& a, Sign e) {
  const auto d = stringToDiagram(a, e);
  // Columns of the diagram are the diagonals running into the anchors:
  // j - i constant for +, j + i constant for -.
  std::map<int, int> columnLength;
  for (const auto& b : d.boxes) ++columnLength[e == Sign::Plus ? b.j - b.i : b.j + b.i];
  std::vector<int> lens;
  for (const auto& [key, k] : columnLength) lens.push_back(k);
  std::sort(lens.begin(), lens.end());
  std::vector<int> word;
  for (int k : lens)
    for (int i = d.N - k + 1; i <= d.N; ++i) word.push_back(i);
  return word;
}

std::size_t boxCount(const BinaryString& a, Sign e) { return stringToDiagram(a, e).size(); }

bool bruhatLeq(const BinaryString& a, const BinaryString& b, Sign e) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  const auto da = stringToDiagram(a, e);
  const auto db = stringToDiagram(b, e);
  return std::includes(db.boxes.begin(), db.boxes.end(), da.boxes.begin(), da.boxes.end());
}

BoxSet skewShape(const BinaryString& a, const BinaryString& b, Sign e) {
  if (!bruhatLeq(a, b, e)) throw std::domain_error("skew shape undefined: " + a + " is not below " + b);
  const auto da = stringToDiagram(a, e);
  const auto db = stringToDiagram(b, e);
  BoxSet out;
  std::set_difference(db.boxes.begin(), db.boxes.end(), da.boxes.begin(), da.boxes.end(),
                      std::inserter(out, out.end()));
  return out;
}

LengthSplit lengthSplit(const BinaryString& a) {
  const auto d = stringToDiagram(a, Sign::Plus);
  LengthSplit s;
  for (const auto& b : d.boxes) (b.i == d.N ? s.lN : s.lPrime)++;
  return s;
}

Laurent boldT(int dlPrime, int dlN, const CaseTag& c) {
  if (c.isA()) return Laurent::monomial(dlPrime, dlN);
  return Laurent::t(dlPrime + c.m * dlN);
}

Laurent boldTDiff(const BinaryString& a, const BinaryString& b, const CaseTag& c) {
  const auto la = lengthSplit(a), lb = lengthSplit(b);
  return boldT(la.lPrime - lb.lPrime, la.lN - lb.lN, c);
}

}  // namespace hkl
