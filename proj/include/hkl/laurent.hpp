#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

namespace hkl {

// Exponent pair (power of t, power of t_N).
using Exponent = std::pair<int, int>;
using Coeff = std::int64_t;

struct CaseTag {
  enum Kind { A, B } kind = A;
  int m = 0;  // t_N = t^m in case B

  static CaseTag caseA() { return {A, 0}; }
  static CaseTag caseB(int m);

  bool isA() const { return kind == A; }
  std::string name() const;
  bool operator==(const CaseTag&) const = default;
};

// Sparse Laurent polynomial in t and t_N with integer coefficients.
// Case B values keep every t_N exponent at zero.
class Laurent {
 public:
  Laurent() = default;
  Laurent(Coeff c);  // constant
  static Laurent monomial(int i, int j = 0, Coeff c = 1);
  static Laurent t(int i = 1) { return monomial(i, 0); }
  static Laurent tN(int j = 1) { return monomial(0, j); }

  const std::map<Exponent, Coeff>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  Coeff coeff(int i, int j = 0) const;
  std::size_t size() const { return terms_.size(); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  bool operator==(const Laurent&) const = default;

  // t^p -> t^-p, t_N -> t_N^-1
  Laurent bar() const;
  // t_N -> t^m
  Laurent specialize(int m) const;
  // t_N -> t / t_N
  Laurent swapTN() const;
  // t_N -> value of t_N in the given case (identity for A)
  Laurent forCase(const CaseTag& c) const;
  bool hasTN() const;

  // Exact division by a polynomial in t alone; throws if a remainder is left.
  Laurent divideExactT(const Laurent& d) const;

  // Ascending t-degree, then t_N-degree: "1 + 2*t^2 - t^4*tN^2".
  std::string str() const;
  // "c*t^i*tN^j + ..." with every factor spelled out.
  std::string rawStr() const;
  nlohmann::json toJson() const;

 private:
  void add(const Exponent& e, Coeff c);
  std::map<Exponent, Coeff> terms_;
};

bool inGammaMinus(int i, int j, const CaseTag& c);
bool inGammaPlus(int i, int j, const CaseTag& c);
// Every monomial lies strictly in Gamma_-.
bool inGammaMinus(const Laurent& p, const CaseTag& c);

// [m] = (t^m - t^-m)/(t - t^-1)
Laurent bracket(int m);
// <0> = 1, <m> = t^m + t^-m
Laurent angle(int m);

Coeff checkedAdd(Coeff a, Coeff b);
Coeff checkedMul(Coeff a, Coeff b);

}  // namespace hkl
