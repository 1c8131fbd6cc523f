#pragma once

#include <map>
#include <vector>

#include "hkl/strings_paths.hpp"

namespace hkl::oracle {

// Window notation: w(k) for k = 1..N, entries are nonzero and |w| is a permutation.
using SignedPermutation = std::vector<int>;

struct LengthTriple {
  int l = 0;
  int lPrime = 0;
  int lN = 0;
};

SignedPermutation identity(int N);
// s_i (i < N) swaps entries i, i+1; s_N negates the last entry.
SignedPermutation generator(int i, int N);
// (uv)(k) = u(v(k))
SignedPermutation multiply(const SignedPermutation& u, const SignedPermutation& v);
// s_{w[0]} s_{w[1]} ...
SignedPermutation evaluate(const std::vector<int>& word, int N);

// The whole group with one reduced word per element, found breadth first.
class WeylGroupB {
 public:
  static constexpr int maxRank = 5;
  explicit WeylGroupB(int N);

  int rank() const { return N_; }
  std::size_t size() const { return words_.size(); }
  const std::map<SignedPermutation, std::vector<int>>& elements() const { return words_; }
  const std::vector<int>& reducedWord(const SignedPermutation& w) const;
  int length(const SignedPermutation& w) const;
  LengthTriple lengthTriple(const SignedPermutation& w) const;

  // Some subexpression of the stored reduced word of v evaluates to u.
  bool bruhatLeq(const SignedPermutation& u, const SignedPermutation& v) const;
  // Same test through an arbitrary word for v.
  bool subwordContains(const std::vector<int>& word, const SignedPermutation& u) const;

  // Minimal length in its coset x S_N (S_N generated by s_1..s_{N-1}).
  bool isMinimalCosetRep(const SignedPermutation& x) const;
  std::vector<SignedPermutation> minimalCosetReps() const;

 private:
  int N_;
  std::map<SignedPermutation, std::vector<int>> words_;
};

bool isReducedWord(const WeylGroupB& g, const std::vector<int>& word);

}  // namespace hkl::oracle
