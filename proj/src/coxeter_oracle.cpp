#include "hkl/coxeter_oracle.hpp"

#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace hkl::oracle {

SignedPermutation identity(int N) {
  SignedPermutation w(N);
  for (int k = 0; k < N; ++k) w[k] = k + 1;
  return w;
}

SignedPermutation generator(int i, int N) {
  if (i < 1 || i > N) throw std::out_of_range("generator index");
  auto w = identity(N);
  if (i < N)
    std::swap(w[i - 1], w[i]);
  else
    w[N - 1] = -w[N - 1];
  return w;
}

SignedPermutation multiply(const SignedPermutation& u, const SignedPermutation& v) {
  SignedPermutation r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const int x = v[k];
    const int y = u[std::abs(x) - 1];
    r[k] = x > 0 ? y : -y;
  }
  return r;
}

SignedPermutation evaluate(const std::vector<int>& word, int N) {
  auto w = identity(N);
  for (int i : word) w = multiply(w, generator(i, N));
  return w;
}

WeylGroupB::WeylGroupB(int N) : N_(N) {
  if (N < 1 || N > maxRank) throw std::invalid_argument("oracle rank must be 1..5");
  const auto e = identity(N);
  words_[e] = {};
  std::deque<SignedPermutation> queue{e};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (int i = 1; i <= N; ++i) {
      auto y = multiply(x, generator(i, N));
      if (words_.count(y)) continue;
      auto w = words_[x];
      w.push_back(i);
      words_.emplace(y, std::move(w));
      queue.push_back(std::move(y));
    }
  }
}

const std::vector<int>& WeylGroupB::reducedWord(const SignedPermutation& w) const {
  auto it = words_.find(w);
  if (it == words_.end()) throw std::invalid_argument("not a group element");
  return it->second;
}

int WeylGroupB::length(const SignedPermutation& w) const {
  return static_cast<int>(reducedWord(w).size());
}

LengthTriple WeylGroupB::lengthTriple(const SignedPermutation& w) const {
  LengthTriple t;
  for (int i : reducedWord(w)) (i == N_ ? t.lN : t.lPrime)++;
  t.l = t.lPrime + t.lN;
  return t;
}

bool WeylGroupB::subwordContains(const std::vector<int>& word, const SignedPermutation& u) const {
  // Breadth over prefixes: the set of values of subwords of word[0..k).
  std::set<SignedPermutation> reach{identity(N_)};
  for (int i : word) {
    const auto g = generator(i, N_);
    std::set<SignedPermutation> next = reach;
    for (const auto& x : reach) next.insert(multiply(x, g));
    reach.swap(next);
  }
  return reach.count(u) != 0;
}

bool WeylGroupB::bruhatLeq(const SignedPermutation& u, const SignedPermutation& v) const {
  return subwordContains(reducedWord(v), u);
}

bool WeylGroupB::isMinimalCosetRep(const SignedPermutation& x) const {
  const int lx = length(x);
  for (int i = 1; i < N_; ++i)
    if (length(multiply(x, generator(i, N_))) < lx) return false;
  return true;
}

std::vector<SignedPermutation> WeylGroupB::minimalCosetReps() const {
  std::vector<SignedPermutation> out;
  for (const auto& [w, word] : words_)
    if (isMinimalCosetRep(w)) out.push_back(w);
  return out;
}

bool isReducedWord(const WeylGroupB& g, const std::vector<int>& word) {
  return g.length(evaluate(word, g.rank())) == static_cast<int>(word.size());
}

}  // namespace hkl::oracle
