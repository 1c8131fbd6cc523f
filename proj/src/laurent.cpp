#include "hkl/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hkl {

CaseTag CaseTag::caseB(int m) {
  if (m < 1) throw std::invalid_argument("case B needs m >= 1");
  return {B, m};
}

std::string CaseTag::name() const {
  return isA() ? "A" : "B(m=" + std::to_string(m) + ")";
}

Coeff checkedAdd(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

Coeff checkedMul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

Laurent::Laurent(Coeff c) {
  if (c != 0) terms_[{0, 0}] = c;
}

Laurent Laurent::monomial(int i, int j, Coeff c) {
  Laurent p;
  if (c != 0) p.terms_[{i, j}] = c;
  return p;
}

bool Laurent::isOne() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0} &&
         terms_.begin()->second == 1;
}

Coeff Laurent::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

void Laurent::add(const Exponent& e, Coeff c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second = checkedAdd(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add({ea.first + eb.first, ea.second + eb.second}, checkedMul(ca, cb));
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[{-e.first, -e.second}] = c;
  return r;
}

Laurent Laurent::specialize(int m) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.add({e.first + m * e.second, 0}, c);
  return r;
}

Laurent Laurent::swapTN() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.add({e.first + e.second, -e.second}, c);
  return r;
}

Laurent Laurent::forCase(const CaseTag& c) const {
  return c.isA() ? *this : specialize(c.m);
}

bool Laurent::hasTN() const {
  for (const auto& [e, c] : terms_)
    if (e.second != 0) return true;
  return false;
}

Laurent Laurent::divideExactT(const Laurent& d) const {
  if (d.isZero()) throw std::domain_error("division by zero");
  if (d.hasTN()) throw std::domain_error("divisor must be a polynomial in t");
  const int dTop = d.terms_.rbegin()->first.first;
  const int dLow = d.terms_.begin()->first.first;
  const Coeff lead = d.terms_.rbegin()->second;

  // Group by t_N power; the divisor does not mix them.
  std::map<int, std::map<int, Coeff>> rows;
  for (const auto& [e, c] : terms_) rows[e.second][e.first] = c;

  Laurent q;
  for (auto& [j, row] : rows) {
    while (!row.empty()) {
      auto top = std::prev(row.end());
      const int deg = top->first;
      const Coeff c = top->second;
      const int low = row.begin()->first;
      if (c % lead != 0 || deg - dTop < low - dLow)
        throw std::domain_error("inexact division");
      const Coeff k = c / lead;
      const int shift = deg - dTop;
      q.add({shift, j}, k);
      for (const auto& [de, dc] : d.terms_) {
        const int x = shift + de.first;
        Coeff v = checkedAdd(row[x], -checkedMul(k, dc));
        if (v == 0)
          row.erase(x);
        else
          row[x] = v;
      }
    }
  }
  return q;
}

namespace {

void appendPower(std::ostringstream& os, const char* var, int e, bool& first) {
  if (e == 0) return;
  if (!first) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  first = false;
}

}  // namespace

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  // sort by t-degree, then t_N-degree (map order is already that)
  std::ostringstream os;
  bool lead = true;
  for (const auto& [e, c] : terms_) {
    Coeff a = c;
    if (lead) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (a < 0) a = -a;
    bool first = true;
    if (a != 1 || (e.first == 0 && e.second == 0)) {
      os << a;
      first = false;
    }
    appendPower(os, "t", e.first, first);
    appendPower(os, "tN", e.second, first);
    lead = false;
  }
  return os.str();
}

std::string Laurent::rawStr() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (const auto& [e, c] : terms_) {
    if (!lead) os << " + ";
    os << c << "*t^" << e.first << "*tN^" << e.second;
    lead = false;
  }
  return os.str();
}

nlohmann::json Laurent::toJson() const {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : terms_) arr.push_back({e.first, e.second, c});
  return arr;
}

bool inGammaMinus(int i, int j, const CaseTag& c) {
  if (c.isA()) return i < 0 || (i == 0 && j < 0);
  return i + c.m * j < 0;
}

bool inGammaPlus(int i, int j, const CaseTag& c) { return inGammaMinus(-i, -j, c); }

bool inGammaMinus(const Laurent& p, const CaseTag& c) {
  for (const auto& [e, coef] : p.terms())
    if (!inGammaMinus(e.first, e.second, c)) return false;
  return true;
}

Laurent bracket(int m) {
  if (m < 0) return -bracket(-m);
  Laurent r;
  for (int k = 0; k < m; ++k) r += Laurent::t(m - 1 - 2 * k);
  return r;
}

Laurent angle(int m) {
  if (m < 0) throw std::invalid_argument("angle needs m >= 0");
  if (m == 0) return Laurent(1);
  return Laurent::t(m) + Laurent::t(-m);
}

}  // namespace hkl
