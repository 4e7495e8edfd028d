#include "relhfk/laurent.hpp"

#include <cstdlib>
#include <sstream>

namespace relhfk {

void Laurent::add(int exp, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_[exp] = coeff;
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

int Laurent::min_exp() const { return terms_.begin()->first; }
int Laurent::max_exp() const { return terms_.rbegin()->first; }

long long Laurent::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

long long Laurent::at_unit(int t) const {
  long long sum = 0;
  for (auto [e, c] : terms_) sum += (t == -1 && e % 2 != 0) ? -c : c;
  return sum;
}

Laurent Laurent::shifted(int c) const {
  Laurent out;
  for (auto [e, v] : terms_) out.terms_[e + c] = v;
  return out;
}

Laurent Laurent::negated() const {
  Laurent out;
  for (auto [e, v] : terms_) out.terms_[e] = -v;
  return out;
}

Laurent Laurent::reversed() const {
  Laurent out;
  for (auto [e, v] : terms_) out.terms_[-e] = v;
  return out;
}

bool Laurent::equiv(const Laurent& f, const Laurent& g) {
  if (f.zero() || g.zero()) return f.zero() == g.zero();
  const Laurent aligned = g.shifted(f.min_exp() - g.min_exp());
  return f == aligned || f == aligned.negated();
}

std::optional<Laurent> Laurent::symmetrized() const {
  if (zero()) return *this;
  if (!equiv(*this, reversed())) return std::nullopt;
  const int span = min_exp() + max_exp();
  if (span % 2 != 0) return std::nullopt;
  return shifted(-span / 2);
}

namespace {

void append_monomial(std::ostream& os, bool first, long long coeff, const std::string& body) {
  const long long mag = coeff < 0 ? -coeff : coeff;
  if (first) {
    if (coeff < 0) os << "-";
  } else {
    os << (coeff < 0 ? " - " : " + ");
  }
  if (mag != 1 || body.empty()) os << mag;
  os << body;
}

std::string power(const std::string& var, int exp) {
  if (exp == 0) return "";
  if (exp == 1) return var;
  return var + "^" + std::to_string(exp);
}

}  // namespace

std::string Laurent::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms_) {
    append_monomial(os, first, c, power(var, e));
    first = false;
  }
  return os.str();
}

void Laurent2::add(int t_exp, int q_exp, long long coeff) {
  if (coeff == 0) return;
  auto key = std::make_pair(t_exp, q_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_[key] = coeff;
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

long long Laurent2::total() const {
  long long sum = 0;
  for (auto& [k, c] : terms_) sum += c;
  return sum;
}

Laurent Laurent2::at_q(long long q) const {
  Laurent out;
  for (auto& [k, c] : terms_) {
    long long factor = 1;
    if (q == -1) {
      factor = (k.second % 2 == 0) ? 1 : -1;
    } else if (q != 1) {
      for (int i = 0; i < k.second; ++i) factor *= q;
    }
    out.add(k.first, c * factor);
  }
  return out;
}

Laurent2 Laurent2::mirrored() const {
  Laurent2 out;
  for (auto& [k, c] : terms_) out.add(-k.first, -k.second, c);
  return out;
}

std::string Laurent2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms_) {
    std::string body = power("t", k.first);
    std::string qpart = power("q", k.second);
    if (!body.empty() && !qpart.empty()) body += " ";
    body += qpart;
    append_monomial(os, first, c, body);
    first = false;
  }
  return os.str();
}

}  // namespace relhfk
