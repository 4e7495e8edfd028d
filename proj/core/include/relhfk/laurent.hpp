#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace relhfk {

// Sparse one-variable Laurent polynomial with exact integer coefficients.
// Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;

  void add(int exp, long long coeff);
  bool zero() const { return terms_.empty(); }
  int min_exp() const;
  int max_exp() const;
  long long coeff(int exp) const;
  long long at_unit(int t) const;  // evaluate at t = +1 or t = -1
  const std::map<int, long long>& terms() const { return terms_; }

  Laurent shifted(int c) const;   // multiply by t^c
  Laurent negated() const;
  Laurent reversed() const;       // t -> t^-1

  friend bool operator==(const Laurent&, const Laurent&) = default;

  // f == +- t^c * g for some integer c.
  static bool equiv(const Laurent& f, const Laurent& g);

  // The representative with support centered at zero, when the polynomial is
  // palindromic up to sign; nullopt otherwise.
  std::optional<Laurent> symmetrized() const;

  // Monomials ascending in the exponent, e.g. "2t^-1 - 3 + 2t".
  std::string str(const std::string& var = "t") const;

 private:
  std::map<int, long long> terms_;
};

// Sparse two-variable Laurent polynomial in t (Alexander direction) and q
// (Maslov direction).
class Laurent2 {
 public:
  Laurent2() = default;

  void add(int t_exp, int q_exp, long long coeff);
  bool zero() const { return terms_.empty(); }
  long long total() const;  // sum of coefficients
  const std::map<std::pair<int, int>, long long>& terms() const { return terms_; }

  Laurent at_q(long long q) const;   // substitute a numeric q
  Laurent2 mirrored() const;         // (t,q) -> (t^-1, q^-1)

  friend bool operator==(const Laurent2&, const Laurent2&) = default;

  // Monomials ascending in t-exponent then q-exponent, e.g.
  // "t^-3 + t^-2 + t^-2 q + 2t^-1 q + 3q^2".
  std::string str() const;

 private:
  std::map<std::pair<int, int>, long long> terms_;
};

}  // namespace relhfk
