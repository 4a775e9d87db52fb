#pragma once

// Sparse polynomials in the fixed variables x, u, y, v, z with arbitrary
// precision integer coefficients.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace omt {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Var : std::uint8_t { x = 0, u = 1, y = 2, v = 3, z = 4 };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::x, Var::u, Var::y, Var::v, Var::z};

char var_name(Var var) noexcept;
std::optional<Var> var_from_name(char c) noexcept;

/// Exponent vector over (x, u, y, v, z). A zero entry means the variable is absent.
class Monomial {
 public:
  using Exponents = std::array<std::uint32_t, kNumVars>;

  constexpr Monomial() = default;
  constexpr explicit Monomial(const Exponents& e) : exp_(e) {}

  static constexpr Monomial of(Var var, std::uint32_t power = 1) {
    Monomial m;
    m.exp_[static_cast<std::size_t>(var)] = power;
    return m;
  }

  constexpr std::uint32_t operator[](Var var) const { return exp_[static_cast<std::size_t>(var)]; }
  constexpr const Exponents& exponents() const { return exp_; }

  constexpr std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto e : exp_) d += e;
    return d;
  }

  constexpr bool is_constant() const { return degree() == 0; }

  constexpr Monomial with(Var var, std::uint32_t power) const {
    Monomial m = *this;
    m.exp_[static_cast<std::size_t>(var)] = power;
    return m;
  }

  constexpr Monomial operator*(const Monomial& other) const {
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) m.exp_[i] = exp_[i] + other.exp_[i];
    return m;
  }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Exponents exp_{};
};

/// Canonical term order: total degree descending, then the exponent vector
/// on (x, u, y, v, z) lexicographically descending.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

std::string to_string(const Monomial& m);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, CanonicalOrder>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(Var var);
  static Polynomial term(const Monomial& m, const Integer& coefficient = 1);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Monomial& m) const;
  std::uint32_t degree(Var var) const;
  std::uint32_t total_degree() const;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(std::uint32_t n) const;

 private:
  Terms terms_;
};

/// Simultaneous substitution; unbound variables map to themselves.
Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& bindings);

/// Exact value at a rational point. Throws InputError naming the first
/// variable of p that has no assignment.
Rational evaluate(const Polynomial& p, const std::map<Var, Rational>& assignment);

/// `order`-fold formal derivative in `var`; order 0 is the identity.
Polynomial partial_derivative(const Polynomial& p, Var var, std::uint32_t order = 1);

Polynomial parse_polynomial(std::string_view text);
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// x, u, y, v, z as polynomials; handy for building identities.
namespace vars {
inline const Polynomial& x() { static const Polynomial p = Polynomial::variable(Var::x); return p; }
inline const Polynomial& u() { static const Polynomial p = Polynomial::variable(Var::u); return p; }
inline const Polynomial& y() { static const Polynomial p = Polynomial::variable(Var::y); return p; }
inline const Polynomial& v() { static const Polynomial p = Polynomial::variable(Var::v); return p; }
inline const Polynomial& z() { static const Polynomial p = Polynomial::variable(Var::z); return p; }
}  // namespace vars

Integer factorial(std::uint32_t n);

}  // namespace omt
