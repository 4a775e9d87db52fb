#include "omt/poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "omt/error.hpp"

namespace omt {

char var_name(Var var) noexcept {
  static constexpr char names[kNumVars] = {'x', 'u', 'y', 'v', 'z'};
  return names[static_cast<std::size_t>(var)];
}

std::optional<Var> var_from_name(char c) noexcept {
  switch (c) {
    case 'x': return Var::x;
    case 'u': return Var::u;
    case 'y': return Var::y;
    case 'v': return Var::v;
    case 'z': return Var::z;
    default: return std::nullopt;
  }
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (Var var : kAllVars) {
    const auto e = m[var];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(var);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Polynomial::Polynomial(long constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(Var var) { return term(Monomial::of(var)); }

Polynomial Polynomial::term(const Monomial& m, const Integer& coefficient) {
  Polynomial p;
  p.add_term(m, coefficient);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint32_t Polynomial::degree(Var var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::pow(std::uint32_t n) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<Var, Polynomial>& bindings) {
  // powers[var][e] = binding(var)^e, grown on demand
  std::array<std::vector<Polynomial>, kNumVars> powers;
  for (Var var : kAllVars) {
    auto it = bindings.find(var);
    powers[static_cast<std::size_t>(var)] = {Polynomial(1),
                                             it == bindings.end() ? Polynomial::variable(var) : it->second};
  }
  auto power_of = [&](Var var, std::uint32_t e) -> const Polynomial& {
    auto& table = powers[static_cast<std::size_t>(var)];
    while (table.size() <= e) table.push_back(table.back() * table[1]);
    return table[e];
  };

  Polynomial result;
  for (const auto& [m, c] : p.terms()) {
    Polynomial t(c);
    for (Var var : kAllVars)
      if (m[var] > 0) t *= power_of(var, m[var]);
    result += t;
  }
  return result;
}

Rational evaluate(const Polynomial& p, const std::map<Var, Rational>& assignment) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (Var var : kAllVars) {
      const auto e = m[var];
      if (e == 0) continue;
      auto it = assignment.find(var);
      if (it == assignment.end())
        throw InputError(std::string("evaluate: variable '") + var_name(var) + "' is not assigned");
      Rational pw = 1;
      for (std::uint32_t i = 0; i < e; ++i) pw *= it->second;
      t *= pw;
    }
    total += t;
  }
  return total;
}

Polynomial partial_derivative(const Polynomial& p, Var var, std::uint32_t order) {
  if (order == 0) return p;
  Polynomial result;
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[var];
    if (e < order) continue;
    Integer falling = 1;
    for (std::uint32_t i = 0; i < order; ++i) falling *= e - i;
    result.add_term(m.with(var, e - order), c * falling);
  }
  return result;
}

Integer factorial(std::uint32_t n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial result;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    for (;;) {
      auto [m, c] = parse_term();
      result.add_term(m, negative ? Integer(-c) : c);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("expected '+' or '-', found '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    return result;
  }

 private:
  std::pair<Monomial, Integer> parse_term() {
    Monomial m;
    Integer c = 1;
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= parse_integer();
      } else if (auto var = var_from_name(ch)) {
        ++pos_;
        skip_ws();
        std::uint32_t e = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          const std::size_t at = pos_;
          Integer big = parse_integer();
          if (!big.fits_uint_p()) throw ParseError("exponent too large", at);
          e = static_cast<std::uint32_t>(big.get_ui());
        }
        m = m * Monomial::of(*var, e);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {m, c};
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("polynomial: " + msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Integer mag = abs(c);
    if (m.is_constant()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += to_string(m);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace omt
