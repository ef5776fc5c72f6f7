#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cablefloer/errors.hpp"

namespace cablefloer {

/// Finitely supported integer Laurent polynomial in one variable t.
/// Zero coefficients are never stored, so two equal polynomials compare equal
/// as maps.
template <typename Coeff = std::int64_t>
class BasicLaurentPolynomial {
 public:
  using coeff_type = Coeff;
  using map_type = std::map<std::int64_t, Coeff>;

  BasicLaurentPolynomial() = default;
  explicit BasicLaurentPolynomial(map_type coeffs) : coeffs_(std::move(coeffs)) { prune(); }
  BasicLaurentPolynomial(std::initializer_list<std::pair<const std::int64_t, Coeff>> init)
      : coeffs_(init) {
    prune();
  }

  static BasicLaurentPolynomial monomial(std::int64_t degree, Coeff c = Coeff{1}) {
    return BasicLaurentPolynomial(map_type{{degree, c}});
  }

  Coeff coeff(std::int64_t degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Coeff{0} : it->second;
  }

  void add_term(std::int64_t degree, Coeff c) {
    if (c == Coeff{0}) return;
    auto& slot = coeffs_[degree];
    slot += c;
    if (slot == Coeff{0}) coeffs_.erase(degree);
  }

  const map_type& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
  std::int64_t min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

  /// Value at t = 1.
  Coeff at_one() const {
    Coeff s{0};
    for (const auto& [d, c] : coeffs_) s += c;
    return s;
  }

  /// Sum of absolute values of the coefficients.
  Coeff abs_sum() const {
    Coeff s{0};
    for (const auto& [d, c] : coeffs_) s += c < Coeff{0} ? -c : c;
    return s;
  }

  bool is_symmetric() const {
    for (const auto& [d, c] : coeffs_)
      if (coeff(-d) != c) return false;
    return true;
  }

  /// t -> t^k
  BasicLaurentPolynomial substitute_power(std::int64_t k) const {
    BasicLaurentPolynomial out;
    for (const auto& [d, c] : coeffs_) out.add_term(d * k, c);
    return out;
  }

  BasicLaurentPolynomial shifted(std::int64_t by) const {
    BasicLaurentPolynomial out;
    for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d + by, c);
    return out;
  }

  friend BasicLaurentPolynomial operator+(const BasicLaurentPolynomial& x,
                                          const BasicLaurentPolynomial& y) {
    BasicLaurentPolynomial out = x;
    for (const auto& [d, c] : y.coeffs_) out.add_term(d, c);
    return out;
  }

  friend BasicLaurentPolynomial operator-(const BasicLaurentPolynomial& x) {
    BasicLaurentPolynomial out;
    for (const auto& [d, c] : x.coeffs_) out.coeffs_.emplace(d, -c);
    return out;
  }

  friend BasicLaurentPolynomial operator-(const BasicLaurentPolynomial& x,
                                          const BasicLaurentPolynomial& y) {
    return x + (-y);
  }

  friend BasicLaurentPolynomial operator*(const BasicLaurentPolynomial& x,
                                          const BasicLaurentPolynomial& y) {
    BasicLaurentPolynomial out;
    for (const auto& [dx, cx] : x.coeffs_)
      for (const auto& [dy, cy] : y.coeffs_) out.add_term(dx + dy, cx * cy);
    return out;
  }

  friend BasicLaurentPolynomial operator*(Coeff k, const BasicLaurentPolynomial& x) {
    BasicLaurentPolynomial out;
    for (const auto& [d, c] : x.coeffs_) out.add_term(d, k * c);
    return out;
  }

  friend bool operator==(const BasicLaurentPolynomial&, const BasicLaurentPolynomial&) = default;

  /// Exact division; throws ConsistencyError when `divisor` does not divide.
  BasicLaurentPolynomial divided_by(const BasicLaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw ConsistencyError("division by zero polynomial");
    const auto lead_deg = divisor.max_degree();
    const Coeff lead = divisor.coeff(lead_deg);
    BasicLaurentPolynomial rem = *this;
    BasicLaurentPolynomial quo;
    const auto span = lead_deg - divisor.min_degree();
    while (!rem.is_zero() && rem.max_degree() - rem.min_degree() >= span) {
      const auto d = rem.max_degree();
      const Coeff c = rem.coeff(d);
      if (c % lead != Coeff{0}) throw ConsistencyError("inexact polynomial division");
      const auto q = monomial(d - lead_deg, c / lead);
      quo = quo + q;
      rem = rem - q * divisor;
    }
    if (!rem.is_zero()) throw ConsistencyError("inexact polynomial division");
    return quo;
  }

  /// e.g. "2t^-2 - 6t^-1 + 9 - 6t + 2t^2"
  std::string to_string(std::string_view var = "t") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
      Coeff mag = c < Coeff{0} ? -c : c;
      if (first) {
        if (c < Coeff{0}) os << '-';
      } else {
        os << (c < Coeff{0} ? " - " : " + ");
      }
      first = false;
      if (mag != Coeff{1} || d == 0) os << mag;
      if (d != 0) {
        os << var;
        if (d != 1) os << '^' << d;
      }
    }
    return os.str();
  }

 private:
  void prune() {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == Coeff{0}; });
  }

  map_type coeffs_;
};

using LaurentPolynomial = BasicLaurentPolynomial<std::int64_t>;

/// Builds a polynomial from a centered coefficient list: entry k of a
/// (2g+1)-entry list becomes the coefficient of t^(k-g).
inline LaurentPolynomial from_centered(const std::vector<std::int64_t>& coeffs) {
  if (coeffs.size() % 2 == 0)
    throw InputError("coefficient list must have odd length, got " + std::to_string(coeffs.size()));
  const auto g = static_cast<std::int64_t>(coeffs.size() / 2);
  LaurentPolynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(static_cast<std::int64_t>(k) - g, coeffs[k]);
  return p;
}

/// Parses "2,-6,9,-6,2" (whitespace around tokens allowed).
inline LaurentPolynomial parse_delta(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string token(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty coefficient in Alexander polynomial list");
    token = token.substr(b, e - b + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw InputError("not an integer: '" + token + "'");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_centered(values);
}

}  // namespace cablefloer
