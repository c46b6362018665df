#pragma once

#include <algorithm>
#include <concepts>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "asg/algebra/integer.hpp"
#include "asg/error.hpp"

namespace asg {

namespace detail {
template <class S>
bool scalar_is_zero(const S& s) {
  return is_zero(s);
}
}  // namespace detail

/// Dense univariate polynomial over an exact commutative ring, low degree first.
///
/// The scalar type must provide `+ - *`, `==`, value-initialisation to zero and
/// the free functions `is_zero(s)`, `exact_divide(a, b) -> std::optional<S>` and
/// `conjugate(s)`. The coefficient vector never has trailing zeros, so equality
/// is structural.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;

  // Implicit so that Eigen can build Scalar(0) and Scalar(1).
  Polynomial(const Scalar& constant) : coeffs_{constant} { trim(); }  // NOLINT
  template <std::integral I>
  Polynomial(I constant) : coeffs_{Scalar(static_cast<long long>(constant))} {  // NOLINT
    trim();
  }

  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const Scalar& c, int degree) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
  }

  /// The indeterminate t.
  static Polynomial variable() { return monomial(Scalar(1LL), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Coefficient of t^i; zero beyond the degree.
  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar{}; }
  const Scalar& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (asg_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const {
    Polynomial result(Scalar(1LL));
    Polynomial base = *this;
    while (k) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k) base *= base;
    }
    return result;
  }

  Scalar evaluate(const Scalar& x) const {
    Scalar acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out[i - 1] = coeffs_[i] * Scalar(static_cast<long long>(i));
    }
    return Polynomial(std::move(out));
  }

  /// Truncation modulo t^n.
  Polynomial truncated(std::size_t n) const {
    if (coeffs_.size() <= n) return *this;
    return Polynomial(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  template <class F>
  auto map(F&& f) const {
    using Out = decltype(f(std::declval<const Scalar&>()));
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Polynomial<Out>(std::move(out));
  }

 private:
  static bool asg_is_zero(const Scalar& s) { return detail::scalar_is_zero(s); }

  void trim() {
    while (!coeffs_.empty() && asg_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

template <class S>
bool is_zero(const Polynomial<S>& p) {
  return p.is_zero();
}

template <class S>
Polynomial<S> conjugate(const Polynomial<S>& p) {
  return p.map([](const S& c) { return conjugate(c); });
}

/// Exact quotient a / b, or nullopt when b does not divide a.
template <class S>
std::optional<Polynomial<S>> exact_divide(const Polynomial<S>& a, const Polynomial<S>& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Polynomial<S>();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<S> rem = a.coefficients();
  const auto& div = b.coefficients();
  const std::size_t db = div.size() - 1;
  std::vector<S> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const S& top = rem[k + db];
    if (is_zero(top)) continue;
    auto q = exact_divide(top, div[db]);
    if (!q) return std::nullopt;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - *q * div[j];
    quot[k] = std::move(*q);
  }
  for (const auto& r : rem) {
    if (!is_zero(r)) return std::nullopt;
  }
  return Polynomial<S>(std::move(quot));
}

/// Exact quotient; throws ExactDivisionFailure on a remainder.
template <class S>
Polynomial<S> divide_exactly(const Polynomial<S>& a, const Polynomial<S>& b) {
  auto q = exact_divide(a, b);
  if (!q) throw ExactDivisionFailure("polynomial division left a remainder");
  return std::move(*q);
}

/// (1 - t^2)^e for any integer e; negative exponents divide `p` exactly.
template <class S>
Polynomial<S> times_one_minus_t2_power(Polynomial<S> p, int e) {
  const Polynomial<S> f(std::vector<S>{S(1LL), S{}, S(-1LL)});
  for (; e > 0; --e) p *= f;
  for (; e < 0; ++e) p = divide_exactly(p, f);
  return p;
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Polynomial<S>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p.coefficients()[i];
    if (is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (i >= 1) os << "*t";
    if (i >= 2) os << "^" << i;
  }
  return os;
}

template <class S>
std::string to_string(const Polynomial<S>& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace asg
