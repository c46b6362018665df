#include "asg/algebra/cyclotomic.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace asg {

namespace {

// Φ_m(x) = (x^m - 1) / Π_{d | m, d < m} Φ_d(x), all monic with integer coefficients.
std::vector<long long> compute_cyclotomic(int m, const std::vector<std::vector<long long>>& known) {
  std::vector<long long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = known[static_cast<std::size_t>(d)];
    const std::size_t dd = den.size() - 1;
    std::vector<long long> quot(num.size() - dd, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
      const long long q = num[k + dd];
      quot[k] = q;
      for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= q * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

const std::vector<std::vector<long long>>& cyclotomic_table() {
  static const std::vector<std::vector<long long>> table = [] {
    std::vector<std::vector<long long>> t(kMaxCyclotomicOrder + 1);
    for (int m = 1; m <= kMaxCyclotomicOrder; ++m) t[static_cast<std::size_t>(m)] = compute_cyclotomic(m, t);
    return t;
  }();
  return table;
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int m) {
  if (m < 1 || m > kMaxCyclotomicOrder) {
    throw std::out_of_range("cyclotomic order " + std::to_string(m) + " outside 1.." +
                            std::to_string(kMaxCyclotomicOrder));
  }
  return cyclotomic_table()[static_cast<std::size_t>(m)];
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

CycInt::CycInt(int order, std::vector<Integer> coeffs) : CycInt(reduce(order, std::move(coeffs))) {}

CycInt CycInt::reduce(int order, std::vector<Integer> raw) {
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = raw.size(); k-- > deg;) {
    if (raw[k].is_zero()) continue;
    const Integer q = raw[k];
    for (std::size_t j = 0; j <= deg; ++j) raw[k - deg + j] -= q * phi[j];
  }
  raw.resize(deg);
  CycInt out;
  out.order_ = order;
  out.coeffs_ = std::move(raw);
  return out;
}

CycInt CycInt::root_of_unity(int order, long long k) {
  std::vector<Integer> raw(static_cast<std::size_t>(mod(k, order)) + 1);
  raw.back() = 1;
  return reduce(order, std::move(raw));
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycInt::is_rational_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Integer CycInt::to_integer() const {
  if (!is_rational_integer()) throw NotRationalInteger(0);
  return coeffs_[0];
}

CycInt CycInt::promoted(int m) const {
  if (order_ == m) return *this;
  if (order_ != 1) {
    throw OrderMismatch("cannot express order " + std::to_string(order_) + " value in order " + std::to_string(m));
  }
  std::vector<Integer> c(static_cast<std::size_t>(euler_phi(m)));
  c[0] = coeffs_[0];
  CycInt out;
  out.order_ = m;
  out.coeffs_ = std::move(c);
  return out;
}

int CycInt::common_order(const CycInt& a, const CycInt& b) {
  if (a.order_ == b.order_ || b.order_ == 1) return a.order_;
  if (a.order_ == 1) return b.order_;
  throw OrderMismatch("cyclotomic orders " + std::to_string(a.order_) + " and " + std::to_string(b.order_));
}

CycInt& CycInt::operator+=(const CycInt& o) {
  const int m = common_order(*this, o);
  if (order_ != m) *this = promoted(m);
  if (o.order_ == m) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    coeffs_[0] += o.coeffs_[0];
  }
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  const int m = common_order(*this, o);
  if (order_ != m) *this = promoted(m);
  if (o.order_ == m) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  } else {
    coeffs_[0] -= o.coeffs_[0];
  }
  return *this;
}

CycInt operator-(const CycInt& a) {
  CycInt out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  const int m = CycInt::common_order(a, b);
  if (a.order_ == 1 || b.order_ == 1) {
    const CycInt& scalar = a.order_ == 1 ? a : b;
    CycInt out = a.order_ == 1 ? b : a;
    if (out.order_ != m) out = out.promoted(m);
    for (auto& c : out.coeffs_) c *= scalar.coeffs_[0];
    return out;
  }
  std::vector<Integer> raw(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CycInt::reduce(m, std::move(raw));
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.order_ != 1 && b.order_ != 1) return false;
  const CycInt& lo = a.order_ == 1 ? a : b;
  const CycInt& hi = a.order_ == 1 ? b : a;
  return hi.is_rational_integer() && hi.coeffs_[0] == lo.coeffs_[0];
}

CycInt CycInt::galois(long long k) const {
  if (order_ == 1) return *this;
  std::vector<Integer> raw(static_cast<std::size_t>(order_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    raw[static_cast<std::size_t>(mod(static_cast<long long>(i) * k, order_))] += coeffs_[i];
  }
  return reduce(order_, std::move(raw));
}

Integer CycInt::norm() const {
  CycInt prod(1);
  for (int k = 1; k < std::max(order_, 2); ++k) {
    if (std::gcd(k, order_) == 1) prod *= galois(k);
  }
  return prod.to_integer();
}

std::ostream& operator<<(std::ostream& os, const CycInt& a) {
  if (a.order_ == 1) return os << a.coeffs_[0];
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << a.coeffs_[i];
    if (i > 0) os << "*z" << a.order_ << "^" << i;
  }
  if (first) os << "0";
  return os;
}

std::optional<CycInt> exact_divide(const CycInt& a, const CycInt& b) {
  if (b.is_zero()) return std::nullopt;
  Integer den;
  CycInt num = a;
  if (b.is_rational_integer()) {
    den = b.coefficients()[0];
  } else {
    // a / b = a * (product of the other conjugates of b) / N(b).
    CycInt others(1);
    for (int k = 2; k < b.order(); ++k) {
      if (std::gcd(k, b.order()) == 1) others *= b.galois(k);
    }
    num = a * others;
    den = (b * others).to_integer();
  }
  std::vector<Integer> q(num.coefficients().size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    auto qi = exact_divide(num.coefficients()[i], den);
    if (!qi) return std::nullopt;
    q[i] = *qi;
  }
  return CycInt(num.order(), std::move(q));
}

IntPoly to_integer_poly(const CycPoly& p) {
  std::vector<Integer> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p.coefficients()[i];
    if (!c.is_rational_integer()) throw NotRationalInteger(static_cast<int>(i));
    out.push_back(c.coefficients()[0]);
  }
  return IntPoly(std::move(out));
}

}  // namespace asg
