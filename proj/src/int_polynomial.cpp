#include "coxperc/int_polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coxperc {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial IntPolynomial::constant(long v) {
  IntPolynomial p;
  if (v != 0) p.c_.emplace_back(v);
  return p;
}

IntPolynomial IntPolynomial::monomial(int degree, long v) {
  IntPolynomial p;
  if (v != 0) {
    p.c_.assign(static_cast<std::size_t>(degree) + 1, kZero);
    p.c_.back() = v;
  }
  return p;
}

const mpz_class& IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), kZero);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), kZero);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] -= o.c_[i];
  }
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  IntPolynomial r;
  r.c_.assign(c_.size() + o.c_.size() - 1, kZero);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

double IntPolynomial::eval(double t) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i].get_d();
  return acc;
}

mpq_class IntPolynomial::eval_exact(const mpq_class& t) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

bool IntPolynomial::is_palindromic() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0, j = c_.size() - 1; i < j; ++i, --j)
    if (c_[i] != c_[j]) return false;
  return true;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    const mpz_class a = abs(mpz_class(c_[i]));
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

IntPolynomial bracket(int n) {
  if (n < 0) throw std::invalid_argument("bracket: order must be >= 0");
  std::vector<mpz_class> c(static_cast<std::size_t>(n), 1);
  return IntPolynomial(std::move(c));
}

IntPolynomial bracket_product(const std::vector<int>& ns) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (int n : ns) {
    if (n < 1) throw std::invalid_argument("bracket_product: every factor order must be >= 1");
    p = p * bracket(n);
  }
  return p;
}

std::vector<mpz_class> series_divide(const IntPolynomial& num, const IntPolynomial& den,
                                     int n_max) {
  if (n_max < 0) throw std::invalid_argument("series_divide: n_max must be >= 0");
  const mpz_class d0 = den.coeff(0);
  if (d0 != 1 && d0 != -1)
    throw std::invalid_argument(
        "series_divide: denominator constant term must be a unit (zero or non-unit term "
        "after reduction)");
  // den_0 * w_n = num_n - sum_{i>=1} den_i * w_{n-i}, and den_0 = +-1.
  const bool flip = (d0 == -1);
  std::vector<mpz_class> w(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    mpz_class acc = num.coeff(n);
    for (int i = 1; i <= std::min(n, den.degree()); ++i)
      acc -= den.coeff(i) * w[static_cast<std::size_t>(n - i)];
    w[static_cast<std::size_t>(n)] = flip ? mpz_class(-acc) : std::move(acc);
  }
  return w;
}

}  // namespace coxperc
