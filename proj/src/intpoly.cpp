#include "sympow/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace sympow {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::variable() {
  IntPolynomial p;
  p.c_ = {Int(0), Int(1)};
  return p;
}

const Int& IntPolynomial::coeff(int k) const {
  static const Int zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Int& s, const IntPolynomial& a) {
  if (s == 0) return IntPolynomial();
  IntPolynomial r(a);
  for (auto& x : r.c_) x *= s;
  return r;
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree())
    throw std::domain_error("polynomial division not exact");
  std::vector<Int> rem = c_;
  const auto& d = divisor.c_;
  const Int& lead = d.back();
  std::vector<Int> quot(rem.size() - d.size() + 1, Int(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Int& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                lead.get_mpz_t());
    if (r != 0) throw std::domain_error("polynomial division not exact");
    quot[k] = q;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
  }
  for (const Int& x : rem)
    if (x != 0) throw std::domain_error("polynomial division not exact");
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ' ';
    os << c_[i].get_str();
  }
  return os.str();
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
  std::istringstream is(text);
  std::vector<Int> coeffs;
  std::string tok;
  while (is >> tok) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
      throw std::invalid_argument("bad polynomial coefficient: " + tok);
    coeffs.push_back(std::move(v));
  }
  if (coeffs.empty()) throw std::invalid_argument("empty polynomial text");
  return IntPolynomial(std::move(coeffs));
}

bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
  const int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace sympow
