#include "permclass/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace permclass {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty() || coeffs_.front() == 0)
    throw Error(Errc::Unsupported, "polynomial needs a nonzero leading coefficient");
}

mpq_class IntPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (const auto& c : coeffs_) acc = acc * x + c;
  return acc;
}

int IntPolynomial::sign_at(const mpq_class& x) const { return sgn((*this)(x)); }

std::string IntPolynomial::to_string() const {
  std::string out;
  const auto d = degree();
  for (std::size_t i = 0; i <= d; ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    const auto power = d - i;
    const mpz_class mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || power == 0) out += mag.get_str();
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

IntPolynomial char_poly(const LinearRecurrence& r) {
  std::vector<mpz_class> c{1};
  for (const auto& q : r.coefficients) {
    if (q.get_den() != 1)
      throw Error(Errc::Unsupported, "characteristic polynomial needs integer coefficients, got " + q.get_str());
    c.push_back(-q.get_num());
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial alpha_poly(std::size_t i) {
  std::vector<mpz_class> c(i + 1, -1);
  c[0] = 1;
  return IntPolynomial(std::move(c));
}

namespace {

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Rational polynomial, coefficient k multiplies x^k; no trailing zeros.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly from_int(const IntPolynomial& p) {
  QPoly q(p.coefficients().rbegin(), p.coefficients().rend());
  trim(q);
  return q;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const auto shift = a.size() - b.size();
    const mpq_class f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  return chain;
}

std::size_t sign_changes(const std::vector<QPoly>& chain, const mpq_class& x) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& p : chain) {
    const int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::size_t roots_in(const std::vector<QPoly>& chain, const mpq_class& lo, const mpq_class& hi) {
  const auto a = sign_changes(chain, lo);
  const auto b = sign_changes(chain, hi);
  return a > b ? a - b : 0;
}

QPoly square_free(const QPoly& p) {
  auto g = gcd(p, derivative(p));
  if (g.size() <= 1) return p;
  return divmod(p, g).first;
}

// Largest power of two not above x (x > 0), as a rational.
mpq_class dyadic_below(double x) {
  mpq_class d = 1;
  while (d > x) d /= 2;
  return d;
}

RootEstimate make_estimate(mpq_class lo, mpq_class hi) {
  const mpq_class mid = (lo + hi) / 2;
  const mpq_class half = (hi - lo) / 2;
  return {mid.get_d(), half.get_d(), std::move(lo), std::move(hi)};
}

} // namespace

std::size_t count_real_roots(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
  return roots_in(sturm_chain(from_int(p)), lo, hi);
}

RootEstimate dominant_root(const IntPolynomial& p, double tol) {
  if (!(tol > 0)) throw Error(Errc::Undefined, "tolerance must be positive");
  const auto& c = p.coefficients();
  mpq_class bound = 0;
  for (std::size_t i = 1; i < c.size(); ++i) bound = std::max(bound, ratio(abs(c[i]), abs(c[0])));
  bound += 1;

  const QPoly s = square_free(from_int(p));
  const auto chain = sturm_chain(s);
  mpq_class lo = 1;
  mpq_class hi = bound;
  if (roots_in(chain, lo, hi) == 0)
    throw Error(Errc::NoRootAboveOne, "no real root of " + p.to_string() + " in (1, " + bound.get_str() + "]");

  // Narrow (lo, hi] until it holds only the largest root.
  while (roots_in(chain, lo, hi) > 1) {
    const mpq_class mid = (lo + hi) / 2;
    if (roots_in(chain, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }

  auto exact = [&](const mpq_class& r) {
    mpq_class delta = dyadic_below(tol / 2);
    while (roots_in(chain, r - delta, r + delta) != 1 || sgn(eval(s, r - delta)) == 0 ||
           sgn(eval(s, r + delta)) == 0)
      delta /= 2;
    return make_estimate(r - delta, r + delta);
  };

  if (sgn(eval(s, hi)) == 0) return exact(hi);
  // lo may sit on a smaller root; step it up with root counts until its sign is defined.
  while (sgn(eval(s, lo)) == 0) {
    const mpq_class mid = (lo + hi) / 2;
    if (roots_in(chain, mid, hi) == 1)
      lo = mid;
    else
      hi = mid;
    if (sgn(eval(s, hi)) == 0) return exact(hi);
  }

  int sign_lo = sgn(eval(s, lo));
  while (mpq_class(hi - lo).get_d() > tol) {
    const mpq_class mid = (lo + hi) / 2;
    const int sm = sgn(eval(s, mid));
    if (sm == 0) return exact(mid);
    if (sm == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  return make_estimate(lo, hi);
}

RootEstimate alpha(std::size_t i, double tol) {
  if (i < 2) throw Error(Errc::InvalidIndex, "alpha needs i >= 2, got " + std::to_string(i));
  return dominant_root(alpha_poly(i), tol);
}

GrowthRatio empirical_growth(const CountSeq& seq) {
  const auto n = seq.size();
  if (n < 2) throw Error(Errc::Undefined, "growth ratio needs at least two terms");
  const auto& last = seq.at(n);
  const auto& prev = seq.at(n - 1);
  if (sgn(last) <= 0 || sgn(prev) <= 0) throw Error(Errc::Undefined, "growth ratio needs positive final terms");
  return {ratio(last, prev).get_d(), n};
}

std::string format_root(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", value);
  return buf;
}

} // namespace permclass
