/*
 * Copyright 2026 The bidisk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "bidisk/scalar.hpp"

#include <cctype>
#include <cmath>

namespace bidisk {

GQ GQ::inv() const {
  mpq_class d = norm2();
  if (sgn(d) == 0) throw std::domain_error("division by zero Gaussian rational");
  return GQ(re / d, -im / d);
}

GQ &GQ::operator*=(const GQ &o) {
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GQ operator+(GQ a, const GQ &b) { return a += b; }
GQ operator-(GQ a, const GQ &b) { return a -= b; }
GQ operator-(const GQ &a) { return GQ(-a.re, -a.im); }
GQ operator*(GQ a, const GQ &b) { return a *= b; }
GQ operator/(GQ a, const GQ &b) { return a /= b; }
bool operator==(const GQ &a, const GQ &b) { return a.re == b.re && a.im == b.im; }

mpq_class parse_rational(const std::string &s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.find('.') != std::string::npos || t.find('e') != std::string::npos ||
      t.find('E') != std::string::npos) {
    // decimal literal: exact value of the decimal string
    size_t epos = t.find_first_of("eE");
    std::string mant = t.substr(0, epos);
    long ex = epos == std::string::npos ? 0 : std::stol(t.substr(epos + 1));
    bool neg = !mant.empty() && mant[0] == '-';
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) mant = mant.substr(1);
    size_t dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      ex -= long(mant.size() - dot - 1);
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
    }
    if (digits.empty()) throw std::invalid_argument("bad rational: " + s);
    mpz_class num(digits, 10);
    mpq_class q(num);
    mpz_class ten(10), p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(ex)));
    if (ex >= 0) q *= p; else q /= p;
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }
  mpq_class q;
  if (q.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class &q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_str(10);
}

GQ parse_gaussian(const std::string &s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty Gaussian literal");
  if (t.back() != 'i') return GQ(parse_rational(t));
  // split at the last +/- that is not at position 0 and not after 'e'
  size_t split = std::string::npos;
  for (size_t k = t.size() - 1; k > 0; --k) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string rs = split == std::string::npos ? "" : t.substr(0, split);
  std::string is = t.substr(split == std::string::npos ? 0 : split);
  is.pop_back();
  mpq_class im;
  if (is.empty() || is == "+") im = 1;
  else if (is == "-") im = -1;
  else {
    if (is.back() == '*') is.pop_back();
    im = parse_rational(is);
  }
  mpq_class re = rs.empty() ? mpq_class(0) : parse_rational(rs);
  return GQ(re, im);
}

std::string to_string(const GQ &z) {
  if (z.is_real()) return rational_str(z.re);
  std::string im = rational_str(z.im);
  std::string ims = (im == "1") ? "" : (im == "-1" ? "-" : im);
  if (sgn(z.re) == 0) return ims + "i";
  std::string sep = sgn(z.im) > 0 ? "+" : "";
  return rational_str(z.re) + sep + ims + "i";
}

bool rationalize(double x, long max_den, double tol, mpq_class &out) {
  if (!std::isfinite(x)) return false;
  // continued fraction convergents
  double v = x;
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(v);
    if (std::fabs(a) > 1e15) break;
    long ai = long(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::fabs(double(h1) / double(k1) - x) <= tol) {
      out = mpq_class(h1, k1);
      out.canonicalize();
      return true;
    }
    double frac = v - a;
    if (frac < 1e-300) break;
    v = 1.0 / frac;
  }
  if (k1 > 0 && std::fabs(double(h1) / double(k1) - x) <= tol) {
    out = mpq_class(h1, k1);
    out.canonicalize();
    return true;
  }
  return false;
}

bool rationalize(cd z, long max_den, double tol, GQ &out) {
  mpq_class r, i;
  if (!rationalize(z.real(), max_den, tol, r)) return false;
  if (!rationalize(z.imag(), max_den, tol, i)) return false;
  out = GQ(r, i);
  return true;
}

} // namespace bidisk
