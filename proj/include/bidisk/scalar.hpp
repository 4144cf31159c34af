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
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bidisk {

using cd = std::complex<double>;

enum class Backend { Exact, Float };

// Gaussian rational re + i*im with exact GMP components.
struct GQ {
  mpq_class re, im;

  GQ() : re(0), im(0) {}
  GQ(long r) : re(r), im(0) {}
  GQ(mpq_class r) : re(std::move(r)), im(0) {}
  GQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  GQ(long r, long i) : re(r), im(i) {}

  static GQ I() { return GQ(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GQ conj() const { return GQ(re, -im); }
  mpq_class norm2() const { return re * re + im * im; }
  GQ inv() const;
  cd to_cd() const { return {re.get_d(), im.get_d()}; }

  GQ &operator+=(const GQ &o) { re += o.re; im += o.im; return *this; }
  GQ &operator-=(const GQ &o) { re -= o.re; im -= o.im; return *this; }
  GQ &operator*=(const GQ &o);
  GQ &operator/=(const GQ &o) { return *this *= o.inv(); }
};

GQ operator+(GQ a, const GQ &b);
GQ operator-(GQ a, const GQ &b);
GQ operator-(const GQ &a);
GQ operator*(GQ a, const GQ &b);
GQ operator/(GQ a, const GQ &b);
bool operator==(const GQ &a, const GQ &b);
inline bool operator!=(const GQ &a, const GQ &b) { return !(a == b); }

// "a/b", "a", "-3/4"
mpq_class parse_rational(const std::string &s);
std::string rational_str(const mpq_class &q);
// Gaussian literal such as "3/5+4/5i", "-i", "2", "1/2-i".
GQ parse_gaussian(const std::string &s);
std::string to_string(const GQ &z);

// Best rational approximation of x with denominator <= max_den; nullopt-free:
// returns false when the residual exceeds tol.
bool rationalize(double x, long max_den, double tol, mpq_class &out);
bool rationalize(cd z, long max_den, double tol, GQ &out);

// Scalar traits shared by the templated algorithms.
template <class S> struct ScalarTraits;

template <> struct ScalarTraits<GQ> {
  static constexpr Backend backend = Backend::Exact;
  static bool is_zero(const GQ &x, double = 0) { return x.is_zero(); }
  static GQ conj(const GQ &x) { return x.conj(); }
  static cd to_cd(const GQ &x) { return x.to_cd(); }
  static GQ from_long(long v) { return GQ(v); }
  static double abs(const GQ &x) { return std::abs(x.to_cd()); }
};

template <> struct ScalarTraits<cd> {
  static constexpr Backend backend = Backend::Float;
  static bool is_zero(const cd &x, double tol = 0) { return std::abs(x) <= tol; }
  static cd conj(const cd &x) { return std::conj(x); }
  static cd to_cd(const cd &x) { return x; }
  static cd from_long(long v) { return cd(double(v), 0.0); }
  static double abs(const cd &x) { return std::abs(x); }
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CrossCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace bidisk
