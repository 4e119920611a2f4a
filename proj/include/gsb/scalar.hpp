#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gsb/errors.hpp"

namespace gsb {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in the formal parameter (the loop value δ, written `d`
/// on the text surfaces) with arbitrary-precision integer coefficients.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(int v) : ZPoly(BigInt(v)) {}
  ZPoly(BigInt v) {
    if (v != 0) coeff_.push_back(std::move(v));
  }

  // c * d^exp
  static ZPoly param(unsigned exp = 1, BigInt c = BigInt(1)) {
    ZPoly p;
    if (c != 0) {
      p.coeff_.resize(exp + 1);
      p.coeff_[exp] = std::move(c);
    }
    return p;
  }

  bool is_zero() const { return coeff_.empty(); }
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }  // -1 for zero
  BigInt coeff(std::size_t k) const { return k < coeff_.size() ? coeff_[k] : BigInt(0); }
  const BigInt& leading() const { return coeff_.back(); }  // pre: nonzero
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const BigInt& c : coeff_)
      if (c != 0) ++n;
    return n;
  }

  bool operator==(const ZPoly&) const = default;

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.coeff_.resize(std::max(a.coeff_.size(), b.coeff_.size()));
    for (std::size_t k = 0; k < r.coeff_.size(); ++k) r.coeff_[k] = a.coeff(k) + b.coeff(k);
    r.trim();
    return r;
  }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }
  ZPoly operator-() const {
    ZPoly r = *this;
    for (BigInt& c : r.coeff_) c = -c;
    return r;
  }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    ZPoly r;
    r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
      if (a.coeff_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeff_.size(); ++j) r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
    }
    r.trim();
    return r;
  }

  // gcd of the integer coefficients, nonnegative (0 only for the zero polynomial)
  BigInt content() const {
    BigInt g = 0;
    for (const BigInt& c : coeff_) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? BigInt(-g) : g;
  }

  // content removed and leading coefficient made positive
  ZPoly primitive_part() const {
    if (is_zero()) return ZPoly();
    BigInt c = content();
    if (leading() < 0) c = -c;
    ZPoly r = *this;
    for (BigInt& x : r.coeff_) x /= c;
    return r;
  }

  // pre: b nonzero and b | a exactly in Z[d]
  friend ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw division_by_zero_error("divexact by zero polynomial");
    if (a.is_zero()) return ZPoly();
    if (a.degree() < b.degree()) throw error("non-exact polynomial division");
    ZPoly rem = a, q;
    q.coeff_.assign(a.degree() - b.degree() + 1, BigInt(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      if (rem.leading() % b.leading() != 0) throw error("non-exact polynomial division");
      BigInt qc = rem.leading() / b.leading();
      unsigned shift = static_cast<unsigned>(rem.degree() - b.degree());
      q.coeff_[shift] = qc;
      rem = rem - b * ZPoly::param(shift, qc);
    }
    if (!rem.is_zero()) throw error("non-exact polynomial division");
    q.trim();
    return q;
  }

  // gcd in Z[d] (content included), leading coefficient positive
  friend ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.is_zero() ? ZPoly() : (b.leading() < 0 ? -b : b);
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    BigInt c = boost::multiprecision::gcd(a.content(), b.content());
    ZPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
      ZPoly r = pseudo_rem(f, g);
      f = std::move(g);
      g = r.is_zero() ? std::move(r) : r.primitive_part();
    }
    return f * ZPoly(c);
  }

  std::string str(const std::string& param_name = "d") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const BigInt& c = coeff_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      bool neg = c < 0;
      BigInt m = neg ? BigInt(-c) : c;
      std::string part;
      if (k == 0) {
        part = m.str();
      } else {
        if (m != 1) part = m.str() + "*";
        part += param_name;
        if (k > 1) part += "^" + std::to_string(k);
      }
      if (out.empty())
        out = (neg ? "-" : "") + part;
      else
        out += (neg ? " - " : " + ") + part;
    }
    return out;
  }

 private:
  std::vector<BigInt> coeff_;  // coeff_[k] multiplies d^k; no trailing zeros

  void trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
  }

  // pre: deg f >= deg g >= 0
  static ZPoly pseudo_rem(ZPoly f, const ZPoly& g) {
    while (!f.is_zero() && f.degree() >= g.degree()) {
      BigInt lf = f.leading();
      unsigned shift = static_cast<unsigned>(f.degree() - g.degree());
      f = f * ZPoly(g.leading()) - g * ZPoly::param(shift, lf);
    }
    return f;
  }
};

/// Coefficient scalar: an element of the fraction field of ZPoly kept in
/// lowest terms (integer content and polynomial gcd removed) with a
/// positive-leading denominator. The denominator stays 1 everywhere except
/// when completion rescales a non-monic element.
class ParamScalar {
 public:
  ParamScalar() = default;  // zero
  ParamScalar(int v) : num_(v) {}
  ParamScalar(BigInt v) : num_(std::move(v)) {}
  ParamScalar(ZPoly p) : num_(std::move(p)) {}
  ParamScalar(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero_error("zero denominator");
    reduce();
  }

  static ParamScalar delta(unsigned exp = 1, BigInt c = BigInt(1)) {
    return ParamScalar(ZPoly::param(exp, std::move(c)));
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == ZPoly(1) && den_ == ZPoly(1); }
  bool is_polynomial() const { return den_ == ZPoly(1); }
  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  bool operator==(const ParamScalar&) const = default;

  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
    return ParamScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }
  ParamScalar operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    return ParamScalar(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend ParamScalar exact_divide(const ParamScalar& a, const ParamScalar& b) {
    if (b.is_zero()) throw division_by_zero_error("division by zero scalar");
    return ParamScalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
    return exact_divide(a, b);
  }

  // sign of the value for display purposes: sign of the numerator's leading
  // integer (the denominator is positive-leading by invariant)
  bool display_negative() const { return !num_.is_zero() && num_.leading() < 0; }

  /// True when the value is 2^a * d^b with a, b >= 0; reports the exponents.
  bool two_delta_form(unsigned* pow2 = nullptr, unsigned* powdelta = nullptr) const {
    if (!is_polynomial() || num_.is_zero()) return false;
    if (num_.term_count() != 1) return false;
    unsigned b = static_cast<unsigned>(num_.degree());
    BigInt c = num_.leading();
    if (c <= 0) return false;
    if ((c & (c - 1)) != 0) return false;
    unsigned a = 0;
    while (c > 1) {
      c >>= 1;
      ++a;
    }
    if (pow2) *pow2 = a;
    if (powdelta) *powdelta = b;
    return true;
  }

  std::string str(const std::string& param_name = "d") const {
    std::string ns = num_.str(param_name);
    if (is_polynomial()) return ns;
    auto wrap = [](const std::string& s) {
      return s.find_first_of("+-* ") == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(ns) + "/" + wrap(den_.str(param_name));
  }

 private:
  ZPoly num_{};
  ZPoly den_{ZPoly(1)};

  void reduce() {
    if (num_.is_zero()) {
      den_ = ZPoly(1);
      return;
    }
    ZPoly g = gcd(num_, den_);
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
};

}  // namespace gsb
