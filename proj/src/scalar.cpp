#include "dsdict/scalar.hpp"

#include <cctype>
#include <sstream>

#include "dsdict/error.hpp"

namespace dsdict {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool seen_digit = false;
  bool seen_slash = false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      seen_digit = true;
    } else if (s[k] == '/' && !seen_slash && seen_digit && k + 1 < s.size()) {
      seen_slash = true;
    } else {
      throw ParseError("malformed rational '" + s + "'");
    }
  }
  if (!seen_digit) throw ParseError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (sgn(q) == 0) {
    root = 0;
    return true;
  }
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

// ---------------------------------------------------------------- GaussScalar

GaussScalar GaussScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(i)");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

int GaussScalar::real_sign() const {
  if (!is_real()) throw DomainError("sign of non-real scalar " + str());
  return sgn(re_);
}

std::string GaussScalar::str() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return re_.get_str();
  std::string out;
  if (has_re) out = re_.get_str();
  Rational mag = abs(im_);
  std::string im_part = mag == 1 ? std::string("i") : mag.get_str() + " i";
  if (sgn(im_) < 0) {
    out += "-";
  } else if (has_re) {
    out += "+";
  }
  return out + im_part;
}

namespace {

// Parses an optionally signed coefficient followed by an optional "i".
// Returns true if the term carried an "i".
bool parse_term(std::string term, Rational& value) {
  bool imaginary = false;
  if (!term.empty() && term.back() == 'i') {
    imaginary = true;
    term.pop_back();
    while (!term.empty() && term.back() == '*') term.pop_back();
  }
  if (imaginary && (term.empty() || term == "+" || term == "-")) {
    value = term == "-" ? -1 : 1;
    return true;
  }
  value = parse_rational(term);
  return imaginary;
}

}  // namespace

GaussScalar GaussScalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty scalar");
  // Split at a sign that is not the leading character.
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] == '+' || s[k] == '-') {
      if (split != std::string::npos) throw ParseError("malformed scalar '" + std::string(text) + "'");
      split = k;
    }
  }
  Rational re(0);
  Rational im(0);
  try {
    if (split == std::string::npos) {
      Rational v;
      if (parse_term(s, v)) {
        im = v;
      } else {
        re = v;
      }
    } else {
      Rational v1;
      Rational v2;
      bool i1 = parse_term(s.substr(0, split), v1);
      bool i2 = parse_term(s.substr(split), v2);
      if (i1 || !i2) throw ParseError("expected 'a+b i'");
      re = v1;
      im = v2;
    }
  } catch (const ParseError&) {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& s) { return os << s.str(); }

bool gauss_sqrt(const GaussScalar& z, GaussScalar& root) {
  Rational r;
  if (z.is_real()) {
    if (sgn(z.re()) >= 0) {
      if (!rational_sqrt(z.re(), r)) return false;
      root = GaussScalar(r);
      return true;
    }
    if (!rational_sqrt(-z.re(), r)) return false;
    root = GaussScalar(Rational(0), r);
    return true;
  }
  Rational modulus;
  if (!rational_sqrt(z.norm(), modulus)) return false;
  Rational x;
  Rational y;
  if (!rational_sqrt((modulus + z.re()) / 2, x) || !rational_sqrt((modulus - z.re()) / 2, y)) return false;
  if (sgn(z.im()) < 0) y = -y;
  root = GaussScalar(x, y);
  return true;
}

// ----------------------------------------------------------------- QuadScalar

namespace {

// Splits a positive integer into square part and squarefree part: n = s^2 * f.
void squarefree_split(const mpz_class& n, mpz_class& square_root, mpz_class& free_part) {
  square_root = 1;
  free_part = 1;
  mpz_class rest = n;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    int count = 0;
    while (rest % p == 0) {
      rest /= p;
      ++count;
    }
    for (int c = 0; c < count / 2; ++c) square_root *= p;
    if (count % 2 == 1) free_part *= p;
  }
  free_part *= rest;
}

}  // namespace

QuadScalar::QuadScalar(GaussScalar a, GaussScalar b, long m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (m_ < 1) throw DomainError("surd must be positive");
  normalize();
}

void QuadScalar::normalize() {
  if (m_ == 1) {
    a_ += b_;
    b_ = GaussScalar();
  }
}

QuadScalar QuadScalar::sqrt_of(const Rational& q) {
  if (sgn(q) <= 0) throw DomainError("sqrt of non-positive rational " + q.get_str());
  // q = num/den = num*den/den^2
  mpz_class n = q.get_num() * q.get_den();
  mpz_class s;
  mpz_class f;
  squarefree_split(n, s, f);
  Rational coeff(s, q.get_den());
  coeff.canonicalize();
  if (f == 1) return QuadScalar(GaussScalar(coeff));
  if (!f.fits_slong_p()) throw DomainError("surd too large");
  return {GaussScalar(), GaussScalar(coeff), f.get_si()};
}

void QuadScalar::unify(const QuadScalar& o) {
  if (o.m_ == 1 || o.b_.is_zero()) return;
  if (m_ == 1 || b_.is_zero()) {
    m_ = o.m_;
    return;
  }
  if (m_ != o.m_) {
    throw DomainError("mixing sqrt(" + std::to_string(m_) + ") and sqrt(" + std::to_string(o.m_) +
                      ") is not supported");
  }
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  unify(o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_.is_zero()) m_ = 1;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  unify(o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_.is_zero()) m_ = 1;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  unify(o);
  GaussScalar na = a_ * o.a_ + b_ * o.b_ * GaussScalar(m_);
  GaussScalar nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  if (b_.is_zero()) m_ = 1;
  return *this;
}

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(i)(sqrt m)");
  // (a + b r)^{-1} = (a - b r) / (a^2 - m b^2); the denominator is nonzero
  // because sqrt(m) is not in Q(i) for squarefree m > 1.
  GaussScalar den = a_ * a_ - b_ * b_ * GaussScalar(m_);
  GaussScalar inv = den.inverse();
  QuadScalar r{a_ * inv, -b_ * inv, m_};
  return r;
}

bool operator==(const QuadScalar& x, const QuadScalar& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return x.a_ == y.a_;
  return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
}

int QuadScalar::real_sign() const {
  int sa = a_.real_sign();
  int sb = b_.real_sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with m b^2.
  Rational lhs = a_.re() * a_.re();
  Rational rhs = b_.re() * b_.re() * m_;
  if (lhs == rhs) return 0;  // unreachable for squarefree m > 1
  return lhs > rhs ? sa : sb;
}

GaussScalar QuadScalar::to_gauss() const {
  if (!b_.is_zero()) throw DomainError("value " + str() + " is not in Q(i)");
  return a_;
}

std::string QuadScalar::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out;
  if (!a_.is_zero()) out = a_.str() + " + ";
  return out + "(" + b_.str() + ")*sqrt(" + std::to_string(m_) + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& s) { return os << s.str(); }

}  // namespace dsdict
