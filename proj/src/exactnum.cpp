#include "pentarec/exactnum.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace pentarec {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational literal: '" + s + "'");
  }
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(long n, long k) {
  if (k < 0) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), Int(n).get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Int int_pow(long base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), Int(base).get_mpz_t(), exp);
  return r;
}

namespace {

// Akiyama-Tanigawa; produces B_1 = +1/2, flipped on return.
class BernoulliTable {
 public:
  Rat get(unsigned long n) {
    std::lock_guard lock(mu_);
    if (n >= values_.size()) extend(n + 1);
    return values_[n];
  }

 private:
  void extend(std::size_t count) {
    std::size_t target = std::max<std::size_t>(count, 2 * values_.size());
    std::vector<Rat> a(target);
    values_.assign(target, Rat(0));
    for (std::size_t m = 0; m < target; ++m) {
      a[m] = make_rat(1, static_cast<long>(m) + 1);
      for (std::size_t j = m; j >= 1; --j) a[j - 1] = Rat(static_cast<long>(j)) * (a[j - 1] - a[j]);
      values_[m] = a[0];
    }
    values_[1] = -values_[1];
  }

  std::mutex mu_;
  std::vector<Rat> values_;
};

}  // namespace

Rat bernoulli(unsigned long n) {
  static BernoulliTable table;
  if (n >= 3 && n % 2 == 1) return Rat(0);
  return table.get(n);
}

Rat rising_factorial(const Rat& x, long j) {
  if (j < 0) throw DomainError("rising factorial with negative length");
  Rat r(1);
  for (long i = 0; i < j; ++i) r *= x + i;
  return r;
}

Rat falling_factorial(const Rat& x, long m) {
  if (m >= 0) {
    Rat r(1);
    for (long i = 0; i < m; ++i) r *= x - i;
    return r;
  }
  Rat den = falling_factorial(x, -m);
  if (sgn(den) == 0) throw DivisionByZero("falling factorial (x)_{-m} vanishes");
  return 1 / den;
}

// --- PiScalar ---------------------------------------------------------------

PiScalar::PiScalar(Rat coeff, long half_pi_pow) : coeff_(std::move(coeff)), half_pi_pow_(half_pi_pow) {
  if (sgn(coeff_) == 0) half_pi_pow_ = 0;
}

PiScalar PiScalar::operator*(const PiScalar& o) const {
  return PiScalar(coeff_ * o.coeff_, half_pi_pow_ + o.half_pi_pow_);
}

PiScalar PiScalar::operator/(const PiScalar& o) const {
  if (o.is_zero()) throw DivisionByZero("division by zero PiScalar");
  return PiScalar(coeff_ / o.coeff_, half_pi_pow_ - o.half_pi_pow_);
}

PiScalar PiScalar::operator*(const Rat& r) const { return PiScalar(coeff_ * r, half_pi_pow_); }

PiScalar PiScalar::operator-() const { return PiScalar(-coeff_, half_pi_pow_); }

namespace {

mpf_class arctan_inv(unsigned long x, unsigned long bits) {
  // arctan(1/x) by its Taylor series.
  mpf_class sum(0, bits), term(1, bits);
  term /= x;
  mpf_class x2(x * x, bits);
  mpf_class eps(1, bits);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), bits + 8);
  for (unsigned long k = 0;; ++k) {
    mpf_class t = term / (2 * k + 1);
    if (k % 2 == 0) sum += t; else sum -= t;
    if (abs(t) < eps) break;
    term /= x2;
  }
  return sum;
}

}  // namespace

mpf_class pi_mpf(unsigned long bits) {
  static std::mutex mu;
  static std::map<unsigned long, mpf_class> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  unsigned long work = bits + 32;
  mpf_class pi = 4 * (4 * arctan_inv(5, work) - arctan_inv(239, work));
  mpf_class out(pi, bits);
  cache.emplace(bits, out);
  return out;
}

mpf_class PiScalar::to_mpf(unsigned long bits) const {
  mpf_class c(coeff_, bits);
  if (half_pi_pow_ == 0) return c;
  mpf_class sqrt_pi(0, bits);
  mpf_sqrt(sqrt_pi.get_mpf_t(), pi_mpf(bits).get_mpf_t());
  mpf_class p(1, bits);
  mpf_pow_ui(p.get_mpf_t(), sqrt_pi.get_mpf_t(), static_cast<unsigned long>(std::labs(half_pi_pow_)));
  return half_pi_pow_ > 0 ? mpf_class(c * p, bits) : mpf_class(c / p, bits);
}

double PiScalar::to_double() const { return to_mpf(192).get_d(); }

long double PiScalar::to_long_double() const {
  // mpf has no long double getter; split into double head + tail.
  mpf_class v = to_mpf(192);
  double hi = v.get_d();
  mpf_class rest = v - hi;
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

PiScalar gamma_exact(const Rat& x) {
  const Int& den = x.get_den();
  if (den == 1) {
    if (x <= 0) throw DomainError("Gamma has a pole at " + to_string(x));
    return PiScalar(Rat(factorial(x.get_num().get_ui() - 1)), 0);
  }
  if (den != 2) throw DomainError("gamma_exact needs an integer or half-integer, got " + to_string(x));
  if (x > 0) {
    // x = n + 1/2
    unsigned long n = Int((x.get_num() - 1) / 2).get_ui();
    Rat c = make_rat(factorial(2 * n), int_pow(4, n) * factorial(n));
    return PiScalar(c, 1);
  }
  // x = 1/2 - n with n >= 1
  unsigned long n = Int((1 - x.get_num()) / 2).get_ui();
  Int num = int_pow(-4, n) * factorial(n);
  return PiScalar(make_rat(num, factorial(2 * n)), 1);
}

// --- QuadNum ----------------------------------------------------------------

QuadNum::QuadNum(Rat a) : a_(std::move(a)) {}

QuadNum::QuadNum(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 1) throw DomainError("QuadNum needs d >= 1");
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

namespace {

Int common_field(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational()) return x.d();
  if (x.d() != y.d()) throw DomainError("QuadNum operands live in different fields");
  return x.d();
}

}  // namespace

QuadNum QuadNum::conjugate() const { return QuadNum(a_, -b_, d_); }

Rat QuadNum::norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

QuadNum QuadNum::operator+(const QuadNum& o) const {
  return QuadNum(a_ + o.a_, b_ + o.b_, common_field(*this, o));
}

QuadNum QuadNum::operator-(const QuadNum& o) const {
  return QuadNum(a_ - o.a_, b_ - o.b_, common_field(*this, o));
}

QuadNum QuadNum::operator*(const QuadNum& o) const {
  Int d = common_field(*this, o);
  return QuadNum(a_ * o.a_ + Rat(d) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d);
}

QuadNum QuadNum::operator/(const QuadNum& o) const {
  Rat n = o.norm();
  if (sgn(n) == 0) throw DivisionByZero("QuadNum division by zero");
  QuadNum num = *this * o.conjugate();
  return QuadNum(num.a_ / n, num.b_ / n, num.d_);
}

QuadNum QuadNum::operator-() const { return QuadNum(-a_, -b_, d_); }

bool QuadNum::operator==(const QuadNum& o) const {
  if (a_ != o.a_ || b_ != o.b_) return false;
  return is_rational() || d_ == o.d_;
}

mpf_class QuadNum::to_mpf(unsigned long bits) const {
  mpf_class r(a_, bits);
  if (is_rational()) return r;
  mpf_class s(d_, bits);
  mpf_sqrt(s.get_mpf_t(), s.get_mpf_t());
  return mpf_class(r + mpf_class(b_, bits) * s, bits);
}

double QuadNum::to_double() const { return to_mpf(256).get_d(); }

std::string to_string(const QuadNum& x) {
  if (x.is_rational()) return to_string(x.a());
  return to_string(x.a()) + " + (" + to_string(x.b()) + ")*sqrt(" + x.d().get_str() + ")";
}

// --- squarefree ---------------------------------------------------------------

SquarefreeSplit squarefree_split(const Int& n, unsigned long bound) {
  if (n < 1) throw DomainError("squarefree_split needs n >= 1");
  Int rest = n;
  Int s = 1, d = 1;
  for (unsigned long p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e / 2) s *= int_pow(static_cast<long>(p), e / 2);
    if (e % 2) d *= p;
  }
  if (rest > 1) {
    Int bb = Int(bound) * bound;
    if (rest <= bb || mpz_probab_prime_p(rest.get_mpz_t(), 40) > 0) {
      d *= rest;
    } else if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Int r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      if (mpz_probab_prime_p(r.get_mpz_t(), 40) == 0)
        throw DomainError("square part of " + n.get_str() + " not resolved by trial division");
      s *= r;
    } else {
      throw DomainError("square part of " + n.get_str() + " not resolved by trial division");
    }
  }
  return {s, d};
}

int kronecker_symbol(long a, long n) {
  thread_local mpz_class nz;
  nz = n;
  return mpz_si_kronecker(a, nz.get_mpz_t());
}

bool is_squarefree(const Int& n) { return squarefree_split(n).square_root == 1; }

}  // namespace pentarec
