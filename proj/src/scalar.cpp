#include "latsurf/scalar.hpp"

#include <cctype>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace latsurf {

using Coeffs = std::vector<mpq_class>;

namespace detail {

// Raw-representation access used by the tower and root detection.
struct ScalarAccess {
  static int level(const ExactScalar& x) { return x.level_; }
  static const Coeffs& coeffs(const ExactScalar& x) { return x.c_; }
  static Coeffs liftedCoeffs(const ExactScalar& x, int level) {
    Coeffs c = x.c_;
    c.resize(size_t(1) << level, mpq_class(0));
    return c;
  }
  static ExactScalar make(int level, Coeffs c) {
    ExactScalar r;
    r.level_ = level;
    r.c_ = std::move(c);
    r.trim();
    r.recomputeApprox();
    return r;
  }
};

}  // namespace detail

namespace {

using detail::ScalarAccess;

// The process-global tower of adjoined radicals. Append-only: radicand k is
// an element of the field generated by radicals 0..k-1 and is never a square
// there. Reads take a shared lock, extension a unique lock.
class ScalarTower {
 public:
  static ScalarTower& instance() {
    static ScalarTower t;
    return t;
  }

  int size() const {
    std::shared_lock lk(mu_);
    return static_cast<int>(radicands_.size());
  }

  // Coefficients of radicand k, zero-extended to the given level.
  Coeffs radicandCoeffs(int k, int level) const {
    std::shared_lock lk(mu_);
    return ScalarAccess::liftedCoeffs(radicands_[k], level);
  }

  ExactScalar radicand(int k) const {
    std::shared_lock lk(mu_);
    return radicands_[k];
  }

  double radicandSqrtApprox(int k) const {
    std::shared_lock lk(mu_);
    return sqrtApprox_[k];
  }

  int adjoin(const ExactScalar& r) {
    std::unique_lock lk(mu_);
    radicands_.push_back(r);
    sqrtApprox_.push_back(std::sqrt(r.approx()));
    return static_cast<int>(radicands_.size()) - 1;
  }

 private:
  ScalarTower() = default;
  mutable std::shared_mutex mu_;
  std::vector<ExactScalar> radicands_;
  std::vector<double> sqrtApprox_;
};

bool allZero(const Coeffs& v, size_t from, size_t to) {
  for (size_t i = from; i < to; ++i)
    if (v[i] != 0) return false;
  return true;
}

Coeffs addVec(const Coeffs& a, const Coeffs& b) {
  Coeffs r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Coeffs negVec(const Coeffs& a) {
  Coeffs r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Coeffs lowerHalf(const Coeffs& a) { return Coeffs(a.begin(), a.begin() + a.size() / 2); }
Coeffs upperHalf(const Coeffs& a) { return Coeffs(a.begin() + a.size() / 2, a.end()); }

Coeffs join(const Coeffs& lo, const Coeffs& hi) {
  Coeffs r = lo;
  r.insert(r.end(), hi.begin(), hi.end());
  return r;
}

// (al + ah*sqrt(r)) * (bl + bh*sqrt(r)) with r the (level-1)-th radical.
Coeffs mulVec(const Coeffs& a, const Coeffs& b, int level) {
  if (level == 0) return Coeffs{a[0] * b[0]};
  Coeffs al = lowerHalf(a), ah = upperHalf(a);
  Coeffs bl = lowerHalf(b), bh = upperHalf(b);
  Coeffs rad = ScalarTower::instance().radicandCoeffs(level - 1, level - 1);
  Coeffs cross = mulVec(mulVec(ah, bh, level - 1), rad, level - 1);
  Coeffs lo = addVec(mulVec(al, bl, level - 1), cross);
  Coeffs hi = addVec(mulVec(al, bh, level - 1), mulVec(ah, bl, level - 1));
  return join(lo, hi);
}

int signVec(const Coeffs& a, int level) {
  if (level == 0) return sgn(a[0]);
  Coeffs al = lowerHalf(a), ah = upperHalf(a);
  int sa = signVec(al, level - 1);
  int sb = signVec(ah, level - 1);
  if (sb == 0) return sa;
  if (sa == 0) return sb;  // sqrt(r) > 0
  if (sa == sb) return sa;
  Coeffs rad = ScalarTower::instance().radicandCoeffs(level - 1, level - 1);
  Coeffs diff = addVec(mulVec(al, al, level - 1),
                       negVec(mulVec(mulVec(ah, ah, level - 1), rad, level - 1)));
  return sa * signVec(diff, level - 1);
}

// 1 / (al + ah*sqrt(r)) = (al - ah*sqrt(r)) / (al^2 - ah^2 r); the denominator
// is nonzero because r is not a square in the lower field.
Coeffs invVec(const Coeffs& a, int level) {
  if (level == 0) {
    if (a[0] == 0) throw std::domain_error("ExactScalar: division by zero");
    return Coeffs{1 / a[0]};
  }
  Coeffs al = lowerHalf(a), ah = upperHalf(a);
  if (allZero(ah, 0, ah.size())) {
    Coeffs r = invVec(al, level - 1);
    return join(r, Coeffs(al.size(), mpq_class(0)));
  }
  Coeffs rad = ScalarTower::instance().radicandCoeffs(level - 1, level - 1);
  Coeffs denom = addVec(mulVec(al, al, level - 1),
                        negVec(mulVec(mulVec(ah, ah, level - 1), rad, level - 1)));
  Coeffs di = invVec(denom, level - 1);
  return join(mulVec(al, di, level - 1), negVec(mulVec(ah, di, level - 1)));
}

ExactScalar fromCoeffs(int level, Coeffs c) { return ScalarAccess::make(level, std::move(c)); }

}  // namespace

ExactScalar::ExactScalar(long num, long den) : level_(0), c_(1), approx_(0) {
  if (den == 0) throw std::domain_error("ExactScalar: zero denominator");
  c_[0] = mpq_class(num, den);
  c_[0].canonicalize();
  approx_ = c_[0].get_d();
}

ExactScalar::ExactScalar(const mpq_class& q) : level_(0), c_(1, q), approx_(q.get_d()) {}

void ExactScalar::trim() {
  while (level_ > 0 && allZero(c_, c_.size() / 2, c_.size())) {
    c_.resize(c_.size() / 2);
    --level_;
  }
}

void ExactScalar::recomputeApprox() {
  double acc = 0.0;
  for (size_t m = 0; m < c_.size(); ++m) {
    if (c_[m] == 0) continue;
    double b = 1.0;
    for (int k = 0; k < level_; ++k)
      if (m & (size_t(1) << k)) b *= ScalarTower::instance().radicandSqrtApprox(k);
    acc += c_[m].get_d() * b;
  }
  approx_ = acc;
}

ExactScalar ExactScalar::lifted(int level) const {
  ExactScalar r = *this;
  r.level_ = level;
  r.c_.resize(size_t(1) << level, mpq_class(0));
  return r;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  r.c_ = negVec(r.c_);
  r.approx_ = -r.approx_;
  return r;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  int lv = std::max(level_, o.level_);
  ExactScalar r;
  r.level_ = lv;
  r.c_ = addVec(lifted(lv).c_, o.lifted(lv).c_);
  r.trim();
  r.approx_ = approx_ + o.approx_;
  return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  int lv = std::max(level_, o.level_);
  ExactScalar r;
  r.level_ = lv;
  r.c_ = mulVec(lifted(lv).c_, o.lifted(lv).c_, lv);
  r.trim();
  r.approx_ = approx_ * o.approx_;
  return r;
}

ExactScalar ExactScalar::inverse() const {
  if (isZero()) throw std::domain_error("ExactScalar: division by zero");
  ExactScalar r;
  r.level_ = level_;
  r.c_ = invVec(c_, level_);
  r.trim();
  r.approx_ = 1.0 / approx_;
  return r;
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const { return *this * o.inverse(); }

int ExactScalar::sign() const { return signVec(c_, level_); }

bool ExactScalar::isZero() const { return allZero(c_, 0, c_.size()); }

// --- square roots ------------------------------------------------------------

namespace {

std::optional<ExactScalar> sqrtRational(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return ExactScalar(0);
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return ExactScalar(mpq_class(rn, rd));
}

// Basis element sqrt(r_k): a level-(k+1) value.
ExactScalar radicalBasis(int k) {
  Coeffs c(size_t(1) << (k + 1), mpq_class(0));
  c[size_t(1) << k] = 1;
  return fromCoeffs(k + 1, std::move(c));
}

// Exact square detection in K_level; works on trimmed representations so the
// cost tracks the operand's own level, not the tower height. Returns any root
// (sign unnormalised).
std::optional<ExactScalar> trySqrt(const ExactScalar& v, int level) {
  int actual = ScalarAccess::level(v);
  if (level == 0) return sqrtRational(v.rationalValue());
  if (actual < level) {
    // The sqrt(r_{level-1}) coefficient of v is zero: either v is a square
    // lower down, or v/r_{level-1} is and the root picks up sqrt(r_{level-1}).
    if (auto e = trySqrt(v, level - 1)) return e;
    ExactScalar r = ScalarTower::instance().radicand(level - 1);
    if (auto f = trySqrt(v / r, level - 1)) return *f * radicalBasis(level - 1);
    return std::nullopt;
  }
  const Coeffs& c = ScalarAccess::coeffs(v);
  ExactScalar a = fromCoeffs(level - 1, lowerHalf(c));
  ExactScalar b = fromCoeffs(level - 1, upperHalf(c));
  ExactScalar r = ScalarTower::instance().radicand(level - 1);
  // Solve (e + f*sqrt(r))^2 = a + b*sqrt(r): e^2 = (a +- sqrt(a^2 - b^2 r))/2.
  ExactScalar disc = a * a - b * b * r;
  auto sd = trySqrt(disc, level - 1);
  if (!sd) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    ExactScalar e2 = (pick == 0 ? a + *sd : a - *sd) / ExactScalar(2);
    if (e2.sign() < 0) continue;
    auto e = trySqrt(e2, level - 1);
    if (!e || e->isZero()) continue;
    ExactScalar f = b / (ExactScalar(2) * *e);
    ExactScalar cand = *e + f * radicalBasis(level - 1);
    if (cand * cand == v) return cand;
  }
  return std::nullopt;
}

}  // namespace

ExactScalar sqrt_nn(const ExactScalar& x) {
  int s = x.sign();
  if (s < 0) throw std::domain_error("sqrt_nn: negative argument");
  if (s == 0) return ExactScalar(0);

  int top = ScalarTower::instance().size();
  if (auto root = trySqrt(x, top)) return root->sign() < 0 ? -*root : *root;

  // Not a square in the tower: adjoin a reduced radicand.
  ExactScalar radicand = x;
  ExactScalar outer(1);
  if (x.isRational()) {
    // Pull the square part out of num*den: x = (u/den)^2 * v.
    mpq_class q = x.rationalValue();
    mpz_class v = q.get_num() * q.get_den();
    mpz_class u = 1;
    for (unsigned long p = 2; p <= 997; p = (p == 2 ? 3 : p + 2)) {
      mpz_class pp = mpz_class(p) * mpz_class(p);
      while (mpz_divisible_p(v.get_mpz_t(), pp.get_mpz_t())) {
        v /= pp;
        u *= p;
      }
    }
    radicand = ExactScalar(mpq_class(v));
    outer = ExactScalar(mpq_class(u, q.get_den()));
  }
  int idx = ScalarTower::instance().adjoin(radicand);
  return outer * radicalBasis(idx);
}

// --- parsing and printing ----------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skipWs() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skipWs();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error at position " + std::to_string(i) + ": " +
                                what);
  }

  ExactScalar parseScalar() {
    ExactScalar acc = parseTerm();
    for (;;) {
      skipWs();
      if (eat('+'))
        acc += parseTerm();
      else if (eat('-'))
        acc -= parseTerm();
      else
        return acc;
    }
  }

  ExactScalar parseTerm() {
    ExactScalar acc = parseFactor();
    for (;;) {
      skipWs();
      if (eat('*'))
        acc *= parseFactor();
      else
        return acc;
    }
  }

  ExactScalar parseFactor() {
    skipWs();
    if (i >= s.size()) fail("unexpected end of input");
    if (eat('-')) return -parseFactor();
    if (s.compare(i, 4, "sqrt") == 0) {
      i += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      ExactScalar inner = parseScalar();
      if (!eat(')')) fail("expected ')'");
      if (inner.sign() < 0) fail("sqrt of negative value");
      return sqrt_nn(inner);
    }
    if (eat('(')) {
      ExactScalar inner = parseScalar();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    return parseRational();
  }

  ExactScalar parseRational() {
    skipWs();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) fail("expected number");
    mpz_class num(s.substr(start, i - start));
    mpz_class den = 1;
    skipWs();
    if (i < s.size() && s[i] == '/') {
      ++i;
      skipWs();
      size_t dstart = i;
      size_t ddigits = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++ddigits;
      if (ddigits == 0) fail("expected denominator");
      den = mpz_class(s.substr(dstart, i - dstart));
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return ExactScalar(q);
  }
};

std::string rationalStr(const mpq_class& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << "/" << q.get_den();
  return os.str();
}

}  // namespace

ExactScalar ExactScalar::parse(const std::string& text) {
  Parser p(text);
  ExactScalar v = p.parseScalar();
  p.skipWs();
  if (p.i != text.size()) p.fail("trailing input");
  return v;
}

std::string ExactScalar::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t m = 0; m < c_.size(); ++m) {
    if (c_[m] == 0) continue;
    mpq_class coeff = c_[m];
    if (first) {
      if (sgn(coeff) < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (sgn(coeff) < 0 ? "-" : "+");
      if (sgn(coeff) < 0) coeff = -coeff;
    }
    first = false;
    bool needCoeff = (coeff != 1) || m == 0;
    if (needCoeff) os << rationalStr(coeff);
    bool needStar = needCoeff;
    for (int k = 0; k < level_; ++k) {
      if (!(m & (size_t(1) << k))) continue;
      if (needStar) os << "*";
      os << "sqrt(" << ScalarTower::instance().radicand(k).str() << ")";
      needStar = true;
    }
  }
  return os.str();
}

std::string ExactScalar::key() const {
  std::ostringstream os;
  os << "L" << level_ << ":";
  for (size_t m = 0; m < c_.size(); ++m) {
    if (m) os << ",";
    os << rationalStr(c_[m]);
  }
  return os.str();
}

}  // namespace latsurf
