#pragma once

// Exact real arithmetic in a tower of real quadratic extensions of Q.
// Every value is a Q-linear combination of square-root products drawn from a
// process-global, append-only tower; field operations, sign and square roots
// of nonnegative elements are all exact, so downstream geometric predicates
// never touch floating point.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latsurf {

namespace detail {
struct ScalarAccess;
}

class ExactScalar {
 public:
  ExactScalar() : level_(0), c_(1, mpq_class(0)), approx_(0.0) {}
  ExactScalar(long n) : level_(0), c_(1, mpq_class(n)), approx_(double(n)) {}
  ExactScalar(long num, long den);
  explicit ExactScalar(const mpq_class& q);

  // Parses the scalar grammar:
  //   scalar := term (('+'|'-') term)*
  //   term   := factor ('*' factor)*
  //   factor := rational | 'sqrt' '(' scalar ')' | '(' scalar ')' | '-' factor
  //   rational := integer ('/' positive-integer)?
  // Throws std::invalid_argument on malformed input.
  static ExactScalar parse(const std::string& text);

  ExactScalar operator-() const;
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;  // o != 0
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

  ExactScalar inverse() const;  // *this != 0

  // Sign of the exact real value: -1, 0, +1.
  int sign() const;
  bool isZero() const;

  bool operator==(const ExactScalar& o) const { return (*this - o).isZero(); }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }
  bool operator<(const ExactScalar& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const ExactScalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const ExactScalar& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const ExactScalar& o) const { return (*this - o).sign() >= 0; }

  ExactScalar abs() const { return sign() < 0 ? -*this : *this; }

  // Non-certified double approximation; used only to prune searches whose
  // results are re-verified exactly.
  double approx() const { return approx_; }

  // Round-trippable rendering in the scalar grammar, e.g. "1/2*sqrt(2)".
  std::string str() const;

  // Canonical per-process key (tower level + coefficient list); equal keys
  // iff equal values.
  std::string key() const;

  bool isRational() const { return level_ == 0; }
  const mpq_class& rationalValue() const { return c_[0]; }

  // sqrt of a nonnegative value; extends the tower when the argument is not
  // a perfect square in the current tower. Throws std::domain_error on
  // negative input.
  friend ExactScalar sqrt_nn(const ExactScalar& x);

 private:
  friend struct detail::ScalarAccess;
  int level_;                 // element lives in K_level (c_.size() == 1<<level_)
  std::vector<mpq_class> c_;  // coefficients over the radical-product basis
  double approx_;

  void trim();
  void recomputeApprox();
  ExactScalar lifted(int level) const;
};

ExactScalar sqrt_nn(const ExactScalar& x);

inline ExactScalar operator+(long a, const ExactScalar& b) { return ExactScalar(a) + b; }
inline ExactScalar operator-(long a, const ExactScalar& b) { return ExactScalar(a) - b; }
inline ExactScalar operator*(long a, const ExactScalar& b) { return ExactScalar(a) * b; }
inline ExactScalar operator/(long a, const ExactScalar& b) { return ExactScalar(a) / b; }

}  // namespace latsurf
