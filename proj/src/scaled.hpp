#pragma once

// Floating-point numbers with a separate binary exponent. Factorials up to a
// few thousand overflow a double long before the ratios we need do, so the
// exponent is carried separately and only folded back at the end.

#include <cmath>
#include <vector>

namespace btq::detail {

struct Scaled {
  double mant = 1.0;  // in [0.5, 1) after normalize(), or 0
  long exp = 0;

  static Scaled from(double x) {
    Scaled s{x, 0};
    s.normalize();
    return s;
  }

  void normalize() {
    if (mant == 0.0) {
      exp = 0;
      return;
    }
    int e = 0;
    mant = std::frexp(mant, &e);
    exp += e;
  }

  double value() const {
    if (mant == 0.0) return 0.0;
    return std::ldexp(mant, static_cast<int>(exp));
  }

  friend Scaled operator*(Scaled a, const Scaled& b) {
    a.mant *= b.mant;
    a.exp += b.exp;
    a.normalize();
    return a;
  }
  friend Scaled operator/(Scaled a, const Scaled& b) {
    a.mant /= b.mant;
    a.exp -= b.exp;
    a.normalize();
    return a;
  }
};

inline Scaled sqrt(Scaled s) {
  if (s.exp % 2 != 0) {
    s.mant *= 2.0;
    s.exp -= 1;
  }
  s.mant = std::sqrt(s.mant);
  s.exp /= 2;
  s.normalize();
  return s;
}

/// n! for n = 0..max_n, accumulated by renormalized products.
class FactorialTable {
 public:
  explicit FactorialTable(long max_n) : table_(static_cast<std::size_t>(max_n) + 1) {
    Scaled acc = Scaled::from(1.0);
    table_[0] = acc;
    for (long n = 1; n <= max_n; ++n) {
      acc = acc * Scaled::from(static_cast<double>(n));
      table_[static_cast<std::size_t>(n)] = acc;
    }
  }

  const Scaled& factorial(long n) const { return table_[static_cast<std::size_t>(n)]; }

  Scaled binomial(long n, long r) const {
    if (r < 0 || r > n) return Scaled{0.0, 0};
    return factorial(n) / (factorial(r) * factorial(n - r));
  }

  long max_n() const { return static_cast<long>(table_.size()) - 1; }

 private:
  std::vector<Scaled> table_;
};

}  // namespace btq::detail
