#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wofc {

// Signed arbitrary-precision integer, sized for fraction-free elimination:
// add, subtract, multiply, exact division, comparison. Limbs are base 2^32.
class BigInt {
 public:
  BigInt() = default;  // zero
  BigInt(long long v);

  bool is_zero() const { return sign_ == 0; }
  int signum() const { return sign_; }

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt operator-() const;

  // Quotient of an exact division; throws std::logic_error on a remainder.
  BigInt divide_exact(const BigInt& d) const;

  friend bool operator==(const BigInt& a, const BigInt& b);
  // -1, 0, +1
  static int compare(const BigInt& a, const BigInt& b);
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }

  std::string to_string() const;

 private:
  using Mag = std::vector<std::uint32_t>;
  int sign_ = 0;
  Mag mag_;  // little-endian, no high zero limbs

  static void trim(Mag& m);
  static int cmp_mag(const Mag& a, const Mag& b);
  static Mag add_mag(const Mag& a, const Mag& b);
  static Mag sub_mag(const Mag& a, const Mag& b);  // requires a >= b
  static Mag mul_mag(const Mag& a, const Mag& b);
  static void divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r);
  static BigInt make(int sign, Mag mag);
};

// Sparse integer matrix with entries in {-1, 0, +1}, stored by columns.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void add_entry(int row, int col, int sign) {
    columns_[static_cast<std::size_t>(col)].emplace_back(row, sign);
  }
  const std::vector<std::pair<int, int>>& column(int col) const {
    return columns_[static_cast<std::size_t>(col)];
  }

 private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, int>>> columns_;
};

// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
// 64-bit arithmetic while the intermediates fit and restarts with BigInt on
// the first overflow; no floating point anywhere.
long exact_rank(const ExactMatrix& m);

// Entrywise check that the composition a*b vanishes (a: l x m, b: m x n).
bool composition_is_zero(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace wofc
