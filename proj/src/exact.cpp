#include "wofc/exact.hpp"

#include <bit>
#include <map>
#include <optional>
#include <stdexcept>

namespace wofc {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  std::uint64_t mag = v > 0 ? static_cast<std::uint64_t>(v)
                            : ~static_cast<std::uint64_t>(v) + 1;
  while (mag) {
    mag_.push_back(static_cast<std::uint32_t>(mag & 0xFFFFFFFFULL));
    mag >>= 32;
  }
}

void BigInt::trim(Mag& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

int BigInt::cmp_mag(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

BigInt::Mag BigInt::add_mag(const Mag& a, const Mag& b) {
  const Mag& lo = a.size() < b.size() ? a : b;
  const Mag& hi = a.size() < b.size() ? b : a;
  Mag out(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    out[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  out[hi.size()] = static_cast<std::uint32_t>(carry);
  trim(out);
  return out;
}

BigInt::Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
  Mag out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (t < 0) {
      t += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(t);
  }
  trim(out);
  return out;
}

BigInt::Mag BigInt::mul_mag(const Mag& a, const Mag& b) {
  if (a.empty() || b.empty()) return {};
  Mag out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out[i + b.size()] = static_cast<std::uint32_t>(carry);
  }
  trim(out);
  return out;
}

// Schoolbook long division with quotient-digit estimation (base 2^32).
void BigInt::divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r) {
  if (v.empty()) throw std::logic_error("BigInt: division by zero");
  if (cmp_mag(u, v) < 0) {
    q.clear();
    r = u;
    return;
  }
  const int n = static_cast<int>(v.size());
  const int m = static_cast<int>(u.size());
  if (n == 1) {
    q.assign(static_cast<std::size_t>(m), 0);
    std::uint64_t rem = 0;
    for (int i = m - 1; i >= 0; --i) {
      std::uint64_t cur = (rem << 32) | u[static_cast<std::size_t>(i)];
      q[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(cur / v[0]);
      rem = cur % v[0];
    }
    trim(q);
    r.clear();
    if (rem) r.push_back(static_cast<std::uint32_t>(rem));
    return;
  }

  const int s = std::countl_zero(v[static_cast<std::size_t>(n - 1)]);
  Mag vn(static_cast<std::size_t>(n));
  for (int i = n - 1; i > 0; --i)
    vn[static_cast<std::size_t>(i)] =
        s == 0 ? v[static_cast<std::size_t>(i)]
               : (v[static_cast<std::size_t>(i)] << s) |
                     (v[static_cast<std::size_t>(i - 1)] >> (32 - s));
  vn[0] = v[0] << s;

  Mag un(static_cast<std::size_t>(m + 1));
  un[static_cast<std::size_t>(m)] = s == 0 ? 0 : u[static_cast<std::size_t>(m - 1)] >> (32 - s);
  for (int i = m - 1; i > 0; --i)
    un[static_cast<std::size_t>(i)] =
        s == 0 ? u[static_cast<std::size_t>(i)]
               : (u[static_cast<std::size_t>(i)] << s) |
                     (u[static_cast<std::size_t>(i - 1)] >> (32 - s));
  un[0] = u[0] << s;

  q.assign(static_cast<std::size_t>(m - n + 1), 0);
  for (int j = m - n; j >= 0; --j) {
    std::uint64_t num =
        (static_cast<std::uint64_t>(un[static_cast<std::size_t>(j + n)]) << 32) |
        un[static_cast<std::size_t>(j + n - 1)];
    std::uint64_t qhat = num / vn[static_cast<std::size_t>(n - 1)];
    std::uint64_t rhat = num % vn[static_cast<std::size_t>(n - 1)];
    while (qhat >= kBase ||
           qhat * vn[static_cast<std::size_t>(n - 2)] >
               ((rhat << 32) | un[static_cast<std::size_t>(j + n - 2)])) {
      --qhat;
      rhat += vn[static_cast<std::size_t>(n - 1)];
      if (rhat >= kBase) break;
    }
    std::int64_t k = 0;
    std::int64_t t = 0;
    for (int i = 0; i < n; ++i) {
      std::uint64_t p = qhat * vn[static_cast<std::size_t>(i)];
      t = static_cast<std::int64_t>(un[static_cast<std::size_t>(i + j)]) - k -
          static_cast<std::int64_t>(p & 0xFFFFFFFFULL);
      un[static_cast<std::size_t>(i + j)] = static_cast<std::uint32_t>(t);
      k = static_cast<std::int64_t>(p >> 32) - (t >> 32);
    }
    t = static_cast<std::int64_t>(un[static_cast<std::size_t>(j + n)]) - k;
    un[static_cast<std::size_t>(j + n)] = static_cast<std::uint32_t>(t);
    q[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(qhat);
    if (t < 0) {
      --q[static_cast<std::size_t>(j)];
      std::uint64_t carry = 0;
      for (int i = 0; i < n; ++i) {
        std::uint64_t t2 = static_cast<std::uint64_t>(un[static_cast<std::size_t>(i + j)]) +
                           vn[static_cast<std::size_t>(i)] + carry;
        un[static_cast<std::size_t>(i + j)] = static_cast<std::uint32_t>(t2);
        carry = t2 >> 32;
      }
      un[static_cast<std::size_t>(j + n)] =
          static_cast<std::uint32_t>(un[static_cast<std::size_t>(j + n)] + carry);
    }
  }
  trim(q);
  r.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n - 1; ++i)
    r[static_cast<std::size_t>(i)] =
        s == 0 ? un[static_cast<std::size_t>(i)]
               : (un[static_cast<std::size_t>(i)] >> s) |
                     (un[static_cast<std::size_t>(i + 1)] << (32 - s));
  r[static_cast<std::size_t>(n - 1)] =
      s == 0 ? un[static_cast<std::size_t>(n - 1)] : un[static_cast<std::size_t>(n - 1)] >> s;
  trim(r);
}

BigInt BigInt::make(int sign, Mag mag) {
  BigInt out;
  trim(mag);
  if (!mag.empty()) {
    out.sign_ = sign;
    out.mag_ = std::move(mag);
  }
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  if (a.sign_ == b.sign_) return BigInt::make(a.sign_, BigInt::add_mag(a.mag_, b.mag_));
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (c == 0) return BigInt();
  if (c > 0) return BigInt::make(a.sign_, BigInt::sub_mag(a.mag_, b.mag_));
  return BigInt::make(b.sign_, BigInt::sub_mag(b.mag_, a.mag_));
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  return BigInt::make(a.sign_ * b.sign_, BigInt::mul_mag(a.mag_, b.mag_));
}

BigInt BigInt::divide_exact(const BigInt& d) const {
  if (d.sign_ == 0) throw std::logic_error("BigInt: division by zero");
  if (sign_ == 0) return BigInt();
  Mag q, r;
  divmod_mag(mag_, d.mag_, q, r);
  if (!r.empty()) throw std::logic_error("BigInt: inexact division");
  return make(sign_ * d.sign_, std::move(q));
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  Mag cur = mag_;
  Mag billion{1000000000u};
  std::string digits;
  while (!cur.empty()) {
    Mag q, r;
    divmod_mag(cur, billion, q, r);
    std::uint32_t chunk = r.empty() ? 0 : r[0];
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
    cur = q;
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

namespace {

// Fraction-free elimination in 64-bit arithmetic; bails out on overflow.
std::optional<long> rank_bareiss_i64(std::vector<std::vector<long long>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  long long prev = 1;
  int t = 0;
  for (int col = 0; col < cols && t < rows; ++col) {
    int pivot = -1;
    for (int r = t; r < rows && pivot < 0; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) pivot = r;
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(t)]);
    const auto& prow = m[static_cast<std::size_t>(t)];
    const long long pv = prow[static_cast<std::size_t>(col)];
    for (int i = t + 1; i < rows; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      const long long head = row[static_cast<std::size_t>(col)];
      for (int j = col + 1; j < cols; ++j) {
        long long a, b, d;
        if (__builtin_mul_overflow(row[static_cast<std::size_t>(j)], pv, &a)) return std::nullopt;
        if (__builtin_mul_overflow(head, prow[static_cast<std::size_t>(j)], &b)) return std::nullopt;
        if (__builtin_sub_overflow(a, b, &d)) return std::nullopt;
        row[static_cast<std::size_t>(j)] = d / prev;
      }
      row[static_cast<std::size_t>(col)] = 0;
    }
    prev = pv;
    ++t;
  }
  return t;
}

long rank_bareiss_big(std::vector<std::vector<BigInt>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  BigInt prev(1);
  int t = 0;
  for (int col = 0; col < cols && t < rows; ++col) {
    int pivot = -1;
    for (int r = t; r < rows && pivot < 0; ++r)
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) pivot = r;
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(t)]);
    const auto& prow = m[static_cast<std::size_t>(t)];
    const BigInt pv = prow[static_cast<std::size_t>(col)];
    for (int i = t + 1; i < rows; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      const BigInt head = row[static_cast<std::size_t>(col)];
      for (int j = col + 1; j < cols; ++j) {
        row[static_cast<std::size_t>(j)] =
            (row[static_cast<std::size_t>(j)] * pv - head * prow[static_cast<std::size_t>(j)])
                .divide_exact(prev);
      }
      row[static_cast<std::size_t>(col)] = BigInt();
    }
    prev = pv;
    ++t;
  }
  return t;
}

}  // namespace

long exact_rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<std::vector<long long>> dense(
      static_cast<std::size_t>(m.rows()),
      std::vector<long long>(static_cast<std::size_t>(m.cols()), 0));
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, s] : m.column(c))
      dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s;
  if (auto rank = rank_bareiss_i64(dense)) return *rank;
  std::vector<std::vector<BigInt>> big(
      static_cast<std::size_t>(m.rows()),
      std::vector<BigInt>(static_cast<std::size_t>(m.cols())));
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, s] : m.column(c))
      big[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = BigInt(s);
  return rank_bareiss_big(std::move(big));
}

bool composition_is_zero(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::logic_error("composition_is_zero: shape mismatch");
  for (int c = 0; c < b.cols(); ++c) {
    std::map<int, long> acc;
    for (const auto& [mid, s1] : b.column(c))
      for (const auto& [row, s2] : a.column(mid)) acc[row] += static_cast<long>(s1) * s2;
    for (const auto& [row, v] : acc) {
      (void)row;
      if (v != 0) return false;
    }
  }
  return true;
}

}  // namespace wofc
