#include "coreg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace coreg {

std::uint32_t gcd_u32(std::uint32_t a, std::uint32_t b) {
  while (b) {
    std::uint32_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint32_t lcm_u32_checked(std::uint32_t a, std::uint32_t b) {
  std::uint64_t l = std::uint64_t(a) / gcd_u32(a, b) * b;
  if (l > kConductorCap)
    fail(Errc::ConductorOverflow, "conductor " + std::to_string(l) + " exceeds cap");
  return static_cast<std::uint32_t>(l);
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> small, large;
  for (std::uint32_t d = 1; std::uint64_t(d) * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// --- dense polynomials over Rational (coeff[i] of t^i) ---

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Remainder of a modulo monic-leading d (leading coeff inverted exactly).
Poly mod(Poly a, const Poly& d) {
  trim(a);
  Rational lead_inv = Rational(1) / d.back();
  while (a.size() >= d.size()) {
    Rational q = a.back() * lead_inv;
    size_t off = a.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) a[off + i] -= q * d[i];
    trim(a);
  }
  return a;
}

// Extended gcd: returns (g, u) with u*a == g mod m, g a nonzero constant
// when gcd(a, m) = 1 (the only case used; Phi_n is irreducible over Q).
std::pair<Poly, Poly> xgcd_mod(Poly a, Poly m) {
  Poly r0 = std::move(m), r1 = std::move(a);
  Poly u0 = {}, u1 = {Rational(1)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    Poly q;
    Poly r2 = r0;
    Rational lead_inv = Rational(1) / r1.back();
    if (r2.size() >= r1.size()) q.resize(r2.size() - r1.size() + 1);
    while (r2.size() >= r1.size()) {
      Rational c = r2.back() * lead_inv;
      size_t off = r2.size() - r1.size();
      q[off] = c;
      for (size_t i = 0; i < r1.size(); ++i) r2[off + i] -= c * r1[i];
      trim(r2);
    }
    Poly u2 = u0;
    {
      Poly qu1 = mul(q, u1);
      if (u2.size() < qu1.size()) u2.resize(qu1.size());
      for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
      trim(u2);
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {r0, u0};
}

// Solve B y = x over Q (column vectors); returns empty optional-style flag
// via bool. B given column-major, rows x cols.
bool solve_rational(const std::vector<Poly>& cols, const Poly& x, size_t rows, Poly* sol) {
  size_t ncols = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1));
  for (size_t j = 0; j < ncols; ++j)
    for (size_t i = 0; i < rows; ++i) m[i][j] = i < cols[j].size() ? cols[j][i] : Rational(0);
  for (size_t i = 0; i < rows; ++i) m[i][ncols] = i < x.size() ? x[i] : Rational(0);

  std::vector<size_t> pivot_col(rows, SIZE_MAX);
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < rows; ++col) {
    size_t pr = SIZE_MAX;
    for (size_t i = row; i < rows; ++i)
      if (!m[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr == SIZE_MAX) continue;
    std::swap(m[row], m[pr]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t j = col; j <= ncols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (size_t j = col; j <= ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col[row] = col;
    ++row;
  }
  for (size_t i = row; i < rows; ++i)
    if (!m[i][ncols].is_zero()) return false;
  Poly y(ncols, Rational(0));
  for (size_t i = 0; i < row; ++i) y[pivot_col[i]] = m[i][ncols];
  *sol = std::move(y);
  return true;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(std::uint32_t n) {
  static std::map<std::uint32_t, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e, built bottom-up over the
  // divisors of n by exact polynomial division.
  for (std::uint32_t d : divisors(n)) {
    if (cache.count(d)) continue;
    Poly acc(d + 1, Rational(0));
    acc[0] = Rational(-1);
    acc[d] = Rational(1);
    for (std::uint32_t e : divisors(d)) {
      if (e == d) continue;
      const Poly& phie = cache.at(e);
      Poly q(acc.size() - phie.size() + 1, Rational(0));
      Poly rem = std::move(acc);
      Rational lead_inv = Rational(1) / phie.back();
      while (rem.size() >= phie.size()) {
        Rational c = rem.back() * lead_inv;
        size_t off = rem.size() - phie.size();
        q[off] = c;
        for (size_t i = 0; i < phie.size(); ++i) rem[off + i] -= c * phie[i];
        trim(rem);
      }
      acc = std::move(q);
    }
    cache[d] = std::move(acc);
  }
  return cache.at(n);
}

Cyclotomic::Cyclotomic(std::uint32_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), c_(std::move(coeffs)) {
  if (conductor_ == 0) fail(Errc::InvalidInput, "conductor must be positive");
  if (conductor_ > kConductorCap)
    fail(Errc::ConductorOverflow, "conductor " + std::to_string(conductor_) + " exceeds cap");
  std::uint32_t phi = euler_phi(conductor_);
  if (c_.size() > phi) {
    Poly r = mod(c_, cyclotomic_polynomial(conductor_));
    c_ = std::move(r);
  }
  c_.resize(phi, Rational(0));
}

Cyclotomic Cyclotomic::zeta(std::uint32_t n) { return zeta_pow(n, 1); }

Cyclotomic Cyclotomic::zeta_pow(std::uint32_t n, std::int64_t k) {
  if (n == 0) fail(Errc::InvalidInput, "zeta conductor must be positive");
  std::int64_t kk = k % std::int64_t(n);
  if (kk < 0) kk += n;
  std::vector<Rational> c(static_cast<size_t>(kk) + 1, Rational(0));
  c[static_cast<size_t>(kk)] = Rational(1);
  return Cyclotomic(n, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (c_.empty() || !c_[0].is_one()) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) fail(Errc::InvalidInput, "value is not rational: " + str());
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::embedded(std::uint32_t m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0)
    fail(Errc::ConductorMismatch,
         "cannot embed conductor " + std::to_string(conductor_) + " into " + std::to_string(m));
  std::uint32_t step = m / conductor_;
  Poly p;
  p.resize((c_.size() - 1) * step + 1, Rational(0));
  bool any = false;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    p[i * step] = c_[i];
    any = true;
  }
  if (!any) p.clear();
  return Cyclotomic(m, std::move(p));
}

Cyclotomic Cyclotomic::reduced() const {
  for (std::uint32_t d : divisors(conductor_)) {
    if (d == conductor_) break;
    std::uint32_t phid = euler_phi(d), step = conductor_ / d;
    std::vector<Poly> basis_cols;
    basis_cols.reserve(phid);
    for (std::uint32_t j = 0; j < phid; ++j) {
      Poly col(static_cast<size_t>(j) * step + 1, Rational(0));
      col[static_cast<size_t>(j) * step] = Rational(1);
      basis_cols.push_back(mod(col, cyclotomic_polynomial(conductor_)));
    }
    Poly sol;
    if (solve_rational(basis_cols, c_, euler_phi(conductor_), &sol))
      return Cyclotomic(d, std::move(sol));
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(std::uint32_t a) const {
  a %= conductor_;
  if (gcd_u32(a, conductor_) != 1)
    fail(Errc::InvalidInput, "galois exponent not coprime to conductor");
  Poly p;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    size_t e = (i * a) % conductor_;
    if (p.size() <= e) p.resize(e + 1, Rational(0));
    p[e] += c_[i];
  }
  return Cyclotomic(conductor_, std::move(p));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

namespace {
std::pair<Cyclotomic, Cyclotomic> promoted(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  std::uint32_t m = lcm_u32_checked(a.conductor(), b.conductor());
  return {a.embedded(m), b.embedded(m)};
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  auto [x, y] = promoted(a, b);
  std::vector<Rational> c = x.c_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += y.c_[i];
  return Cyclotomic(x.conductor_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  auto [x, y] = promoted(a, b);
  std::vector<Rational> c = x.c_;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= y.c_[i];
  return Cyclotomic(x.conductor_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  auto [x, y] = promoted(a, b);
  return Cyclotomic(x.conductor_, mul(x.c_, y.c_));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "cyclotomic inverse of zero");
  if (is_rational()) return Cyclotomic(conductor_, {Rational(1) / c_[0]});
  Poly a = c_;
  trim(a);
  auto [g, u] = xgcd_mod(a, cyclotomic_polynomial(conductor_));
  // g is a nonzero constant because Phi_n is irreducible over Q.
  if (g.size() != 1)
    fail(Errc::DivisionByZero, "non-unit residue in cyclotomic inverse");
  Rational ginv = Rational(1) / g[0];
  for (auto& x : u) x *= ginv;
  return Cyclotomic(conductor_, mod(std::move(u), cyclotomic_polynomial(conductor_)));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this, acc = Cyclotomic(Rational(1));
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.c_ == b.c_;
  auto [x, y] = promoted(a, b);
  return x.c_ == y.c_;
}

bool Cyclotomic::is_root_of_unity() const {
  if (is_zero()) return false;
  std::uint32_t n = conductor_ % 2 == 0 ? conductor_ : 2 * conductor_;
  return pow(n).is_one();
}

std::uint32_t Cyclotomic::root_of_unity_order() const {
  std::uint32_t n = conductor_ % 2 == 0 ? conductor_ : 2 * conductor_;
  for (std::uint32_t d : divisors(n))
    if (pow(d).is_one()) return d;
  fail(Errc::InvalidInput, "not a root of unity: " + str());
}

std::uint32_t Cyclotomic::as_zeta_exponent(std::uint32_t order) const {
  std::uint32_t m = lcm_u32_checked(conductor_, order);
  Cyclotomic x = embedded(m);
  Cyclotomic step = Cyclotomic::zeta(order).embedded(m);
  Cyclotomic z = Cyclotomic(Rational(1)).embedded(m);
  for (std::uint32_t j = 0; j < order; ++j) {
    if (z == x) return j;
    z *= step;
  }
  fail(Errc::InvalidInput, "value is not a power of zeta_" + std::to_string(order));
}

int Cyclotomic::cmp(const Cyclotomic& b) const {
  // Pure representation order.  Promoting mixed conductors here would make
  // the comparison basis depend on the pair at hand and break transitivity,
  // corrupting every ordered container keyed on it; callers that want a
  // value order reduce() first.
  if (conductor_ != b.conductor_) return conductor_ < b.conductor_ ? -1 : 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] < b.c_[i]) return -1;
    if (b.c_[i] < c_[i]) return 1;
  }
  return 0;
}

std::uint64_t Cyclotomic::hash() const {
  // Hash of the reduced representation so equal values at different
  // conductors would still differ; callers hash within one field, where the
  // stored representation is already canonical.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(conductor_);
  for (const auto& x : c_) mix(x.hash());
  return h;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return c_.empty() ? "0" : c_[0].str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[i].str();
    if (i > 0) os << "*z" << conductor_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic kth_root_of_unity_value(const Cyclotomic& y, std::uint32_t k) {
  if (k == 0) fail(Errc::InvalidInput, "zeroth root requested");
  if (!y.is_root_of_unity())
    fail(Errc::ConductorOverflow, "no cyclotomic k-th root: " + y.str() + " is not a root of unity");
  std::uint32_t r = y.root_of_unity_order();
  std::uint32_t j = y.as_zeta_exponent(r);
  std::uint64_t nr = std::uint64_t(k) * r;
  if (nr > kConductorCap)
    fail(Errc::ConductorOverflow, "root conductor " + std::to_string(nr) + " exceeds cap");
  return Cyclotomic::zeta_pow(static_cast<std::uint32_t>(nr), j);
}

}  // namespace coreg
