#include "hk/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "hk/error.hpp"

namespace hk {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

namespace {

// Exact division of monic integer polynomials (low-to-high coefficients).
std::vector<long long> divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  std::vector<long long> quot(nn - dn + 1, 0);
  for (int i = nn - dn; i >= 0; --i) {
    long long c = num[i + dn];  // den is monic
    quot[i] = c;
    for (int j = 0; j <= dn; ++j) num[i + j] -= c * den[j];
  }
  for (int j = 0; j < dn; ++j) {
    if (num[j] != 0) throw Error(ErrorCode::InternalVerificationFailed, "cyclotomic division not exact");
  }
  return quot;
}

std::vector<long long> cyclotomic_poly(int e);

std::vector<long long> cyclotomic_poly_uncached(int e) {
  std::vector<long long> p(e + 1, 0);
  p[0] = -1;
  p[e] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d == 0) p = divide_exact(p, cyclotomic_poly(d));
  }
  return p;
}

std::mutex g_basis_mutex;
std::map<int, std::shared_ptr<const CyclotomicBasis>> g_basis_cache;
std::map<int, std::vector<long long>> g_poly_cache;

std::vector<long long> cyclotomic_poly(int e) {
  // Called with g_basis_mutex held.
  auto it = g_poly_cache.find(e);
  if (it != g_poly_cache.end()) return it->second;
  auto p = cyclotomic_poly_uncached(e);
  g_poly_cache.emplace(e, p);
  return p;
}

}  // namespace

std::shared_ptr<const CyclotomicBasis> CyclotomicBasis::get(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  std::lock_guard lock(g_basis_mutex);
  auto it = g_basis_cache.find(order);
  if (it != g_basis_cache.end()) return it->second;

  auto basis = std::make_shared<CyclotomicBasis>();
  basis->order = order;
  basis->phi_poly = cyclotomic_poly(order);
  basis->degree = static_cast<int>(basis->phi_poly.size()) - 1;
  const int deg = basis->degree;
  basis->powers.assign(order, std::vector<long long>(deg, 0));
  std::vector<long long> cur(deg, 0);
  cur[0] = 1;
  for (int k = 0; k < order; ++k) {
    basis->powers[k] = cur;
    // multiply by x and reduce
    long long top = cur[deg - 1];
    for (int j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < deg; ++j) cur[j] -= top * basis->phi_poly[j];
  }
  g_basis_cache.emplace(order, basis);
  return basis;
}

Cyclotomic::Cyclotomic() : order_(1), coords_(1) {}

Cyclotomic::Cyclotomic(const Rational& r) : order_(1), coords_{r} {}

Cyclotomic::Cyclotomic(long long n) : order_(1), coords_{make_rational(n)} {}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coords)
    : order_(order), coords_(std::move(coords)) {}

Cyclotomic Cyclotomic::root_of_unity(int order, int k) {
  if (order < 1 || k < 0 || k >= order) {
    throw Error(ErrorCode::InvalidArgument, "root_of_unity requires 0 <= k < e");
  }
  auto basis = CyclotomicBasis::get(order);
  std::vector<Rational> c(basis->degree);
  for (int j = 0; j < basis->degree; ++j) c[j] = Rational(static_cast<long>(basis->powers[k][j]));
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::from_power_sum(int order, const std::vector<Rational>& coeffs) {
  auto basis = CyclotomicBasis::get(order);
  std::vector<Rational> c(basis->degree);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& pw = basis->powers[k % order];
    for (int j = 0; j < basis->degree; ++j) {
      if (pw[j] != 0) c[j] += coeffs[k] * static_cast<long>(pw[j]);
    }
  }
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::from_basis(int order, std::vector<Rational> coords) {
  auto basis = CyclotomicBasis::get(order);
  if (static_cast<int>(coords.size()) != basis->degree) {
    throw Error(ErrorCode::SchemaError, "coordinate vector has wrong length for order " + std::to_string(order));
  }
  return Cyclotomic(order, std::move(coords));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < coords_.size(); ++j) {
    if (coords_[j] != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::NotRational, "value " + to_string(*this) + " is not rational");
  return coords_[0];
}

Cyclotomic Cyclotomic::lifted(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) {
    throw Error(ErrorCode::InvalidArgument, "cannot lift order " + std::to_string(order_) + " to " + std::to_string(new_order));
  }
  const int step = new_order / order_;
  std::vector<Rational> pow_coeffs(new_order);
  for (std::size_t k = 0; k < coords_.size(); ++k) pow_coeffs[k * step] = coords_[k];
  return from_power_sum(new_order, pow_coeffs);
}

Cyclotomic Cyclotomic::galois(int k) const {
  if (order_ <= 2) return *this;
  std::vector<Rational> pow_coeffs(order_);
  const int kk = ((k % order_) + order_) % order_;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    pow_coeffs[(static_cast<long long>(j) * kk) % order_] += coords_[j];
  }
  return from_power_sum(order_, pow_coeffs);
}

Cyclotomic Cyclotomic::conjugate() const { return galois(order_ - 1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero cyclotomic");
  if (is_rational()) return Cyclotomic(Rational(1) / coords_[0]);
  // a^{-1} = prod_{k != 1} sigma_k(a) / N(a)
  Cyclotomic others(1);
  for (int k = 2; k < order_; ++k) {
    if (std::gcd(k, order_) == 1) others *= galois(k);
  }
  Cyclotomic norm = *this * others;
  return others * Cyclotomic(Rational(1) / norm.rational_value());
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z(0.0, 0.0);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    const double angle = two_pi * static_cast<double>(k) / static_cast<double>(order_);
    z += coords_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

namespace {

void align(Cyclotomic& a, Cyclotomic& b) {
  if (a.order() == b.order()) return;
  const int l = lcm_int(a.order(), b.order());
  a = a.lifted(l);
  b = b.lifted(l);
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ == order_) {
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += o.coords_[j];
    return *this;
  }
  if (o.is_rational()) {
    coords_[0] += o.coords_[0];
    return *this;
  }
  Cyclotomic b = o;
  align(*this, b);
  return *this += b;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.is_rational()) {
    const Rational s = o.coords_[0];
    for (auto& c : coords_) c *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = coords_[0];
    *this = o;
    for (auto& c : coords_) c *= s;
    return *this;
  }
  if (o.order_ != order_) {
    Cyclotomic b = o;
    align(*this, b);
    return *this *= b;
  }
  const std::size_t d = coords_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (o.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  *this = from_power_sum(order_, prod);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coords_ == b.coords_;
  if (a.is_rational() && b.is_rational()) return a.coords_[0] == b.coords_[0];
  Cyclotomic x = a, y = b;
  align(x, y);
  return x.coords_ == y.coords_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x = a, y = b;
  align(x, y);
  for (std::size_t j = 0; j < x.coords_.size(); ++j) {
    int c = cmp(x.coords_[j], y.coords_[j]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string to_string(const Cyclotomic& c) {
  if (c.is_rational()) return to_string(c.coords()[0]);
  std::string out;
  for (std::size_t k = 0; k < c.coords().size(); ++k) {
    const Rational& r = c.coords()[k];
    if (r == 0) continue;
    if (!out.empty()) out += (r > 0 ? " + " : " - ");
    else if (r < 0) out += "-";
    Rational a = abs(r);
    if (k == 0) {
      out += to_string(a);
      continue;
    }
    if (a != 1) out += to_string(a) + "*";
    out += "z" + std::to_string(c.order());
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace hk
