#include "zc1/cyclotomic.hpp"

#include <cassert>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "zc1/numtheory.hpp"

namespace zc1 {

namespace {

// Dense polynomials over Q, index = degree. Only used to prepare the
// per-order reduction data, never in the arithmetic hot path.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_xn_minus_1(std::int64_t n) {
  Poly p(static_cast<std::size_t>(n) + 1, Rational(0));
  p[0] = Rational(-1);
  p[static_cast<std::size_t>(n)] = Rational(1);
  return p;
}

// Exact division, asserts zero remainder.
Poly poly_div(const Poly& num, const Poly& den) {
  Poly rem = num;
  poly_trim(rem);
  Poly d = den;
  poly_trim(d);
  assert(!d.empty());
  Poly q(rem.size(), Rational(0));
  while (rem.size() >= d.size() && !rem.empty()) {
    std::size_t shift = rem.size() - d.size();
    Rational c = rem.back() / d.back();
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i)
      rem[shift + i] -= c * d[i];
    poly_trim(rem);
  }
  assert(rem.empty());
  poly_trim(q);
  return q;
}

// n-th cyclotomic polynomial via  prod_{d|n} (x^{n/d} - 1)^{mu(d)}.
Poly cyclotomic_polynomial(std::int64_t n) {
  Poly num{Rational(1)};
  std::vector<std::int64_t> denominators;
  for (std::int64_t d : divisors(n)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    if (mu == 1) {
      Poly f = poly_xn_minus_1(n / d);
      Poly prod(num.size() + f.size() - 1, Rational(0));
      for (std::size_t i = 0; i < num.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
          prod[i + j] += num[i] * f[j];
      poly_trim(prod);
      num = std::move(prod);
    } else {
      denominators.push_back(n / d);
    }
  }
  for (std::int64_t m : denominators) num = poly_div(num, poly_xn_minus_1(m));
  return num;
}

// Per-order reduction data: phi(n), the rows x^k mod Phi_n for
// phi(n) <= k < n, and the absolute traces of all monomials zeta_n^e,
// computed once as honest Galois-orbit sums.
struct CycContext {
  std::int64_t n = 1;
  std::int64_t phi = 1;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> monomial_trace;  // index e in [0, n)
};

void map_add(std::map<std::int64_t, Rational>& m, std::int64_t e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void reduce_with(const CycContext& ctx, std::map<std::int64_t, Rational>& m) {
  std::map<std::int64_t, Rational> out;
  for (auto& [e, c] : m) {
    std::int64_t exp = e % ctx.n;
    if (exp < 0) exp += ctx.n;
    if (exp < ctx.phi) {
      map_add(out, exp, c);
    } else {
      const auto& row = ctx.rows[static_cast<std::size_t>(exp - ctx.phi)];
      for (std::int64_t i = 0; i < ctx.phi; ++i)
        if (!row[static_cast<std::size_t>(i)].is_zero())
          map_add(out, i, c * row[static_cast<std::size_t>(i)]);
    }
  }
  m = std::move(out);
}

const CycContext& context_for(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::unique_ptr<CycContext>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<CycContext>();
  ctx->n = n;
  ctx->phi = euler_phi(n);
  Poly phi_n = cyclotomic_polynomial(n);
  assert(static_cast<std::int64_t>(phi_n.size()) == ctx->phi + 1);
  std::size_t deg = static_cast<std::size_t>(ctx->phi);

  // x^phi = -(lower part of Phi_n); higher rows by shifting and reducing.
  std::vector<Rational> base(deg, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) base[i] = -phi_n[i];
  if (n > 1) {
    ctx->rows.push_back(base);
    for (std::int64_t k = ctx->phi + 1; k < n; ++k) {
      const auto& prev = ctx->rows.back();
      std::vector<Rational> cur(deg, Rational(0));
      for (std::size_t i = 0; i + 1 < deg; ++i) cur[i + 1] = prev[i];
      const Rational& top = prev[deg - 1];  // coefficient that spills to x^phi
      if (!top.is_zero())
        for (std::size_t i = 0; i < deg; ++i) cur[i] += top * base[i];
      ctx->rows.push_back(std::move(cur));
    }
  }

  // Tr(zeta_n^e) = sum over the unit group of the conjugate monomials;
  // the value only depends on gcd(e, n), so one orbit sum per divisor.
  std::map<std::int64_t, Rational> per_gcd;
  ctx->monomial_trace.resize(static_cast<std::size_t>(n));
  for (std::int64_t e = 0; e < n; ++e) {
    std::int64_t g = gcd_i64(e == 0 ? n : e, n);
    auto found = per_gcd.find(g);
    if (found == per_gcd.end()) {
      std::map<std::int64_t, Rational> acc;
      for (std::int64_t t = 1; t <= n; ++t) {
        if (gcd_i64(t, n) != 1) continue;
        map_add(acc, (e * t) % n, Rational(1));
      }
      reduce_with(*ctx, acc);
      assert(acc.size() <= 1 && (acc.empty() || acc.begin()->first == 0));
      found = per_gcd.emplace(g, acc.empty() ? Rational(0) : acc.begin()->second).first;
    }
    ctx->monomial_trace[static_cast<std::size_t>(e)] = found->second;
  }

  const CycContext& ref = *ctx;
  cache.emplace(n, std::move(ctx));
  return ref;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r) {
  if (!r.is_zero()) coeffs_.emplace(0, r);
}

Cyclotomic::Cyclotomic(std::int64_t order, CoeffMap coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  canonicalize();
}

void Cyclotomic::reduce_degrees(std::int64_t n, CoeffMap& m) {
  if (n == 1) {
    // everything has exponent 0 here
    if (!m.empty() && (m.size() > 1 || m.begin()->first != 0)) {
      Rational total(0);
      for (auto& [e, c] : m) total += c;
      m.clear();
      if (!total.is_zero()) m.emplace(0, total);
    }
    return;
  }
  reduce_with(context_for(n), m);
}

Cyclotomic::CoeffMap Cyclotomic::apply_galois_raw(std::int64_t n, const CoeffMap& m,
                                                  std::int64_t t) {
  CoeffMap out;
  if (n == 1) return m;
  for (auto& [e, c] : m) {
    std::int64_t exp = (e * t) % n;
    if (exp < 0) exp += n;
    map_add(out, exp, c);
  }
  reduce_degrees(n, out);
  return out;
}

bool Cyclotomic::try_descend(std::int64_t target) {
  // x lies in Q(zeta_m) iff it is fixed by every sigma_t with t = 1 (mod m).
  std::int64_t n = order_;
  std::int64_t m = target;
  for (std::int64_t t = 1 + m; t < n; t += m) {
    if (gcd_i64(t, n) != 1) continue;
    if (apply_galois_raw(n, coeffs_, t) != coeffs_) return false;
  }

  // Rewrite in the power basis of Q(zeta_m): solve for coordinates of x
  // against the images of zeta_m^i, i < phi(m), inside Q(zeta_n).
  const CycContext& nctx = context_for(n);
  std::int64_t phim = euler_phi(m);
  std::size_t nrows = static_cast<std::size_t>(nctx.phi);
  std::size_t ncols = static_cast<std::size_t>(phim);

  // augmented matrix: columns = basis images, last column = x
  std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
  for (std::size_t i = 0; i < ncols; ++i) {
    CoeffMap img{{static_cast<std::int64_t>(i) * (n / m), Rational(1)}};
    reduce_degrees(n, img);
    for (auto& [e, c] : img) a[static_cast<std::size_t>(e)][i] = c;
  }
  for (auto& [e, c] : coeffs_) a[static_cast<std::size_t>(e)][ncols] = c;

  // Gaussian elimination
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t pr = row;
    while (pr < nrows && a[pr][col].is_zero()) ++pr;
    if (pr == nrows) continue;
    std::swap(a[pr], a[row]);
    Rational inv = Rational(1) / a[row][col];
    for (std::size_t j = col; j <= ncols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j <= ncols; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // consistency: rows past the pivots must have zero right-hand side
  for (std::size_t i = row; i < nrows; ++i)
    assert(a[i][ncols].is_zero() && "descent rewrite must be consistent");

  CoeffMap rewritten;
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
    map_add(rewritten, static_cast<std::int64_t>(pivot_col_of_row[r]), a[r][ncols]);
  order_ = m;
  coeffs_ = std::move(rewritten);
  return true;
}

void Cyclotomic::canonicalize() {
  if (order_ < 1) throw std::invalid_argument("Cyclotomic: order must be >= 1");
  reduce_degrees(order_, coeffs_);
  if (coeffs_.empty()) {
    order_ = 1;
    return;
  }
  bool descended = true;
  while (descended && order_ > 1) {
    descended = false;
    for (std::int64_t p : prime_factors(order_)) {
      if (try_descend(order_ / p)) {
        descended = true;
        break;
      }
    }
  }
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t e) {
  if (n < 1) throw std::invalid_argument("root_of_unity: n must be >= 1");
  std::int64_t exp = e % n;
  if (exp < 0) exp += n;
  CoeffMap m;
  m.emplace(exp, Rational(1));
  return Cyclotomic(n, std::move(m));
}

Cyclotomic Cyclotomic::gauss_sum(std::int64_t p) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("gauss_sum: p must be an odd prime >= 5");
  CoeffMap m;
  for (std::int64_t v = 1; v < p; ++v)
    m.emplace(v, Rational(legendre(v, p)));
  return Cyclotomic(p, std::move(m));
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational())
    throw std::domain_error("Cyclotomic: value is not rational (conductor " +
                            std::to_string(order_) + ")");
  return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second;
}

Cyclotomic Cyclotomic::galois(std::int64_t t) const {
  std::int64_t n = order_;
  std::int64_t tr = t % n;
  if (tr < 0) tr += n;
  if (n > 1 && gcd_i64(tr, n) != 1)
    throw std::invalid_argument("galois: t = " + std::to_string(t) +
                                " is not coprime to the order " + std::to_string(n));
  if (n == 1) return *this;
  return Cyclotomic(n, apply_galois_raw(n, coeffs_, tr));
}

Cyclotomic Cyclotomic::conj() const { return galois(order_ - 1); }

Rational Cyclotomic::trace_in(std::int64_t ambient) const { return trace_in_twisted(ambient, 0); }

Rational Cyclotomic::trace_in_twisted(std::int64_t ambient, std::int64_t twist) const {
  if (ambient < 1 || ambient % order_ != 0)
    throw std::invalid_argument("trace_in: ambient order must be a multiple of the conductor");
  if (ambient == 1) return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second;
  // Trace is linear over the monomials, whose orbit sums are cached per
  // ambient order; the twist shifts every exponent by a fixed amount.
  const CycContext& ctx = context_for(ambient);
  std::int64_t scale = ambient / order_;
  std::int64_t shift = twist % ambient;
  if (shift < 0) shift += ambient;
  Rational acc(0);
  for (auto& [e, c] : coeffs_) {
    std::int64_t exp = (e * scale + shift) % ambient;
    acc += c * ctx.monomial_trace[static_cast<std::size_t>(exp)];
  }
  return acc;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  std::int64_t n = lcm_i64(a.order_, b.order_);
  Cyclotomic::CoeffMap m;
  for (auto& [e, c] : a.coeffs_) map_add(m, e * (n / a.order_), c);
  for (auto& [e, c] : b.coeffs_) map_add(m, e * (n / b.order_), c);
  return Cyclotomic(n, std::move(m));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  std::int64_t n = lcm_i64(a.order_, b.order_);
  std::int64_t sa = n / a.order_, sb = n / b.order_;
  Cyclotomic::CoeffMap m;
  for (auto& [ea, ca] : a.coeffs_)
    for (auto& [eb, cb] : b.coeffs_)
      map_add(m, (ea * sa + eb * sb) % n, ca * cb);
  return Cyclotomic(n, std::move(m));
}

Cyclotomic Cyclotomic::operator*(const Rational& s) const {
  if (s.is_zero()) return Cyclotomic();
  Cyclotomic r = *this;
  for (auto& [e, c] : r.coeffs_) c *= s;
  return r;
}

Cyclotomic Cyclotomic::operator/(const Rational& s) const {
  if (s.is_zero()) throw std::invalid_argument("Cyclotomic: division by zero");
  return *this * (Rational(1) / s);
}

std::string Cyclotomic::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : coeffs_) {
    Rational v = c;
    if (first) {
      if (v.sign() < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
      if (v.sign() < 0) v = -v;
    }
    first = false;
    if (e == 0) {
      os << v.str();
    } else {
      if (v != Rational(1)) os << v.str() << "*";
      os << "z" << order_;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
  return os << x.str();
}

Rational normalized_trace(const Cyclotomic& y, std::int64_t k) {
  return normalized_trace_twisted(y, k, 0);
}

Rational normalized_trace_twisted(const Cyclotomic& y, std::int64_t k, std::int64_t l) {
  if (k < 1) throw std::invalid_argument("normalized_trace: k must be >= 1");
  std::int64_t ambient = lcm_i64(k, y.order());
  // zeta_k^{-l} embeds into Q(zeta_ambient) as the exponent -l * ambient/k
  Rational tr = y.trace_in_twisted(ambient, -l * (ambient / k));
  return Rational(euler_phi(k), euler_phi(ambient)) * tr;
}

}  // namespace zc1
