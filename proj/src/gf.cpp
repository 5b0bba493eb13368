#include "pcn/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pcn {

std::string Valuation::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

Valuation v2(std::uint64_t n) {
  if (n == 0) return Valuation::infinite();
  return Valuation(static_cast<unsigned>(__builtin_ctzll(n)));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("ipow: result exceeds 64 bits");
    r *= base;
  }
  return r;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 r = 1;
  unsigned __int128 b = base % mod;
  while (exp != 0) {
    if (exp & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t gcd_pk1(std::uint64_t p, unsigned k, unsigned m) {
  if (k == 0 || m == 0) throw std::invalid_argument("gcd_pk1: k and m must be >= 1");
  std::uint64_t closed = 0;
  if (p == 2) {
    const unsigned g2 = std::gcd(2 * k, m);
    const unsigned g1 = std::gcd(k, m);
    closed = (ipow(2, g2) - 1) / (ipow(2, g1) - 1);
  } else if (v2(m) <= v2(k)) {
    closed = 2;
  } else {
    closed = ipow(p, std::gcd(k, m)) + 1;
  }
  const std::uint64_t direct = std::gcd(ipow(p, k) + 1, ipow(p, m) - 1);
  if (closed != direct) {
    std::ostringstream os;
    os << "gcd_pk1 closed form " << closed << " != " << direct << " for p=" << p
       << " k=" << k << " m=" << m;
    throw std::logic_error(os.str());
  }
  return closed;
}

namespace {

// Polynomials over GF(p) of degree < m, reduced modulo a monic f of degree m.
class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::uint32_t> f) : p_(p), f_(std::move(f)) {}

  std::size_t degree() const { return f_.size() - 1; }

  std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b) const {
    const std::size_t m = degree();
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    }
    for (std::size_t top = prod.size(); top-- > m;) {
      const std::uint64_t t = prod[top];
      if (t == 0) continue;
      prod[top] = 0;
      for (std::size_t i = 0; i < m; ++i)
        prod[top - m + i] = (prod[top - m + i] + (p_ - t) * f_[i]) % p_;
    }
    return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m)};
  }

  std::vector<std::uint32_t> pow_x(std::uint64_t e) const {
    const std::size_t m = degree();
    std::vector<std::uint32_t> r(m, 0), b(m, 0);
    r[0] = 1;
    if (m == 1) {
      b[0] = (p_ - f_[0]) % p_;
    } else {
      b[1] = 1;
    }
    while (e != 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  static bool is_one(const std::vector<std::uint32_t>& a) {
    return a[0] == 1 && std::all_of(a.begin() + 1, a.end(), [](auto v) { return v == 0; });
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> f_;
};

bool root_is_primitive(std::uint32_t p, const std::vector<std::uint32_t>& f, std::uint64_t q,
                       const std::vector<std::uint64_t>& factors) {
  if (f[0] == 0) return false;
  const PolyRing ring(p, f);
  if (!PolyRing::is_one(ring.pow_x(q - 1))) return false;
  for (std::uint64_t r : factors)
    if (PolyRing::is_one(ring.pow_x((q - 1) / r))) return false;
  return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto r : factors)
      if (powmod(g, (p - 1) / r, p) == 1) ok = false;
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace

Field Field::build(std::uint32_t p, unsigned m, std::uint64_t size_cap) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 0;
  try {
    q = ipow(p, m);
  } catch (const std::overflow_error&) {
    throw SizeCapExceeded("field order exceeds 64 bits");
  }
  if (q > size_cap || q > (std::uint64_t{1} << 31)) {
    throw SizeCapExceeded("field order " + std::to_string(q) + " exceeds size cap " +
                          std::to_string(std::min<std::uint64_t>(size_cap, std::uint64_t{1} << 31)));
  }

  Field F;
  F.p_ = p;
  F.m_ = m;
  F.q_ = static_cast<std::uint32_t>(q);

  if (m == 1) {
    const std::uint32_t g = smallest_primitive_root(p);
    F.modulus_ = {(p - g) % p, 1};
    F.generator_ = Element{g % p};
  } else {
    const auto factors = prime_factors(q - 1);
    const std::uint64_t candidates = q;  // p^m choices of c_0..c_{m-1}
    bool found = false;
    std::vector<std::uint32_t> f(m + 1, 0);
    for (std::uint64_t v = 0; v < candidates && !found; ++v) {
      std::uint64_t rest = v;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      f[m] = 1;
      found = root_is_primitive(p, f, q, factors);
    }
    if (!found) throw std::logic_error("no primitive polynomial found (bug)");
    F.modulus_ = f;
    F.generator_ = Element{p};
  }

  // exp table by repeated multiplication with the generator in the
  // coefficient basis.
  const std::uint32_t n = F.q_ - 1;
  F.exp_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
  F.log_.assign(F.q_, 0);
  std::vector<std::uint32_t> digits(m, 0);
  digits[0] = 1;
  std::vector<std::uint32_t> place(m, 1);
  for (unsigned i = 1; i < m; ++i) place[i] = place[i - 1] * p;
  for (std::uint32_t e = 0; e < n; ++e) {
    std::uint32_t code = 0;
    for (unsigned i = 0; i < m; ++i) code += digits[i] * place[i];
    if (e != 0 && code == 1) throw std::logic_error("generator order too small (bug)");
    F.exp_[e] = code;
    F.log_[code] = e;
    if (m == 1) {
      digits[0] = static_cast<std::uint32_t>((std::uint64_t{digits[0]} * F.generator_.code) % p);
    } else {
      const std::uint32_t top = digits[m - 1];
      for (unsigned i = m - 1; i > 0; --i) digits[i] = digits[i - 1];
      digits[0] = 0;
      if (top != 0) {
        for (unsigned i = 0; i < m; ++i)
          digits[i] = static_cast<std::uint32_t>(
              (digits[i] + std::uint64_t{p - top} * F.modulus_[i]) % p);
      }
    }
  }
  for (std::uint32_t e = n; e < 2 * n + 1; ++e) F.exp_[e] = F.exp_[e % n];
  return F;
}

Element Field::from_integer(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Element{static_cast<std::uint32_t>(r)};
}

void Field::check(Element x) const {
  if (!contains(x))
    throw std::out_of_range("element code " + std::to_string(x.code) + " outside GF(" +
                            std::to_string(p_) + "^" + std::to_string(m_) + ")");
}

std::uint32_t Field::add_digits(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  while ((x | y) != 0) {
    std::uint32_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    r += s * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return r;
}

std::uint32_t Field::neg_digits(std::uint32_t x) const {
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  while (x != 0) {
    const std::uint32_t d = x % p_;
    if (d != 0) r += (p_ - d) * place;
    place *= p_;
    x /= p_;
  }
  return r;
}

Element Field::inv(Element x) const {
  if (x.code == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t n = q_ - 1;
  return Element{exp_[(n - log_[x.code]) % n]};
}

std::uint32_t Field::log(Element x) const {
  if (x.code == 0) throw std::domain_error("log of zero");
  return log_[x.code];
}

int Field::quadratic_character(Element x) const {
  if (p_ == 2) throw std::domain_error("quadratic character needs odd characteristic");
  if (x.code == 0) return 0;
  return log_[x.code] % 2 == 0 ? 1 : -1;
}

bool Field::in_subfield(Element c, unsigned g) const {
  if (c.code == 0) return true;
  const std::uint64_t e = powmod(p_, g, q_ - 1);
  return pow(c, e == 0 ? q_ - 1 : e) == c;
}

Element Field::trace(Element x) const {
  Element t = zero();
  Element y = x;
  for (unsigned i = 0; i < m_; ++i) {
    t = add(t, y);
    y = pow(y, p_);
  }
  return t;
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace pcn
