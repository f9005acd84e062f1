#pragma once

// Exact commutative rings with unity.
//
// Supported descriptors:
//   z                      the integers (checked 64-bit)
//   zmod:<m>, gf:<p>       residues modulo m (gf requires p prime, same ring)
//   polyq:<p>:<c0,..,1>    F_p[x] modulo a monic polynomial
//   zloc:<m>               Z[1/m], reduced fractions
//
// Finite ring elements store a canonical code in RingElement::num: the residue,
// or the coefficient vector read as a base-p number. Enumeration order is the
// numeric order of that code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "abelslab/error.hpp"
#include "abelslab/smith.hpp"

namespace abelslab {

enum class RingKind { integers, zmod, polyq, zloc };

struct RingDescriptor {
  RingKind kind = RingKind::integers;
  std::int64_t modulus = 0;          // m for zmod/zloc, p for polyq
  std::vector<std::int64_t> poly;    // polyq modulus, low to high, monic

  bool operator==(RingDescriptor const&) const = default;

  static RingDescriptor integers() { return {}; }
  static RingDescriptor zmod(std::int64_t m) { return {RingKind::zmod, m, {}}; }
  static RingDescriptor gf(std::int64_t p);
  static RingDescriptor polyq(std::int64_t p, std::vector<std::int64_t> coeffs) {
    return {RingKind::polyq, p, std::move(coeffs)};
  }
  static RingDescriptor zloc(std::int64_t m) { return {RingKind::zloc, m, {}}; }

  void validate() const;
  std::string to_string() const;
};

namespace detail {

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

inline std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::overflow, "integer addition");
  return r;
}
inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::overflow, "integer multiplication");
  return r;
}

// Extended gcd: returns g and x with a*x = g (mod m).
inline std::pair<std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return {old_r, old_s};
}

inline std::int64_t parse_int(std::string_view s) {
  if (s.empty()) throw Error(ErrorCode::invalid_descriptor, "empty integer");
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(std::string(s), &pos);
  } catch (std::exception const&) {
    throw Error(ErrorCode::invalid_descriptor, "bad integer '" + std::string(s) + "'");
  }
  if (pos != s.size()) throw Error(ErrorCode::invalid_descriptor, "bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

inline RingDescriptor RingDescriptor::gf(std::int64_t p) {
  if (!detail::is_prime(p)) throw Error(ErrorCode::invalid_descriptor, "gf requires a prime, got " + std::to_string(p));
  return zmod(p);
}

inline void RingDescriptor::validate() const {
  switch (kind) {
    case RingKind::integers:
      return;
    case RingKind::zmod:
      if (modulus < 2) throw Error(ErrorCode::invalid_descriptor, "zmod requires m >= 2");
      if (modulus > (std::int64_t{1} << 62)) throw Error(ErrorCode::invalid_descriptor, "zmod modulus too large");
      return;
    case RingKind::zloc:
      if (modulus < 2) throw Error(ErrorCode::invalid_descriptor, "zloc requires m >= 2");
      return;
    case RingKind::polyq: {
      if (!detail::is_prime(modulus)) throw Error(ErrorCode::invalid_descriptor, "polyq base must be prime");
      if (poly.size() < 2) throw Error(ErrorCode::invalid_descriptor, "polyq modulus must have degree >= 1");
      if (poly.back() != 1) throw Error(ErrorCode::invalid_descriptor, "polyq modulus must be monic");
      for (auto c : poly) {
        if (c < 0 || c >= modulus) throw Error(ErrorCode::invalid_descriptor, "polyq coefficient out of range");
      }
      double size = 1;
      for (std::size_t i = 1; i < poly.size(); ++i) size *= static_cast<double>(modulus);
      if (size > 2147483647.0) throw Error(ErrorCode::invalid_descriptor, "polyq ring too large");
      return;
    }
  }
}

inline std::string RingDescriptor::to_string() const {
  switch (kind) {
    case RingKind::integers:
      return "z";
    case RingKind::zmod:
      return "zmod:" + std::to_string(modulus);
    case RingKind::zloc:
      return "zloc:" + std::to_string(modulus);
    case RingKind::polyq: {
      std::string s = "polyq:" + std::to_string(modulus) + ":";
      for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(poly[i]);
      }
      return s;
    }
  }
  return "?";
}

inline RingDescriptor parse_descriptor(std::string_view text) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  RingDescriptor d;
  if (head == "z" && colon == std::string_view::npos) {
    d = RingDescriptor::integers();
  } else if (head == "zmod") {
    d = RingDescriptor::zmod(detail::parse_int(rest));
  } else if (head == "gf") {
    d = RingDescriptor::gf(detail::parse_int(rest));
  } else if (head == "zloc") {
    d = RingDescriptor::zloc(detail::parse_int(rest));
  } else if (head == "polyq") {
    auto c2 = rest.find(':');
    if (c2 == std::string_view::npos) throw Error(ErrorCode::invalid_descriptor, "polyq needs <p>:<coeffs>");
    std::int64_t p = detail::parse_int(rest.substr(0, c2));
    std::vector<std::int64_t> coeffs;
    std::string_view list = rest.substr(c2 + 1);
    while (!list.empty()) {
      auto comma = list.find(',');
      coeffs.push_back(detail::parse_int(list.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      list = list.substr(comma + 1);
    }
    d = RingDescriptor::polyq(p, std::move(coeffs));
  } else {
    throw Error(ErrorCode::invalid_descriptor, "unknown ring '" + std::string(text) + "'");
  }
  d.validate();
  return d;
}

struct RingElement {
  std::int64_t num = 0;
  std::int64_t den = 1;

  auto operator<=>(RingElement const&) const = default;
};

struct RingElementHash {
  std::size_t operator()(RingElement const& e) const noexcept {
    return std::hash<std::int64_t>{}(e.num) * 1000003u ^ std::hash<std::int64_t>{}(e.den);
  }
};

struct RingAdditivePresentation {
  using Combination = std::vector<std::int64_t>;  // coefficients over generators

  std::vector<RingElement> generators;             // generators[0] is 1
  std::vector<Combination> relators;
  std::vector<std::vector<Combination>> product;   // product[t][s] = m(t,s)
};

class Ring {
 public:
  Ring() : Ring(RingDescriptor::integers()) {}
  explicit Ring(RingDescriptor desc);

  RingDescriptor const& descriptor() const { return d_->desc; }
  RingKind kind() const { return d_->desc.kind; }
  bool is_finite() const { return kind() == RingKind::zmod || kind() == RingKind::polyq; }
  // Cardinality of a finite ring.
  std::int64_t size() const {
    require_finite();
    return d_->size;
  }
  // Characteristic; 0 for the integers and their localizations.
  std::int64_t characteristic() const {
    switch (kind()) {
      case RingKind::zmod: return d_->desc.modulus;
      case RingKind::polyq: return d_->desc.modulus;
      default: return 0;
    }
  }

  bool operator==(Ring const& o) const { return d_ == o.d_ || d_->desc == o.d_->desc; }

  RingElement zero() const { return {0, 1}; }
  RingElement one() const { return {1, 1}; }
  RingElement from_int(std::int64_t k) const;
  // k/d in Z[1/m]; the denominator must be admissible.
  RingElement from_fraction(std::int64_t k, std::int64_t d) const;
  // Element with the given canonical code (finite rings only).
  RingElement from_code(std::int64_t code) const {
    require_finite();
    if (code < 0 || code >= d_->size) throw Error(ErrorCode::invalid_argument, "element code out of range");
    return {code, 1};
  }

  RingElement add(RingElement a, RingElement b) const;
  RingElement neg(RingElement a) const;
  RingElement sub(RingElement a, RingElement b) const { return add(a, neg(b)); }
  RingElement mul(RingElement a, RingElement b) const;
  RingElement pow(RingElement a, std::int64_t e) const;
  std::optional<RingElement> try_inverse(RingElement a) const;
  bool is_unit(RingElement a) const { return try_inverse(a).has_value(); }
  RingElement inverse(RingElement a) const {
    auto inv = try_inverse(a);
    if (!inv) throw Error(ErrorCode::non_unit, to_string(a) + " is not a unit in " + descriptor().to_string());
    return *inv;
  }
  bool is_zero(RingElement a) const { return a.num == 0; }
  bool is_one(RingElement a) const { return a.num == 1 && a.den == 1; }

  std::vector<RingElement> enumerate_elements() const;
  std::vector<RingElement> enumerate_units() const;
  // A small generating set of the unit group, chosen greedily in element order.
  std::vector<RingElement> unit_generators() const;
  RingAdditivePresentation additive_presentation() const;

  std::string to_string(RingElement a) const;

 private:
  struct Data {
    RingDescriptor desc;
    std::int64_t size = 0;
    std::int64_t degree = 0;                 // polyq
    std::vector<std::int32_t> add_table;     // polyq, size^2 when small
    std::vector<std::int32_t> mul_table;
    std::vector<std::int64_t> loc_primes;    // zloc
  };
  std::shared_ptr<Data const> d_;

  void require_finite() const {
    if (!is_finite()) throw Error(ErrorCode::infinite_ring, descriptor().to_string() + " is infinite");
  }
  std::vector<std::int64_t> decode(std::int64_t code) const {
    std::vector<std::int64_t> c(d_->degree);
    for (auto& v : c) {
      v = code % d_->desc.modulus;
      code /= d_->desc.modulus;
    }
    return c;
  }
  std::int64_t encode(std::vector<std::int64_t> const& c) const {
    std::int64_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * d_->desc.modulus + c[i];
    return code;
  }
  std::int64_t poly_add(std::int64_t a, std::int64_t b) const;
  std::int64_t poly_mul(std::int64_t a, std::int64_t b) const;
  std::optional<std::int64_t> poly_inverse(std::int64_t a) const;
  RingElement make_fraction(std::int64_t n, std::int64_t d) const;
  bool loc_admissible(std::int64_t d) const;
};

inline Ring::Ring(RingDescriptor desc) {
  desc.validate();
  auto data = std::make_shared<Data>();
  data->desc = std::move(desc);
  auto const& ds = data->desc;
  if (ds.kind == RingKind::zmod) data->size = ds.modulus;
  if (ds.kind == RingKind::polyq) {
    data->degree = static_cast<std::int64_t>(ds.poly.size()) - 1;
    data->size = 1;
    for (std::int64_t i = 0; i < data->degree; ++i) data->size *= ds.modulus;
  }
  if (ds.kind == RingKind::zloc) {
    std::int64_t m = ds.modulus;
    for (std::int64_t q = 2; q * q <= m; ++q) {
      if (m % q == 0) {
        data->loc_primes.push_back(q);
        while (m % q == 0) m /= q;
      }
    }
    if (m > 1) data->loc_primes.push_back(m);
  }
  d_ = data;
  if (ds.kind == RingKind::polyq && data->size <= 1024) {
    std::vector<std::int32_t> at(data->size * data->size), mt(data->size * data->size);
    for (std::int64_t a = 0; a < data->size; ++a) {
      for (std::int64_t b = 0; b < data->size; ++b) {
        at[a * data->size + b] = static_cast<std::int32_t>(poly_add(a, b));
        mt[a * data->size + b] = static_cast<std::int32_t>(poly_mul(a, b));
      }
    }
    data->add_table = std::move(at);
    data->mul_table = std::move(mt);
  }
}

inline std::int64_t Ring::poly_add(std::int64_t a, std::int64_t b) const {
  auto x = decode(a), y = decode(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % d_->desc.modulus;
  return encode(x);
}

inline std::int64_t Ring::poly_mul(std::int64_t a, std::int64_t b) const {
  std::int64_t const p = d_->desc.modulus;
  std::int64_t const deg = d_->degree;
  auto x = decode(a), y = decode(b);
  std::vector<std::int64_t> prod(2 * deg, 0);
  for (std::int64_t i = 0; i < deg; ++i) {
    for (std::int64_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  auto const& f = d_->desc.poly;
  for (std::int64_t k = 2 * deg - 1; k >= deg; --k) {
    std::int64_t c = prod[k];
    if (c == 0) continue;
    // x^k = x^(k-deg) * x^deg and x^deg = -(f_0 + ... + f_{deg-1} x^{deg-1}).
    for (std::int64_t i = 0; i < deg; ++i) {
      prod[k - deg + i] = detail::mod_floor(prod[k - deg + i] - c * f[i], p);
    }
    prod[k] = 0;
  }
  prod.resize(deg);
  return encode(prod);
}

// Solves a*y = 1 as a linear system over F_p.
inline std::optional<std::int64_t> Ring::poly_inverse(std::int64_t a) const {
  std::int64_t const p = d_->desc.modulus;
  std::int64_t const deg = d_->degree;
  // Column j is a * x^j.
  std::vector<std::vector<std::int64_t>> m(deg, std::vector<std::int64_t>(deg + 1, 0));
  std::int64_t basis = 1;
  for (std::int64_t j = 0; j < deg; ++j) {
    auto col = decode(poly_mul(a, basis));
    for (std::int64_t i = 0; i < deg; ++i) m[i][j] = col[i];
    basis *= p;
  }
  m[0][deg] = 1;
  for (std::int64_t c = 0, r = 0; c < deg; ++c, ++r) {
    std::int64_t piv = -1;
    for (std::int64_t i = r; i < deg; ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    std::swap(m[r], m[piv]);
    std::int64_t inv = detail::mod_floor(detail::ext_gcd(m[r][c], p).second, p);
    for (auto& v : m[r]) v = v * inv % p;
    for (std::int64_t i = 0; i < deg; ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::int64_t f = m[i][c];
      for (std::int64_t k = 0; k <= deg; ++k) m[i][k] = detail::mod_floor(m[i][k] - f * m[r][k], p);
    }
  }
  std::vector<std::int64_t> sol(deg);
  for (std::int64_t i = 0; i < deg; ++i) sol[i] = m[i][deg];
  return encode(sol);
}

inline bool Ring::loc_admissible(std::int64_t d) const {
  d = d < 0 ? -d : d;
  for (auto q : d_->loc_primes) {
    while (d % q == 0) d /= q;
  }
  return d == 1;
}

inline RingElement Ring::make_fraction(std::int64_t n, std::int64_t d) const {
  if (d == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  return {n, d};
}

inline RingElement Ring::from_int(std::int64_t k) const {
  switch (kind()) {
    case RingKind::zmod:
      return {detail::mod_floor(k, d_->desc.modulus), 1};
    case RingKind::polyq:
      return {detail::mod_floor(k, d_->desc.modulus), 1};
    default:
      return {k, 1};
  }
}

inline RingElement Ring::from_fraction(std::int64_t k, std::int64_t d) const {
  if (kind() == RingKind::zloc) {
    if (!loc_admissible(d)) throw Error(ErrorCode::invalid_argument, "denominator not invertible in " + descriptor().to_string());
    return make_fraction(k, d);
  }
  return mul(from_int(k), inverse(from_int(d)));
}

inline RingElement Ring::add(RingElement a, RingElement b) const {
  switch (kind()) {
    case RingKind::integers:
      return {detail::add_checked(a.num, b.num), 1};
    case RingKind::zmod: {
      std::int64_t m = d_->desc.modulus;
      std::int64_t s = a.num + b.num;  // both < 2^62
      return {s >= m ? s - m : s, 1};
    }
    case RingKind::polyq:
      if (!d_->add_table.empty()) return {d_->add_table[a.num * d_->size + b.num], 1};
      return {poly_add(a.num, b.num), 1};
    case RingKind::zloc: {
      std::int64_t g = std::gcd(a.den, b.den);
      std::int64_t l = detail::mul_checked(a.den / g, b.den);
      std::int64_t n = detail::add_checked(detail::mul_checked(a.num, l / a.den), detail::mul_checked(b.num, l / b.den));
      return make_fraction(n, l);
    }
  }
  return {};
}

inline RingElement Ring::neg(RingElement a) const {
  switch (kind()) {
    case RingKind::integers:
    case RingKind::zloc:
      if (a.num == INT64_MIN) throw Error(ErrorCode::overflow, "negation");
      return {-a.num, a.den};
    case RingKind::zmod:
      return {a.num == 0 ? 0 : d_->desc.modulus - a.num, 1};
    case RingKind::polyq: {
      auto c = decode(a.num);
      for (auto& v : c) v = v == 0 ? 0 : d_->desc.modulus - v;
      return {encode(c), 1};
    }
  }
  return {};
}

inline RingElement Ring::mul(RingElement a, RingElement b) const {
  switch (kind()) {
    case RingKind::integers:
      return {detail::mul_checked(a.num, b.num), 1};
    case RingKind::zmod:
      return {detail::mulmod(a.num, b.num, d_->desc.modulus), 1};
    case RingKind::polyq:
      if (!d_->mul_table.empty()) return {d_->mul_table[a.num * d_->size + b.num], 1};
      return {poly_mul(a.num, b.num), 1};
    case RingKind::zloc: {
      std::int64_t g1 = std::gcd(a.num, b.den), g2 = std::gcd(b.num, a.den);
      if (g1 == 0) g1 = 1;
      if (g2 == 0) g2 = 1;
      std::int64_t n = detail::mul_checked(a.num / g1, b.num / g2);
      std::int64_t d = detail::mul_checked(a.den / g2, b.den / g1);
      return make_fraction(n, d);
    }
  }
  return {};
}

inline RingElement Ring::pow(RingElement a, std::int64_t e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  RingElement r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

inline std::optional<RingElement> Ring::try_inverse(RingElement a) const {
  switch (kind()) {
    case RingKind::integers:
      if (a.num == 1 || a.num == -1) return a;
      return std::nullopt;
    case RingKind::zmod: {
      auto [g, x] = detail::ext_gcd(a.num, d_->desc.modulus);
      if (g != 1) return std::nullopt;
      return RingElement{detail::mod_floor(x, d_->desc.modulus), 1};
    }
    case RingKind::polyq: {
      if (a.num == 0) return std::nullopt;
      auto inv = poly_inverse(a.num);
      if (!inv) return std::nullopt;
      return RingElement{*inv, 1};
    }
    case RingKind::zloc:
      if (a.num == 0 || !loc_admissible(a.num)) return std::nullopt;
      return make_fraction(a.den, a.num);
  }
  return std::nullopt;
}

inline std::vector<RingElement> Ring::enumerate_elements() const {
  require_finite();
  std::vector<RingElement> out;
  out.reserve(d_->size);
  for (std::int64_t c = 0; c < d_->size; ++c) out.push_back({c, 1});
  return out;
}

inline std::vector<RingElement> Ring::enumerate_units() const {
  std::vector<RingElement> out;
  for (auto const& e : enumerate_elements()) {
    if (is_unit(e)) out.push_back(e);
  }
  return out;
}

inline std::vector<RingElement> Ring::unit_generators() const {
  if (!is_finite()) {
    if (kind() == RingKind::integers) return {from_int(-1)};
    std::vector<RingElement> gens{from_int(-1)};
    for (auto q : d_->loc_primes) gens.push_back(from_int(q));
    return gens;
  }
  auto units = enumerate_units();
  std::vector<RingElement> gens;
  std::vector<RingElement> closure{one()};
  auto contains = [&](RingElement x) { return std::binary_search(closure.begin(), closure.end(), x); };
  for (auto const& u : units) {
    if (contains(u)) continue;
    gens.push_back(u);
    // Recompute the generated subgroup; the unit group is abelian.
    std::vector<RingElement> frontier = closure;
    std::vector<RingElement> grown = closure;
    while (!frontier.empty()) {
      std::vector<RingElement> next;
      for (auto const& x : frontier) {
        for (auto const& g : gens) {
          RingElement y = mul(x, g);
          if (!std::binary_search(grown.begin(), grown.end(), y) &&
              std::find(next.begin(), next.end(), y) == next.end()) {
            next.push_back(y);
          }
        }
      }
      grown.insert(grown.end(), next.begin(), next.end());
      std::sort(grown.begin(), grown.end());
      frontier = std::move(next);
    }
    closure = std::move(grown);
  }
  return gens;
}

inline RingAdditivePresentation Ring::additive_presentation() const {
  RingAdditivePresentation pres;
  switch (kind()) {
    case RingKind::integers:
      // Free of rank one; documented special case with no additive relators.
      pres.generators = {one()};
      pres.product = {{{1}}};
      return pres;
    case RingKind::zloc:
      throw Error(ErrorCode::unsupported_kind, "no finite additive presentation for " + descriptor().to_string());
    case RingKind::zmod:
      pres.generators = {one()};
      pres.relators = {{d_->desc.modulus}};
      pres.product = {{{1}}};
      return pres;
    case RingKind::polyq: {
      std::int64_t const deg = d_->degree, p = d_->desc.modulus;
      std::int64_t basis = 1;
      for (std::int64_t i = 0; i < deg; ++i) {
        pres.generators.push_back({basis, 1});
        RingAdditivePresentation::Combination rel(deg, 0);
        rel[i] = p;
        pres.relators.push_back(rel);
        basis *= p;
      }
      pres.product.assign(deg, std::vector<RingAdditivePresentation::Combination>(deg));
      for (std::int64_t i = 0; i < deg; ++i) {
        for (std::int64_t j = 0; j < deg; ++j) {
          pres.product[i][j] = decode(mul(pres.generators[i], pres.generators[j]).num);
        }
      }
      return pres;
    }
  }
  return pres;
}

inline std::string Ring::to_string(RingElement a) const {
  switch (kind()) {
    case RingKind::integers:
    case RingKind::zmod:
      return std::to_string(a.num);
    case RingKind::zloc:
      if (a.den == 1) return std::to_string(a.num);
      return std::to_string(a.num) + "/" + std::to_string(a.den);
    case RingKind::polyq: {
      auto c = decode(a.num);
      std::string s;
      for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
          s += std::to_string(c[i]);
        } else {
          if (c[i] != 1) s += std::to_string(c[i]);
          s += "x";
          if (i > 1) s += "^" + std::to_string(i);
        }
      }
      return s.empty() ? "0" : s;
    }
  }
  return "?";
}

inline Ring make_ring(RingDescriptor const& desc) { return Ring(desc); }
inline Ring make_ring(std::string_view text) { return Ring(parse_descriptor(text)); }

// Evaluates an integer combination of the presentation generators in the ring.
inline RingElement evaluate_combination(Ring const& ring, RingAdditivePresentation const& pres,
                                        RingAdditivePresentation::Combination const& c) {
  RingElement acc = ring.zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    acc = ring.add(acc, ring.mul(ring.from_int(c[i]), pres.generators[i]));
  }
  return acc;
}

struct AdditivePresentationAudit {
  bool contains_one = false;
  bool unit_law = false;
  bool symmetric = false;
  bool products_evaluate = false;
  bool relators_vanish = false;
  std::optional<BigInt> quotient_order;   // empty when the quotient is infinite
  bool order_matches = false;

  bool ok() const {
    return contains_one && unit_law && symmetric && products_evaluate && relators_vanish && order_matches;
  }
};

inline AdditivePresentationAudit audit_additive_presentation(Ring const& ring, RingAdditivePresentation const& pres) {
  AdditivePresentationAudit a;
  std::size_t const t = pres.generators.size();
  a.contains_one = t > 0 && ring.is_one(pres.generators[0]);
  a.unit_law = a.contains_one;
  a.symmetric = true;
  a.products_evaluate = true;
  for (std::size_t i = 0; i < t; ++i) {
    if (a.contains_one) {
      RingAdditivePresentation::Combination e(t, 0);
      e[i] = 1;
      if (pres.product[0][i] != e) a.unit_law = false;
    }
    for (std::size_t j = 0; j < t; ++j) {
      if (pres.product[i][j] != pres.product[j][i]) a.symmetric = false;
      if (evaluate_combination(ring, pres, pres.product[i][j]) != ring.mul(pres.generators[i], pres.generators[j])) {
        a.products_evaluate = false;
      }
    }
  }
  a.relators_vanish = true;
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    if (!ring.is_zero(evaluate_combination(ring, pres, pres.relators[r]))) a.relators_vanish = false;
    for (std::size_t c = 0; c < t; ++c) {
      if (pres.relators[r][c] != 0) entries.push_back({r, c, pres.relators[r][c]});
    }
  }
  auto snf = smith_invariants(pres.relators.size(), t, entries);
  if (snf.rank() == t) {
    BigInt order = 1;
    for (auto const& d : snf.factors) order *= d;
    a.quotient_order = order;
  }
  if (ring.is_finite()) {
    a.order_matches = a.quotient_order && *a.quotient_order == ring.size();
  } else {
    a.order_matches = !a.quotient_order.has_value();
  }
  return a;
}

}  // namespace abelslab
