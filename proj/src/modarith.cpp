#include "lazard/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace lazard {

bool isPrime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulMod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      mod(static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m), m));
}

std::int64_t powMod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t r = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) r = mulMod(r, base, m);
    base = mulMod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::int64_t invMod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw Error("invMod: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return mod(old_s, m);
}

int pValuation(std::int64_t n, int p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// ---------------------------------------------------------------- PShape

PShape::PShape(int p, std::span<const int> exps) : p_(p), rank_(static_cast<int>(exps.size())) {
  if (!isPrime(p)) throw Error("PShape: " + std::to_string(p) + " is not prime");
  if (rank_ > kMaxRank) throw Error("PShape: rank exceeds " + std::to_string(kMaxRank));
  for (int i = 0; i < rank_; ++i) {
    if (exps[i] < 1) throw Error("PShape: exponents must be >= 1");
    if (i > 0 && exps[i] > exps[i - 1]) throw Error("PShape: exponents must be non-increasing");
    exps_[i] = exps[i];
    moduli_[i] = ipow(p, exps[i]);
    order_ *= static_cast<std::uint64_t>(moduli_[i]);
  }
}

int PShape::length() const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += exps_[i];
  return s;
}

PVec PShape::zero() const {
  PVec v;
  v.shape_ = *this;
  return v;
}

PVec PShape::gen(int i) const {
  PVec v = zero();
  v.c_[i] = 1 % moduli_[i];
  return v;
}

PVec PShape::at(Index idx) const {
  PVec v = zero();
  std::uint64_t x = idx;
  for (int i = 0; i < rank_; ++i) {
    v.c_[i] = static_cast<std::int64_t>(x % static_cast<std::uint64_t>(moduli_[i]));
    x /= static_cast<std::uint64_t>(moduli_[i]);
  }
  return v;
}

Index PShape::indexOf(const PVec& v) const {
  std::uint64_t idx = 0;
  for (int i = rank_ - 1; i >= 0; --i) idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(v.c_[i]);
  return static_cast<Index>(idx);
}

std::string PShape::str() const {
  std::ostringstream os;
  os << "(" << p_ << ";[";
  for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << exps_[i];
  os << "])";
  return os.str();
}

bool PShape::operator==(const PShape& o) const {
  if (p_ != o.p_ || rank_ != o.rank_) return false;
  for (int i = 0; i < rank_; ++i)
    if (exps_[i] != o.exps_[i]) return false;
  return true;
}

// ---------------------------------------------------------------- PVec

PVec::PVec(const PShape& shape, std::span<const std::int64_t> coords) : shape_(shape) {
  if (static_cast<int>(coords.size()) != shape.rank()) throw Error("PVec: coordinate count does not match shape " + shape.str());
  for (int i = 0; i < shape.rank(); ++i) c_[i] = mod(coords[i], shape.modulus(i));
}

bool PVec::isZero() const {
  for (int i = 0; i < rank(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::string PVec::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << c_[i];
  os << ")";
  return os.str();
}

static void requireSameShape(const PShape& a, const PShape& b) {
  if (!(a == b)) throw Error("shape mismatch: " + a.str() + " vs " + b.str());
}

PVec& PVec::operator+=(const PVec& o) {
  requireSameShape(shape_, o.shape_);
  for (int i = 0; i < rank(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= shape_.modulus(i)) c_[i] -= shape_.modulus(i);
  }
  return *this;
}

PVec& PVec::operator-=(const PVec& o) {
  requireSameShape(shape_, o.shape_);
  for (int i = 0; i < rank(); ++i) {
    c_[i] -= o.c_[i];
    if (c_[i] < 0) c_[i] += shape_.modulus(i);
  }
  return *this;
}

PVec& PVec::operator*=(std::int64_t k) {
  for (int i = 0; i < rank(); ++i) c_[i] = mulMod(c_[i], mod(k, shape_.modulus(i)), shape_.modulus(i));
  return *this;
}

bool PVec::operator==(const PVec& o) const {
  if (!(shape_ == o.shape_)) return false;
  for (int i = 0; i < rank(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

PVec operator+(PVec a, const PVec& b) { return a += b; }
PVec operator-(PVec a, const PVec& b) { return a -= b; }
PVec operator-(PVec a) { return a *= -1; }
PVec operator*(std::int64_t k, PVec a) { return a *= k; }

// ---------------------------------------------------------------- PScalar

PScalar::PScalar(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error("PScalar: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num_ = n / g;
  den_ = d / g;
}

static PScalar fromWide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  n /= a;
  d /= a;
  constexpr __int128 kMax = static_cast<__int128>(INT64_MAX);
  if (n > kMax || n < -kMax || d > kMax) throw Error("PScalar: overflow");
  return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
}

PScalar operator+(const PScalar& a, const PScalar& b) {
  return fromWide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                  static_cast<__int128>(a.den_) * b.den_);
}

PScalar operator-(const PScalar& a, const PScalar& b) { return a + (-b); }

PScalar operator*(const PScalar& a, const PScalar& b) {
  return fromWide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

std::string PScalar::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

PScalar PScalar::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return PScalar(std::stoll(s));
    return PScalar(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw Error("PScalar: cannot parse '" + s + "'");
  }
}

std::int64_t PScalar::residue(std::int64_t m) const {
  if (std::gcd(den_, m) != 1) throw NotLazardError("not p-divisible: denominator " + std::to_string(den_) + " modulo " + std::to_string(m));
  return mulMod(mod(num_, m), invMod(den_, m), m);
}

PVec scalarAct(const PScalar& s, const PVec& v) {
  const PShape& sh = v.shape();
  if (!s.pCoprime(sh.p())) throw NotLazardError("not p-divisible: " + s.str() + " at p=" + std::to_string(sh.p()));
  std::array<std::int64_t, kMaxRank> c{};
  for (int i = 0; i < sh.rank(); ++i) c[i] = mulMod(v[i], s.residue(sh.modulus(i)), sh.modulus(i));
  return PVec(sh, std::span<const std::int64_t>(c.data(), sh.rank()));
}

// ---------------------------------------------------------------- Endo

Endo::Endo(const PShape& shape, std::vector<PVec> images) : shape_(shape), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != shape.rank()) throw Error("Endo: need one image per generator");
  for (int j = 0; j < shape.rank(); ++j) {
    requireSameShape(shape, images_[j].shape());
    if (!(shape.modulus(j) * images_[j]).isZero())
      throw Error("Endo: image of generator " + std::to_string(j + 1) + " is not killed by p^" + std::to_string(shape.exp(j)));
  }
}

Endo Endo::identity(const PShape& shape) {
  std::vector<PVec> im;
  for (int j = 0; j < shape.rank(); ++j) im.push_back(shape.gen(j));
  return Endo(shape, std::move(im));
}

Endo Endo::zero(const PShape& shape) { return Endo(shape, std::vector<PVec>(shape.rank(), shape.zero())); }

PVec Endo::operator()(const PVec& x) const {
  requireSameShape(shape_, x.shape());
  PVec r = shape_.zero();
  for (int j = 0; j < shape_.rank(); ++j)
    if (x[j] != 0) r += x[j] * images_[j];
  return r;
}

bool Endo::isZero() const {
  return std::all_of(images_.begin(), images_.end(), [](const PVec& v) { return v.isZero(); });
}

Endo& Endo::operator+=(const Endo& o) {
  requireSameShape(shape_, o.shape_);
  for (int j = 0; j < shape_.rank(); ++j) images_[j] += o.images_[j];
  return *this;
}

Endo& Endo::operator-=(const Endo& o) {
  requireSameShape(shape_, o.shape_);
  for (int j = 0; j < shape_.rank(); ++j) images_[j] -= o.images_[j];
  return *this;
}

std::string Endo::str() const {
  std::string s = "[";
  for (int j = 0; j < shape_.rank(); ++j) s += (j ? " " : "") + images_[j].str();
  return s + "]";
}

Endo operator+(Endo a, const Endo& b) { return a += b; }
Endo operator-(Endo a, const Endo& b) { return a -= b; }
Endo operator-(const Endo& a) { return Endo::zero(a.shape()) - a; }

Endo operator*(const Endo& f, const Endo& g) {
  requireSameShape(f.shape(), g.shape());
  std::vector<PVec> im;
  for (int j = 0; j < f.shape().rank(); ++j) im.push_back(f(g.image(j)));
  return Endo(f.shape(), std::move(im));
}

Endo scaled(const PScalar& s, const Endo& f) {
  std::vector<PVec> im;
  for (int j = 0; j < f.shape().rank(); ++j) im.push_back(scalarAct(s, f.image(j)));
  return Endo(f.shape(), std::move(im));
}

Endo power(const Endo& f, int k) {
  Endo r = Endo::identity(f.shape());
  for (int i = 0; i < k; ++i) r = f * r;
  return r;
}

Endo commutator(const Endo& f, const Endo& g) { return f * g - g * f; }

static void checkNilBound(const Endo& d, int nilBound, const char* what) {
  const int p = d.shape().p();
  if (nilBound < 1) throw Error(std::string(what) + ": nilBound must be >= 1");
  if (nilBound >= p) throw NotLazardError(std::string(what) + ": denominator divisible by p (nilBound " + std::to_string(nilBound) + " >= p " + std::to_string(p) + ")");
  if (!power(d, nilBound).isZero()) throw NotLazardError(std::string(what) + ": map is not nilpotent of index <= " + std::to_string(nilBound));
}

Endo endoExp(const Endo& d, int nilBound) {
  checkNilBound(d, nilBound, "endoExp");
  Endo r = Endo::identity(d.shape());
  Endo term = r;
  std::int64_t fact = 1;
  for (int k = 1; k < nilBound; ++k) {
    term = d * term;
    fact *= k;
    r += scaled(PScalar(1, fact), term);
  }
  return r;
}

Endo endoLog(const Endo& f, int nilBound) {
  const Endo n = f - Endo::identity(f.shape());
  checkNilBound(n, nilBound, "endoLog");
  Endo r = Endo::zero(f.shape());
  Endo term = Endo::identity(f.shape());
  for (int k = 1; k < nilBound; ++k) {
    term = n * term;
    r += scaled(PScalar(k % 2 == 1 ? 1 : -1, k), term);
  }
  return r;
}

// ---------------------------------------------------------------- decomposition

namespace {

struct TableGroup {
  std::span<const Index> t;
  Index n;
  Index e;
  Index add(Index a, Index b) const { return t[static_cast<std::size_t>(a) * n + b]; }
  Index times(std::int64_t k, Index x) const {
    Index r = e;
    while (k > 0) {
      if (k & 1) r = add(r, x);
      x = add(x, x);
      k >>= 1;
    }
    return r;
  }
};

}  // namespace

AbelianDecomposition abelianDecompose(std::span<const Index> table, Index n) {
  if (n == 0 || table.size() != static_cast<std::size_t>(n) * n) throw Error("abelianDecompose: table is not n x n");
  Index e = n;
  for (Index i = 0; i < n && e == n; ++i) {
    bool ok = true;
    for (Index j = 0; j < n && ok; ++j) ok = table[static_cast<std::size_t>(i) * n + j] == j;
    if (ok) e = i;
  }
  if (e == n) throw Error("abelianDecompose: no identity element");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j)
      if (table[static_cast<std::size_t>(i) * n + j] != table[static_cast<std::size_t>(j) * n + i])
        throw Error("abelianDecompose: table is not abelian");

  int p = 0;
  if (n > 1) {
    for (Index d = 2; d <= n; ++d)
      if (n % d == 0) {
        p = static_cast<int>(d);
        break;
      }
    Index m = n;
    while (m % p == 0) m /= p;
    if (m != 1) throw Error("abelianDecompose: order " + std::to_string(n) + " is not a prime power");
  }
  TableGroup g{table, n, e};
  if (n == 1) {
    AbelianDecomposition d;
    d.shape = PShape(2, std::span<const int>{});
    d.toVec = {d.shape.zero()};
    d.fromVec = {e};
    return d;
  }

  std::vector<Index> gens;
  std::vector<int> exps;
  // inH[x] >= 0 : x lies in the span of the chosen generators, with its
  // coordinates stored in coords[x].
  std::vector<char> inH(n, 0);
  std::vector<std::vector<std::int64_t>> coords(n);
  inH[e] = 1;
  std::size_t hsize = 1;

  auto rebuild = [&]() {
    std::fill(inH.begin(), inH.end(), 0);
    std::vector<std::int64_t> c(gens.size(), 0);
    std::size_t total = 1;
    for (int ex : exps) total *= static_cast<std::size_t>(ipow(p, ex));
    for (std::size_t k = 0; k < total; ++k) {
      std::size_t x = k;
      Index elem = e;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto m = static_cast<std::size_t>(ipow(p, exps[i]));
        c[i] = static_cast<std::int64_t>(x % m);
        x /= m;
        elem = g.add(elem, g.times(c[i], gens[i]));
      }
      if (inH[elem]) throw Error("abelianDecompose: internal error, generators not independent");
      inH[elem] = 1;
      coords[elem] = c;
    }
    hsize = total;
  };

  while (hsize < n) {
    Index best = n;
    int bestF = -1;
    for (Index y = 0; y < n; ++y) {
      if (inH[y]) continue;
      int f = 0;
      Index z = y;
      while (!inH[z]) {
        z = g.times(p, z);
        ++f;
      }
      if (f > bestF) {
        bestF = f;
        best = y;
      }
    }
    const std::int64_t pf = ipow(p, bestF);
    Index z = g.times(pf, best);
    Index adj = best;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::int64_t t = coords[z][i];
      if (t % pf != 0) throw Error("abelianDecompose: internal error, non-divisible coordinate");
      std::int64_t m = ipow(p, exps[i]);
      adj = g.add(adj, g.times(mod(-(t / pf), m), gens[i]));
    }
    gens.push_back(adj);
    exps.push_back(bestF);
    rebuild();
  }

  AbelianDecomposition d;
  d.shape = PShape(p, exps);
  d.toVec.assign(n, d.shape.zero());
  d.fromVec.assign(n, 0);
  for (Index x = 0; x < n; ++x) {
    PVec v(d.shape, coords[x]);
    d.toVec[x] = v;
    d.fromVec[d.shape.indexOf(v)] = x;
  }
  return d;
}

std::int64_t rootOfUnity(int p, int e) {
  if (p == 2) throw Error("rootOfUnity: p = 2 is degenerate");
  if (!isPrime(p) || e < 1) throw Error("rootOfUnity: need an odd prime and e >= 1");
  const std::int64_t m = ipow(p, e);
  std::int64_t best = -1;
  // Teichmueller lifts of the generators of (Z/p)^*.
  for (std::int64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (std::int64_t k = 1; k < p - 1 && generator; ++k) generator = powMod(g, k, p) != 1;
    if (!generator) continue;
    std::int64_t xi = powMod(g, ipow(p, e - 1), m);
    if (best < 0 || xi < best) best = xi;
  }
  return best;
}

}  // namespace lazard
