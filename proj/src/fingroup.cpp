#include "lazard/fingroup.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace lazard {

void checkCapacity(std::uint64_t n, bool force, const std::string& what) {
  if (n > kSoftCap && !force)
    throw CapacityError(what + ": order " + std::to_string(n) + " exceeds the soft cap " + std::to_string(kSoftCap) + " (use force)");
}

// ---------------------------------------------------------------- Subset

Subset Subset::all(Index n) {
  Subset s(n);
  std::fill(s.mem_.begin(), s.mem_.end(), 1);
  s.count_ = n;
  return s;
}

Subset Subset::of(Index n, std::span<const Index> elems) {
  Subset s(n);
  for (Index x : elems) s.insert(x);
  return s;
}

void Subset::insert(Index x) {
  if (!mem_[x]) {
    mem_[x] = 1;
    ++count_;
  }
}

std::vector<Index> Subset::elements() const {
  std::vector<Index> v;
  v.reserve(count_);
  for (Index i = 0; i < universe(); ++i)
    if (mem_[i]) v.push_back(i);
  return v;
}

bool Subset::subsetOf(const Subset& o) const {
  for (Index i = 0; i < universe(); ++i)
    if (mem_[i] && !o.mem_[i]) return false;
  return true;
}

Subset Subset::intersect(const Subset& o) const {
  Subset s(universe());
  for (Index i = 0; i < universe(); ++i)
    if (mem_[i] && o.mem_[i]) s.insert(i);
  return s;
}

std::string Subset::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Index i = 0; i < universe(); ++i)
    if (mem_[i]) {
      os << (first ? "" : ",") << i;
      first = false;
    }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------- FinGroup

FinGroup::FinGroup(Index n, std::vector<Index> table, Index identity) : n_(n), e_(identity), t_(std::move(table)) {
  if (n == 0 || t_.size() != static_cast<std::size_t>(n) * n) throw Error("group table is not n x n");
  if (identity >= n) throw Error("identity index out of range");
  std::vector<char> seen(n);
  for (Index a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Index b = 0; b < n; ++b) {
      Index c = mul(a, b);
      if (c >= n) throw Error("group table entry out of range");
      if (seen[c]) throw Error("group table row " + std::to_string(a) + " is not a permutation");
      seen[c] = 1;
    }
  }
  for (Index b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Index a = 0; a < n; ++a) {
      Index c = mul(a, b);
      if (seen[c]) throw Error("group table column " + std::to_string(b) + " is not a permutation");
      seen[c] = 1;
    }
  }
  for (Index a = 0; a < n; ++a)
    if (mul(e_, a) != a || mul(a, e_) != a) throw Error("element " + std::to_string(e_) + " is not an identity");
  inv_.assign(n, 0);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (mul(a, b) == e_) {
        inv_[a] = b;
        break;
      }
  for (Index a = 0; a < n; ++a) exp_ = std::lcm(exp_, static_cast<std::int64_t>(elementOrder(a)));
}

Index FinGroup::pow(Index a, std::int64_t k) const {
  if (k < 0) {
    a = inv_[a];
    k = -k;
  }
  Index r = e_;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Index FinGroup::elementOrder(Index a) const {
  Index k = 1;
  for (Index x = a; x != e_; x = mul(x, a)) ++k;
  return k;
}


bool FinGroup::isAbelian() const {
  for (Index a = 0; a < n_; ++a)
    for (Index b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FinGroup::prime() const {
  if (n_ == 1) return 1;
  Index p = 2;
  while (n_ % p != 0) ++p;
  Index m = n_;
  while (m % p == 0) m /= p;
  return m == 1 ? static_cast<int>(p) : 0;
}

std::vector<Index> FinGroup::generators() const {
  std::vector<Index> gens;
  Subset s = Subset::of(n_, std::array<Index, 1>{e_});
  for (Index x = 0; x < n_ && s.size() < n_; ++x) {
    if (s.contains(x)) continue;
    gens.push_back(x);
    s = closure(*this, gens);
  }
  return gens;
}

bool FinGroup::isAssociative(std::array<Index, 3>* witness) const {
  for (Index a : generators())
    for (Index x = 0; x < n_; ++x) {
      const Index xa = mul(x, a);
      for (Index y = 0; y < n_; ++y)
        if (mul(xa, y) != mul(x, mul(a, y))) {
          if (witness) *witness = {x, a, y};
          return false;
        }
    }
  return true;
}

bool FinGroup::isAssociativeExhaustive() const {
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      for (Index c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

void verifyGroup(const FinGroup& g) {
  std::array<Index, 3> w{};
  if (!g.isAssociative(&w))
    throw Error("table is not associative at (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")");
}

Subset closure(const FinGroup& g, std::span<const Index> gens) {
  Subset s(g.order());
  std::vector<Index> queue{g.identity()};
  s.insert(g.identity());
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Index x : gens) {
      Index y = g.mul(queue[k], x);
      if (!s.contains(y)) {
        s.insert(y);
        queue.push_back(y);
      }
    }
  return s;
}

std::vector<Subset> allSubgroups(const FinGroup& g) {
  std::vector<Subset> out{closure(g, std::vector<Index>{})};
  std::set<std::vector<Index>> seen{out[0].elements()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto gens = subgroupGenerators(g, out[k]);
    for (Index x = 0; x < g.order(); ++x) {
      if (out[k].contains(x)) continue;
      gens.push_back(x);
      Subset h = closure(g, gens);
      gens.pop_back();
      if (seen.insert(h.elements()).second) out.push_back(std::move(h));
    }
  }
  return out;
}

const char* idealKindName(IdealKind k) {
  switch (k) {
    case IdealKind::NotClosed: return "not closed";
    case IdealKind::Sub: return "substructure";
    case IdealKind::LeftIdeal: return "left ideal";
    case IdealKind::StrongLeftIdeal: return "strong left ideal";
    case IdealKind::Ideal: return "ideal";
  }
  return "?";
}

bool isNormal(const FinGroup& g, const Subset& h) {
  const auto gens = g.generators();
  for (Index x : h.elements())
    for (Index a : gens)
      if (!h.contains(g.mul(g.mul(g.inv(a), x), a))) return false;
  return true;
}

Subset commutatorSubgroup(const FinGroup& g, const Subset& a, const Subset& b) {
  Subset vals(g.order());
  const auto be = b.elements();
  for (Index x : a.elements())
    for (Index y : be) vals.insert(g.comm(x, y));
  return closure(g, vals.elements());
}

std::vector<Index> subgroupGenerators(const FinGroup& g, const Subset& h) {
  std::vector<Index> gens;
  Subset s = Subset::of(g.order(), std::array<Index, 1>{g.identity()});
  for (Index x : h.elements()) {
    if (s.size() == h.size()) break;
    if (s.contains(x)) continue;
    gens.push_back(x);
    s = closure(g, gens);
  }
  return gens;
}

Subset Filtration::term(int i) const {
  if (i <= 1) return terms.empty() ? Subset::of(universe, std::array<Index, 1>{zero}) : terms[0];
  if (i - 1 < length()) return terms[i - 1];
  return Subset::of(universe, std::array<Index, 1>{zero});
}

Filtration SeriesResult::filtration() const {
  if (!nilpotent) throw NotLazardError("series does not reach zero: not nilpotent");
  Filtration f;
  f.terms = terms;
  f.universe = universe;
  f.zero = zero;
  return f;
}

SeriesResult lowerCentralSeries(const FinGroup& g) {
  SeriesResult r;
  r.universe = g.order();
  r.zero = g.identity();
  const Subset all = Subset::all(g.order());
  Subset cur = all;
  int i = 1;
  while (true) {
    if (cur.size() == 1) {
      r.nilpotent = true;
      r.nilClass = i - 1;
      return r;
    }
    r.terms.push_back(cur);
    Subset next = commutatorSubgroup(g, all, cur);
    if (next == cur) return r;
    cur = std::move(next);
    ++i;
  }
}

SeriesResult canonicalGroupFiltration(const FinGroup& g) { return lowerCentralSeries(g); }

void validateGroupFiltration(const FinGroup& g, const Filtration& f) {
  if (f.length() > 0 && f.terms[0].size() != g.order()) throw Error("filtration must start with the whole group");
  std::vector<std::vector<Index>> gens;
  for (int i = 0; i < f.length(); ++i) {
    if (!isNormal(g, f.terms[i])) throw Error("filtration term " + std::to_string(i + 1) + " is not normal");
    if (i > 0 && !f.terms[i].subsetOf(f.terms[i - 1])) throw Error("filtration is not descending at " + std::to_string(i + 1));
    if (f.terms[i].size() == 1) throw Error("filtration stores a trivial term");
    gens.push_back(subgroupGenerators(g, f.terms[i]));
  }
  for (int i = 1; i <= f.length(); ++i)
    for (int j = i; j <= f.length(); ++j) {
      const Subset target = f.term(i + j);
      for (Index x : gens[i - 1])
        for (Index y : gens[j - 1])
          if (!target.contains(g.comm(x, y)))
            throw Error("[G_" + std::to_string(i) + ", G_" + std::to_string(j) + "] is not contained in G_" + std::to_string(i + j));
    }
}

Index groupRoot(const FinGroup& g, Index x, std::int64_t n) {
  const std::int64_t e = g.exponent();
  if (std::gcd(mod(n, e), e) != 1)
    throw Error("groupRoot: " + std::to_string(n) + " is not coprime to the group exponent " + std::to_string(e));
  return e == 1 ? x : g.pow(x, invMod(mod(n, e), e));
}

Index ratPow(const FinGroup& g, Index x, const PScalar& q) {
  const std::int64_t e = g.exponent();
  if (e == 1) return x;
  if (std::gcd(q.den(), e) != 1) throw NotLazardError("not p-divisible: exponent " + q.str());
  return g.pow(x, q.residue(e));
}

}  // namespace lazard
