#include "lazard/freelie.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace lazard {

PScalar toScalar(const Rational& q) {
  using boost::multiprecision::cpp_int;
  const cpp_int n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  const cpp_int lim = cpp_int(INT64_MAX);
  if (n > lim || n < -lim || d > lim) throw Error("coefficient " + q.str() + " does not fit in 64 bits");
  return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
}

// ---------------------------------------------------------------- AssocElem

// Words of length L occupy indices [2^L - 1, 2^{L+1} - 1); letter k is bit k.
std::size_t AssocElem::indexOf(const Word& w) {
  std::size_t bits = 0;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k]) bits |= std::size_t{1} << k;
  return ((std::size_t{1} << w.size()) - 1) + bits;
}

Word AssocElem::wordAt(std::size_t i) {
  int len = 0;
  while (i + 1 >= (std::size_t{2} << len)) ++len;
  std::size_t bits = i - ((std::size_t{1} << len) - 1);
  Word w(len);
  for (int k = 0; k < len; ++k) w[k] = static_cast<int>((bits >> k) & 1);
  return w;
}

static int lengthOf(std::size_t i) {
  int len = 0;
  while (i + 1 >= (std::size_t{2} << len)) ++len;
  return len;
}

AssocElem::AssocElem(int c) : c_(c), coef_((std::size_t{2} << c) - 1) {
  if (c < 0 || c > kMaxBchClass) throw Error("free algebra class must lie in [0, " + std::to_string(kMaxBchClass) + "]");
}

AssocElem AssocElem::one(int c) {
  AssocElem a(c);
  a.coef_[0] = 1;
  return a;
}

AssocElem AssocElem::letter(int c, int l) { return word(c, Word{l}); }

AssocElem AssocElem::word(int c, const Word& w) {
  AssocElem a(c);
  if (static_cast<int>(w.size()) <= c) a.coef_[indexOf(w)] = 1;
  return a;
}

bool AssocElem::isZero() const {
  return std::all_of(coef_.begin(), coef_.end(), [](const Rational& q) { return q == 0; });
}

AssocElem AssocElem::degreePart(int m) const {
  AssocElem r(c_);
  if (m < 0 || m > c_) return r;
  for (std::size_t i = (std::size_t{1} << m) - 1; i < (std::size_t{2} << m) - 1; ++i) r.coef_[i] = coef_[i];
  return r;
}

AssocElem& AssocElem::operator+=(const AssocElem& o) {
  if (o.c_ != c_) throw Error("free algebra class mismatch");
  for (std::size_t i = 0; i < coef_.size(); ++i)
    if (o.coef_[i] != 0) coef_[i] += o.coef_[i];
  return *this;
}

AssocElem& AssocElem::operator-=(const AssocElem& o) {
  if (o.c_ != c_) throw Error("free algebra class mismatch");
  for (std::size_t i = 0; i < coef_.size(); ++i)
    if (o.coef_[i] != 0) coef_[i] -= o.coef_[i];
  return *this;
}

AssocElem& AssocElem::operator*=(const Rational& q) {
  for (auto& x : coef_)
    if (x != 0) x *= q;
  return *this;
}

AssocElem operator*(const AssocElem& a, const AssocElem& b) {
  if (a.c_ != b.c_) throw Error("free algebra class mismatch");
  AssocElem r(a.c_);
  std::vector<std::size_t> nzb;
  for (std::size_t j = 0; j < b.coef_.size(); ++j)
    if (b.coef_[j] != 0) nzb.push_back(j);
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    const int li = lengthOf(i);
    const std::size_t bi = i - ((std::size_t{1} << li) - 1);
    for (std::size_t j : nzb) {
      const int lj = lengthOf(j);
      if (li + lj > a.c_) break;
      const std::size_t bj = j - ((std::size_t{1} << lj) - 1);
      r.coef_[((std::size_t{1} << (li + lj)) - 1) + (bi | (bj << li))] += a.coef_[i] * b.coef_[j];
    }
  }
  return r;
}

AssocElem AssocElem::exp() const {
  if (coef_[0] != 0) throw Error("exp needs zero constant term");
  AssocElem r = one(c_), term = one(c_);
  for (int k = 1; k <= c_; ++k) {
    term = term * *this;
    term *= Rational(1, k);
    r += term;
  }
  return r;
}

AssocElem AssocElem::log() const {
  if (coef_[0] != 1) throw Error("log needs constant term 1");
  AssocElem n = *this - one(c_);
  AssocElem r(c_), term = one(c_);
  for (int k = 1; k <= c_; ++k) {
    term = term * n;
    r += Rational(k % 2 == 1 ? 1 : -1, k) * term;
  }
  return r;
}

AssocElem commutator(const AssocElem& a, const AssocElem& b) { return a * b - b * a; }

AssocElem groupPower(const AssocElem& u, const Rational& q) { return (q * u.log()).exp(); }

AssocElem groupCommutator(const AssocElem& u, const AssocElem& v) {
  return groupPower(u, -1) * groupPower(v, -1) * u * v;
}

// ---------------------------------------------------------------- Lyndon basis

namespace {

bool isLyndon(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end())) return false;
  return !w.empty();
}

// Duval's generation of Lyndon words of length <= n over {0, 1}.
std::vector<Word> lyndonWords(int n) {
  std::vector<Word> out;
  Word w{-1};
  while (!w.empty()) {
    ++w.back();
    out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == 1) w.pop_back();
  }
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

LyndonBasis::LyndonBasis(int c) : c_(c) {
  if (c < 1 || c > kMaxBchClass) throw Error("Lyndon basis class must lie in [1, " + std::to_string(kMaxBchClass) + "]");
  for (const Word& w : lyndonWords(c)) {
    LyndonElem e;
    e.word = w;
    e.degree = static_cast<int>(w.size());
    if (w.size() == 1) {
      e.letter = w[0];
      polys_.push_back(AssocElem::letter(c, w[0]));
    } else {
      for (std::size_t k = 1; k < w.size(); ++k) {
        Word v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        if (isLyndon(v)) {
          e.left = find(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
          e.right = find(v);
          break;
        }
      }
      if (e.left < 0 || e.right < 0) throw Error("Lyndon basis: standard factorisation missing");
      polys_.push_back(commutator(polys_[e.left], polys_[e.right]));
    }
    if (polys_.back().at(w) != 1) throw Error("Lyndon basis: leading coefficient is not 1");
    elems_.push_back(std::move(e));
  }
  const int n = size();
  table_.assign(static_cast<std::size_t>(n) * n, FreeLieElem(c, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (degree(i) + degree(j) <= c) table_[static_cast<std::size_t>(i) * n + j] = project(commutator(polys_[i], polys_[j]));
}

const LyndonBasis& LyndonBasis::get(int c) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<LyndonBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[c];
  if (!slot) slot = std::make_unique<LyndonBasis>(c);
  return *slot;
}

std::vector<int> LyndonBasis::dims() const {
  std::vector<int> d(c_, 0);
  for (const auto& e : elems_) ++d[e.degree - 1];
  return d;
}

int LyndonBasis::find(const Word& w) const {
  for (int i = 0; i < size(); ++i)
    if (elems_[i].word == w) return i;
  return -1;
}

std::string LyndonBasis::bracketString(int i, char a, char b) const {
  const LyndonElem& e = elems_[i];
  if (e.letter >= 0) return std::string(1, e.letter == 0 ? a : b);
  return "[" + bracketString(e.left, a, b) + "," + bracketString(e.right, a, b) + "]";
}

const FreeLieElem& LyndonBasis::bracket(int i, int j) const { return table_[static_cast<std::size_t>(i) * size() + j]; }

FreeLieElem LyndonBasis::project(const AssocElem& a) const {
  if (a.classBound() != c_) throw Error("projection: class mismatch");
  FreeLieElem out(c_, size());
  AssocElem rest = a;
  if (rest.atIndex(0) != 0) throw Error("projection: constant term is not a Lie element");
  for (int m = 1; m <= c_; ++m) {
    // Words of one length are visited in increasing lexicographic order; the
    // smallest surviving word must be Lyndon since P_w = w + larger words.
    std::vector<Word> words;
    for (std::size_t k = (std::size_t{1} << m) - 1; k < (std::size_t{2} << m) - 1; ++k) words.push_back(AssocElem::wordAt(k));
    std::sort(words.begin(), words.end());
    for (const Word& w : words) {
      const Rational q = rest.at(w);
      if (q == 0) continue;
      const int i = find(w);
      if (i < 0) throw Error("projection: element is not a Lie polynomial");
      out[i] += q;
      rest -= q * polys_[i];
    }
  }
  return out;
}

// ---------------------------------------------------------------- FreeLieElem

FreeLieElem::FreeLieElem(int c) : c_(c), coef_(LyndonBasis::get(c).size()) {}

FreeLieElem FreeLieElem::basis(int c, int i) {
  FreeLieElem e(c);
  e.coef_[i] = 1;
  return e;
}

bool FreeLieElem::isZero() const {
  return std::all_of(coef_.begin(), coef_.end(), [](const Rational& q) { return q == 0; });
}

FreeLieElem FreeLieElem::degreePart(int m) const {
  FreeLieElem r(c_);
  const LyndonBasis& b = lyndon();
  for (int i = 0; i < size(); ++i)
    if (b.degree(i) == m) r.coef_[i] = coef_[i];
  return r;
}

FreeLieElem FreeLieElem::truncated(int c) const {
  FreeLieElem r(c);
  const LyndonBasis& from = lyndon();
  const LyndonBasis& to = LyndonBasis::get(c);
  for (int i = 0; i < size(); ++i) {
    if (coef_[i] == 0 || from.degree(i) > c) continue;
    r.coef_[to.find(from[i].word)] = coef_[i];
  }
  return r;
}

AssocElem FreeLieElem::toAssoc() const {
  AssocElem a(c_);
  const LyndonBasis& b = lyndon();
  for (int i = 0; i < size(); ++i)
    if (coef_[i] != 0) a += coef_[i] * b.poly(i);
  return a;
}

std::string FreeLieElem::str(char a, char b) const {
  std::string s;
  const LyndonBasis& basis = lyndon();
  for (int i = 0; i < size(); ++i) {
    if (coef_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coef_[i].str() + ")" + basis.bracketString(i, a, b);
  }
  return s.empty() ? "0" : s;
}

FreeLieElem& FreeLieElem::operator+=(const FreeLieElem& o) {
  if (o.c_ != c_) throw Error("free Lie class mismatch");
  for (int i = 0; i < size(); ++i)
    if (o.coef_[i] != 0) coef_[i] += o.coef_[i];
  return *this;
}

FreeLieElem& FreeLieElem::operator-=(const FreeLieElem& o) {
  if (o.c_ != c_) throw Error("free Lie class mismatch");
  for (int i = 0; i < size(); ++i)
    if (o.coef_[i] != 0) coef_[i] -= o.coef_[i];
  return *this;
}

FreeLieElem& FreeLieElem::operator*=(const Rational& q) {
  for (auto& x : coef_)
    if (x != 0) x *= q;
  return *this;
}

FreeLieElem bracket(const FreeLieElem& a, const FreeLieElem& b) {
  if (a.classBound() != b.classBound()) throw Error("free Lie class mismatch");
  const LyndonBasis& basis = a.lyndon();
  FreeLieElem r(a.classBound());
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < b.size(); ++j) {
      if (b[j] == 0 || basis.degree(i) + basis.degree(j) > a.classBound()) continue;
      r += (a[i] * b[j]) * basis.bracket(i, j);
    }
  }
  return r;
}

// ---------------------------------------------------------------- BCH

FreeLieElem bchSeries(int c) {
  if (c < 1 || c > kMaxBchClass) throw Error("bchSeries: class must lie in [1, " + std::to_string(kMaxBchClass) + "]");
  // Dynkin: sum over n and pairs (r_i, s_i) != (0, 0) of
  //   (-1)^{n-1}/n * 1/(sum r_i + s_i) * 1/prod(r_i! s_i!) * [x^r1 y^s1 ... x^rn y^sn]
  // with the word right-nested. Coefficients are first aggregated per word.
  std::map<Word, Rational> perWord;
  std::vector<Rational> fact(c + 1, Rational(1));
  for (int k = 1; k <= c; ++k) fact[k] = fact[k - 1] * k;

  Word w;
  auto rec = [&](auto&& self, int n, const Rational& weight) -> void {
    if (n > 0) {
      const int m = static_cast<int>(w.size());
      // A right-nested bracket ending in two equal letters vanishes.
      if (m == 1 || w[m - 1] != w[m - 2]) {
        Rational q = weight / Rational(n) / Rational(m);
        if (n % 2 == 0) q = -q;
        perWord[w] += q;
      }
    }
    const int left = c - static_cast<int>(w.size());
    for (int r = 0; r <= left; ++r)
      for (int s = 0; r + s <= left; ++s) {
        if (r + s == 0) continue;
        for (int k = 0; k < r; ++k) w.push_back(0);
        for (int k = 0; k < s; ++k) w.push_back(1);
        self(self, n + 1, weight / (fact[r] * fact[s]));
        w.resize(w.size() - static_cast<std::size_t>(r + s));
      }
  };
  rec(rec, 0, Rational(1));

  // Right-nested brackets, memoised on suffixes.
  std::map<Word, AssocElem> nested;
  auto rightNested = [&](auto&& self, const Word& v) -> const AssocElem& {
    auto it = nested.find(v);
    if (it != nested.end()) return it->second;
    AssocElem e = v.size() == 1 ? AssocElem::letter(c, v[0])
                                : commutator(AssocElem::letter(c, v[0]), self(self, Word(v.begin() + 1, v.end())));
    return nested.emplace(v, std::move(e)).first->second;
  };
  AssocElem sum(c);
  for (const auto& [word, q] : perWord)
    if (q != 0) sum += q * rightNested(rightNested, word);
  return LyndonBasis::get(c).project(sum);
}

FreeLieElem bchByLogExp(int c) {
  AssocElem z = (AssocElem::letter(c, 0).exp() * AssocElem::letter(c, 1).exp()).log();
  return LyndonBasis::get(c).project(z);
}

// ---------------------------------------------------------------- inverse words

GroupWord GroupWord::truncated(int c) const {
  GroupWord r;
  r.classBound = c;
  const LyndonBasis& from = LyndonBasis::get(classBound);
  const LyndonBasis& to = LyndonBasis::get(c);
  for (const Factor& f : factors)
    if (f.degree <= c) r.factors.push_back({to.find(from[f.basisIndex].word), f.degree, f.exponent});
  return r;
}

AssocElem commutatorElement(const LyndonBasis& basis, int i) {
  const int c = basis.classBound();
  auto all = evalBasis<AssocElem>(basis, AssocElem::letter(c, 0).exp(), AssocElem::letter(c, 1).exp(),
                                  [](const AssocElem& u, const AssocElem& v) { return groupCommutator(u, v); });
  return all[i];
}

AssocElem evalGroupWord(const GroupWord& w) {
  const int c = w.classBound;
  const LyndonBasis& basis = LyndonBasis::get(c);
  auto comms = evalBasis<AssocElem>(basis, AssocElem::letter(c, 0).exp(), AssocElem::letter(c, 1).exp(),
                                    [](const AssocElem& u, const AssocElem& v) { return groupCommutator(u, v); });
  AssocElem r = AssocElem::one(c);
  for (const auto& f : w.factors) r = r * groupPower(comms[f.basisIndex], f.exponent);
  return r;
}

namespace {

GroupWord peel(const LyndonBasis& basis, const std::vector<AssocElem>& comms, const FreeLieElem& target) {
  const int c = basis.classBound();
  GroupWord out;
  out.classBound = c;
  AssocElem cur = AssocElem::one(c);
  for (int m = 1; m <= c; ++m) {
    FreeLieElem diff = target - basis.project(cur.log());
    for (int i = 0; i < basis.size(); ++i)
      if (basis.degree(i) < m && diff[i] != 0) throw Error("inverse word derivation: lower degree residue");
    for (int i = 0; i < basis.size(); ++i) {
      if (basis.degree(i) != m || diff[i] == 0) continue;
      out.factors.push_back({i, m, diff[i]});
      cur = cur * groupPower(comms[i], diff[i]);
    }
  }
  return out;
}

}  // namespace

InverseWords deriveInverseWords(int c) {
  if (c < 1 || c > kMaxWordsClass) throw Error("deriveInverseWords: class must lie in [1, " + std::to_string(kMaxWordsClass) + "]");
  const LyndonBasis& basis = LyndonBasis::get(c);
  auto comms = evalBasis<AssocElem>(basis, AssocElem::letter(c, 0).exp(), AssocElem::letter(c, 1).exp(),
                                    [](const AssocElem& u, const AssocElem& v) { return groupCommutator(u, v); });
  FreeLieElem sum = FreeLieElem::basis(c, basis.find({0})) + FreeLieElem::basis(c, basis.find({1}));
  InverseWords w;
  w.P = peel(basis, comms, sum);
  if (c >= 2)
    w.Q = peel(basis, comms, FreeLieElem::basis(c, basis.find({0, 1})));
  else
    w.Q.classBound = c;
  return w;
}

const InverseWords& inverseWords(int c) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<InverseWords>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[c];
  if (!slot) slot = std::make_unique<InverseWords>(deriveInverseWords(c));
  return *slot;
}

// ---------------------------------------------------------------- text format

static std::string ratStr(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string exportBch(const FreeLieElem& bch) {
  const LyndonBasis& basis = bch.lyndon();
  std::ostringstream os;
  os << "#format bchwords 1\n#table BCH\n#class " << bch.classBound()
     << "\n#basis lyndon x<y standard-bracketing\n";
  for (int i = 0; i < bch.size(); ++i)
    if (bch[i] != 0) os << basis.degree(i) << '\t' << basis.bracketString(i) << '\t' << ratStr(bch[i]) << '\n';
  return os.str();
}

std::string exportGroupWord(const GroupWord& w, const std::string& name) {
  const LyndonBasis& basis = LyndonBasis::get(w.classBound);
  std::ostringstream os;
  os << "#format bchwords 1\n#table " << name << "\n#class " << w.classBound
     << "\n#basis lyndon g<h standard-bracketing\n#commutator [g,h]=g^-1*h^-1*g*h\n";
  for (const auto& f : w.factors)
    os << f.degree << '\t' << basis.bracketString(f.basisIndex, 'g', 'h') << '\t' << ratStr(f.exponent) << '\n';
  return os.str();
}

GroupWord parseGroupWord(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  GroupWord w;
  int lineNo = 0;
  std::vector<std::string> names;
  while (std::getline(is, line)) {
    ++lineNo;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("#class ", 0) == 0) {
        w.classBound = std::stoi(line.substr(7));
        if (w.classBound < 1 || w.classBound > kMaxBchClass) throw ParseError(lineNo, "class out of range");
        const LyndonBasis& basis = LyndonBasis::get(w.classBound);
        for (int i = 0; i < basis.size(); ++i) names.push_back(basis.bracketString(i, 'g', 'h'));
      }
      continue;
    }
    if (names.empty()) throw ParseError(lineNo, "factor before #class header");
    std::istringstream ls(line);
    int degree = 0;
    std::string word, q;
    if (!(ls >> degree >> word >> q)) throw ParseError(lineNo, "expected degree, word, exponent");
    auto it = std::find(names.begin(), names.end(), word);
    if (it == names.end()) throw ParseError(lineNo, "unknown bracket word " + word);
    const int idx = static_cast<int>(it - names.begin());
    if (LyndonBasis::get(w.classBound).degree(idx) != degree) throw ParseError(lineNo, "degree does not match word");
    Rational r;
    try {
      r = Rational(q);
    } catch (const std::exception&) {
      throw ParseError(lineNo, "bad rational " + q);
    }
    w.factors.push_back({idx, degree, r});
  }
  if (names.empty()) throw ParseError(lineNo, "missing #class header");
  return w;
}

}  // namespace lazard
