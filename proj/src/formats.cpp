#include "lazard/formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lazard/error.hpp"

namespace lazard {

namespace {

struct Line {
  int no = 0;
  std::vector<std::string> tok;
};

class Reader {
 public:
  explicit Reader(std::istream& in) {
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
      std::istringstream ls(raw);
      Line l{no, {}};
      for (std::string t; ls >> t;) l.tok.push_back(t);
      if (!l.tok.empty()) lines_.push_back(std::move(l));
    }
    lastNo_ = no;
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) throw ParseError(lastNo_, "unexpected end of file");
    return lines_[pos_];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  int lastNo_ = 0;
};

std::int64_t toInt(const Line& l, std::size_t k) {
  if (k >= l.tok.size()) throw ParseError(l.no, "missing integer");
  const std::string& s = l.tok[k];
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(l.no, "not an integer: '" + s + "'");
  return v;
}

void expectWord(const Line& l, std::size_t k, const char* w) {
  if (k >= l.tok.size() || l.tok[k] != w) throw ParseError(l.no, std::string("expected '") + w + "'");
}

// "<p> shape e1 ... er" starting at token k; consumes the rest of the line.
PShape readShape(const Line& l, std::size_t k) {
  const std::int64_t p = toInt(l, k);
  if (p < 2 || p > 1000 || !isPrime(p)) throw ParseError(l.no, "p must be a prime");
  expectWord(l, k + 1, "shape");
  std::vector<int> e;
  for (std::size_t t = k + 2; t < l.tok.size(); ++t) {
    const std::int64_t v = toInt(l, t);
    if (v < 1 || v > 30) throw ParseError(l.no, "exponent out of range");
    e.push_back(static_cast<int>(v));
  }
  try {
    return PShape(static_cast<int>(p), e);
  } catch (const Error& x) {
    throw ParseError(l.no, x.what());
  }
}

int readGenerator(const Line& l, std::size_t k, int rank) {
  const std::int64_t g = toInt(l, k);
  if (g < 1 || g > rank) throw ParseError(l.no, "generator index out of range");
  return static_cast<int>(g - 1);
}

PVec readCoords(const Line& l, std::size_t k, const PShape& s) {
  if (l.tok.size() != k + static_cast<std::size_t>(s.rank())) throw ParseError(l.no, "expected " + std::to_string(s.rank()) + " coordinates");
  std::vector<std::int64_t> c;
  for (int i = 0; i < s.rank(); ++i) c.push_back(toInt(l, k + i));
  return PVec(s, c);
}

FinGroup readTable(Reader& r, Index n, Index identity) {
  std::vector<Index> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a) {
    const Line& l = r.next();
    if (l.tok.size() != n) throw ParseError(l.no, "table row must have " + std::to_string(n) + " entries");
    for (Index b = 0; b < n; ++b) {
      const std::int64_t v = toInt(l, b);
      if (v < 0 || v >= static_cast<std::int64_t>(n)) throw ParseError(l.no, "table entry out of range");
      t.push_back(static_cast<Index>(v));
    }
  }
  return FinGroup(n, std::move(t), identity);
}

std::optional<PShape> readCarrier(const Line& l, std::size_t k, Index n) {
  if (k >= l.tok.size()) return std::nullopt;
  expectWord(l, k, "carrier");
  PShape s = readShape(l, k + 1);
  if (s.order() != n) throw ParseError(l.no, "carrier order differs from table order");
  return s;
}

Index readOrder(const Line& l, std::size_t k) {
  const std::int64_t n = toInt(l, k);
  if (n < 1 || n > 1000000) throw ParseError(l.no, "order out of range");
  return static_cast<Index>(n);
}

Index readIdentity(const Line& l, std::size_t k, Index n) {
  const std::int64_t e = toInt(l, k);
  if (e < 0 || e >= static_cast<std::int64_t>(n)) throw ParseError(l.no, "identity out of range");
  return static_cast<Index>(e);
}

std::string coords(const PVec& v) {
  std::string s;
  for (int i = 0; i < v.rank(); ++i) s += ' ' + std::to_string(v[i]);
  return s;
}

std::string shapeClause(const PShape& s) {
  std::string out = std::to_string(s.p()) + " shape";
  for (int e : s.exps()) out += ' ' + std::to_string(e);
  return out;
}

void writeTable(std::ostringstream& os, const FinGroup& G) {
  for (Index a = 0; a < G.order(); ++a) {
    for (Index b = 0; b < G.order(); ++b) os << (b ? " " : "") << G.mul(a, b);
    os << '\n';
  }
}

void writeBrackets(std::ostringstream& os, const LieRingSC& L) {
  for (int i = 0; i < L.rank(); ++i)
    for (int j = i + 1; j < L.rank(); ++j)
      if (!L.structure(i, j).isZero()) os << "bracket " << i + 1 << ' ' << j + 1 << coords(L.structure(i, j)) << '\n';
}

}  // namespace

const char* fileKindName(FileKind k) {
  switch (k) {
    case FileKind::Lie: return "lie";
    case FileKind::PostLie: return "postlie";
    case FileKind::Group: return "group";
    case FileKind::SkewBrace: return "skewbrace";
  }
  return "?";
}

StructureFile parseStructure(std::istream& in) {
  Reader r(in);
  const Line& v = r.next();
  expectWord(v, 0, "lazard-format");
  if (v.tok.size() != 2) throw ParseError(v.no, "expected 'lazard-format <version>'");
  if (toInt(v, 1) != kFormatVersion) throw ParseError(v.no, "unsupported format version");

  StructureFile f;
  const Line& h = r.next();
  const std::string& kind = h.tok[0];
  if (kind == "lie" || kind == "postlie") {
    const PShape s = readShape(h, 1);
    f.kind = kind == "lie" ? FileKind::Lie : FileKind::PostLie;
    LieRingSC L(s);
    std::vector<std::pair<int, PVec>> tri;
    while (!r.done()) {
      const Line& l = r.next();
      if (l.tok[0] == "bracket") {
        const int i = readGenerator(l, 1, s.rank()), j = readGenerator(l, 2, s.rank());
        if (i >= j) throw ParseError(l.no, "bracket lines need i < j");
        L.setBracket(i, j, readCoords(l, 3, s));
      } else if (l.tok[0] == "triangle" && f.kind == FileKind::PostLie) {
        const int i = readGenerator(l, 1, s.rank()), j = readGenerator(l, 2, s.rank());
        tri.emplace_back(i * s.rank() + j, readCoords(l, 3, s));
      } else {
        throw ParseError(l.no, "unexpected line '" + l.tok[0] + "'");
      }
    }
    if (f.kind == FileKind::Lie) {
      f.lie = std::move(L);
    } else {
      f.postLie = PostLieRing(L);
      for (const auto& [ij, val] : tri) f.postLie.setTriangle(ij / s.rank(), ij % s.rank(), val);
      f.lie = f.postLie.base();
    }
  } else if (kind == "group") {
    const Index n = readOrder(h, 1);
    expectWord(h, 2, "identity");
    const Index e = readIdentity(h, 3, n);
    f.kind = FileKind::Group;
    f.carrier = readCarrier(h, 4, n);
    f.group = readTable(r, n, e);
  } else if (kind == "skewbrace") {
    const Index n = readOrder(h, 1);
    f.kind = FileKind::SkewBrace;
    f.carrier = readCarrier(h, 2, n);
    FinGroup g[2];
    const char* names[2] = {"dot", "circ"};
    for (int k = 0; k < 2; ++k) {
      const Line& l = r.next();
      expectWord(l, 0, names[k]);
      expectWord(l, 1, "identity");
      if (l.tok.size() != 3) throw ParseError(l.no, "expected '<op> identity <e>'");
      g[k] = readTable(r, n, readIdentity(l, 2, n));
    }
    if (g[0].identity() != g[1].identity()) throw ParseError(h.no, "dot and circ identities differ");
    f.brace = SkewBrace(std::move(g[0]), std::move(g[1]));
  } else {
    throw ParseError(h.no, "unknown structure kind '" + kind + "'");
  }
  if (!r.done()) throw ParseError(r.peek().no, "trailing content");
  return f;
}

StructureFile parseStructure(const std::string& text) {
  std::istringstream in(text);
  return parseStructure(in);
}

StructureFile readStructureFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parseStructure(in);
}

std::string formatLie(const LieRingSC& L) {
  std::ostringstream os;
  os << "lazard-format " << kFormatVersion << "\nlie " << shapeClause(L.shape()) << '\n';
  writeBrackets(os, L);
  return os.str();
}

std::string formatPostLie(const PostLieRing& P) {
  std::ostringstream os;
  os << "lazard-format " << kFormatVersion << "\npostlie " << shapeClause(P.shape()) << '\n';
  writeBrackets(os, P.base());
  for (int i = 0; i < P.rank(); ++i)
    for (int j = 0; j < P.rank(); ++j)
      if (!P.triangle(i, j).isZero()) os << "triangle " << i + 1 << ' ' << j + 1 << coords(P.triangle(i, j)) << '\n';
  return os.str();
}

std::string formatGroup(const FinGroup& G, const PShape* carrier) {
  std::ostringstream os;
  os << "lazard-format " << kFormatVersion << "\ngroup " << G.order() << " identity " << G.identity();
  if (carrier) os << " carrier " << shapeClause(*carrier);
  os << '\n';
  writeTable(os, G);
  return os.str();
}

std::string formatSkewBrace(const SkewBrace& B, const PShape* carrier) {
  std::ostringstream os;
  os << "lazard-format " << kFormatVersion << "\nskewbrace " << B.order();
  if (carrier) os << " carrier " << shapeClause(*carrier);
  os << "\ndot identity " << B.dot().identity() << '\n';
  writeTable(os, B.dot());
  os << "circ identity " << B.circ().identity() << '\n';
  writeTable(os, B.circ());
  return os.str();
}

}  // namespace lazard
