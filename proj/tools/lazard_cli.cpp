// lazard: check, convert and enumerate Lie rings, post-Lie rings, groups and
// skew braces of prime-power order.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 refused
// (not Lazard, or over a size cap).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lazard/catalog.hpp"
#include "lazard/error.hpp"
#include "lazard/formats.hpp"

using namespace lazard;

namespace {

enum Exit { kOk = 0, kVerify = 1, kParse = 2, kRefused = 3 };

std::string yesNo(bool b) { return b ? "yes" : "no"; }

std::string orders(const SeriesResult& s) {
  std::string out;
  for (const Subset& t : s.terms) out += (out.empty() ? "" : " ") + std::to_string(t.size());
  return out.empty() ? "1" : out;
}

std::string classLine(int k, int p) {
  if (k < 0) return "not nilpotent";
  if (k < p) return "class " + std::to_string(k) + ", Lazard (p=" + std::to_string(p) + ")";
  return "class " + std::to_string(k) + ", not Lazard (needs class < p=" + std::to_string(p) + ")";
}

// "<(1,0),(0,1)>" from the greedy generators of an additive subgroup.
std::string spanStr(const PShape& s, const Subset& sub) {
  std::string out;
  for (const PVec& v : spanGenerators(s, sub)) out += (out.empty() ? "" : ",") + v.str();
  return "<" + out + ">";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

int failed(const std::string& what, const Report& r) {
  std::cout << what << ": FAILED\n";
  for (const std::string& f : r.failures) std::cout << "  " << f << '\n';
  return kVerify;
}

// ---------------------------------------------------------------- check

int checkLie(const LieRingSC& L) {
  std::cout << "Lie ring on " << L.shape().str() << ", order " << L.order() << '\n';
  if (Report r = verifyLie(L); !r.ok) return failed("Lie ring axioms", r);
  const SeriesResult s = lowerCentralSeries(L);
  std::cout << "Lie ring, " << classLine(s.nilClass, L.p()) << '\n';
  std::cout << "lower central series orders: " << orders(s) << '\n';
  std::cout << "abelian: " << yesNo(L.isAbelian()) << '\n';
  return kOk;
}

int checkGroup(const FinGroup& G) {
  std::cout << "group of order " << G.order() << '\n';
  try {
    verifyGroup(G);
  } catch (const Error& e) {
    Report r;
    r.fail(e.what());
    return failed("group axioms", r);
  }
  const SeriesResult s = lowerCentralSeries(G);
  const int p = G.prime();
  std::cout << "group, " << (p > 1 ? classLine(s.nilClass, p) : "trivial") << '\n';
  std::cout << "lower central series orders: " << orders(s) << '\n';
  std::cout << "abelian: " << yesNo(G.isAbelian()) << '\n';
  return kOk;
}

int checkPostLie(const PostLieRing& P) {
  const PShape& s = P.shape();
  std::cout << (P.isPreLie() ? "pre-Lie ring" : "post-Lie ring") << " on " << s.str() << ", order " << P.order() << '\n';
  if (Report r = verifyLie(P.base()); !r.ok) return failed("Lie ring axioms", r);
  if (Report r = verifyPostLie(P); !r.ok) return failed("post-Lie axioms", r);
  const int k = lClass(P);
  std::cout << (P.isPreLie() ? "pre-Lie ring" : "post-Lie ring") << ", L-" << classLine(k, P.p()) << '\n';
  std::cout << "L-series orders: " << orders(lSeries(P)) << '\n';
  std::cout << "base Lie ring class: " << lowerCentralSeries(P.base()).nilClass << '\n';
  std::cout << "left nilpotent: " << yesNo(leftSeries(P).nilpotent) << ", right nilpotent: " << yesNo(rightNilpotent(P))
            << ", square-free: " << yesNo(isSquareFree(P)) << '\n';
  const Substructures sub = substructures(P);
  std::cout << "Fix = " << spanStr(s, sub.fix) << '\n';
  std::cout << "Soc = " << spanStr(s, sub.soc) << '\n';
  std::cout << "Ann = " << spanStr(s, sub.ann) << '\n';
  if (k >= 0) {
    const CircBound b = circNilpotencyBound(P);
    std::cout << "adjoint Lie ring class: " << b.circClass << '\n';
  }
  return kOk;
}

int checkSkewBrace(const SkewBrace& B) {
  std::cout << "skew brace of order " << B.order() << '\n';
  if (Report r = verifySkewBrace(B); !r.ok) return failed("skew brace axioms", r);
  const int p = B.dot().prime();
  const int k = lClass(B);
  std::cout << "skew brace (" << (B.isBrace() ? "brace" : "non-abelian additive group") << "), L-"
            << (p > 1 ? classLine(k, p) : "class 0") << '\n';
  std::cout << "L-series orders: " << orders(lSeries(B)) << '\n';
  std::cout << "additive group class: " << lowerCentralSeries(B.dot()).nilClass
            << ", multiplicative group class: " << lowerCentralSeries(B.circ()).nilClass << '\n';
  std::cout << "left nilpotent: " << yesNo(leftSeries(B).nilpotent) << ", right nilpotent: " << yesNo(rightNilpotent(B))
            << ", square-free: " << yesNo(isSquareFree(B)) << '\n';
  const Substructures sub = substructures(B);
  std::cout << "Fix = " << sub.fix.str() << '\n';
  std::cout << "Soc = " << sub.soc.str() << '\n';
  std::cout << "Ann = " << sub.ann.str() << '\n';
  return kOk;
}

int cmdCheck(const std::string& path) {
  const StructureFile f = readStructureFile(path);
  switch (f.kind) {
    case FileKind::Lie: return checkLie(f.lie);
    case FileKind::PostLie: return checkPostLie(f.postLie);
    case FileKind::Group: return checkGroup(f.group);
    case FileKind::SkewBrace: return checkSkewBrace(f.brace);
  }
  return kOk;
}

// ---------------------------------------------------------------- convert

PostLieImage toPostLie(const StructureFile& f) {
  if (Report r = verifySkewBrace(f.brace); !r.ok) throw TheoremViolation("input is not a skew brace: " + r.str());
  return f.carrier ? constructL(f.brace, &*f.carrier) : constructL(f.brace);
}

int cmdConvert(const std::string& direction, const std::string& path, const std::string& out) {
  const StructureFile f = readStructureFile(path);
  auto wrongKind = [&] {
    std::cerr << "convert " << direction << " does not accept a " << fileKindName(f.kind) << " file\n";
    return kParse;
  };
  if (direction == "to-brace") {
    PostLieRing P;
    if (f.kind == FileKind::PostLie)
      P = f.postLie;
    else if (f.kind == FileKind::Lie)
      P = PostLieRing(f.lie);
    else
      return wrongKind();
    if (Report r = verifyPostLie(P); !r.ok) return failed("post-Lie axioms", r);
    emit(formatSkewBrace(constructS(P), &P.shape()), out);
  } else if (direction == "to-postlie") {
    if (f.kind != FileKind::SkewBrace) return wrongKind();
    emit(formatPostLie(toPostLie(f).ring), out);
  } else if (direction == "to-group") {
    if (f.kind != FileKind::Lie) return wrongKind();
    if (Report r = verifyLie(f.lie); !r.ok) return failed("Lie ring axioms", r);
    emit(formatGroup(laz(f.lie), &f.lie.shape()), out);
  } else if (direction == "to-lie") {
    if (f.kind != FileKind::Group) return wrongKind();
    const LieRingTable T = lazInv(f.group);
    if (!f.carrier) {
      emit(formatLie(decomposeLie(T).sc), out);
    } else {
      AbelianDecomposition iso{*f.carrier, {}, {}};
      for (Index x = 0; x < T.n; ++x) {
        iso.toVec.push_back(f.carrier->at(x));
        iso.fromVec.push_back(x);
      }
      emit(formatLie(decomposeLie(T, std::move(iso)).sc), out);
    }
  } else {
    std::cerr << "unknown direction '" << direction << "'\n";
    return kParse;
  }
  return kOk;
}

// ---------------------------------------------------------------- roundtrip

int cmdRoundtrip(const std::string& path) {
  const StructureFile f = readStructureFile(path);
  bool ok = true;
  switch (f.kind) {
    case FileKind::Lie: {
      const LieRingTable T = toTable(f.lie);
      ok = lazInv(laz(f.lie)) == T;
      std::cout << "Laz^-1(Laz(L)) = L: " << yesNo(ok) << '\n';
      break;
    }
    case FileKind::Group: {
      const LieRingTable T = lazInv(f.group);
      ok = laz(T, std::max(1, lowerCentralSeries(f.group).nilClass)) == f.group;
      std::cout << "Laz(Laz^-1(G)) = G: " << yesNo(ok) << '\n';
      break;
    }
    case FileKind::PostLie: {
      const PostLieRing& P = f.postLie;
      const SkewBrace B = constructS(P);
      const PostLieImage L = constructL(B, &P.shape());
      ok = L.ring == P;
      std::cout << "L(S(P)) = P: " << yesNo(ok) << '\n';
      const bool omega = verifyOmegaIsomorphism(B, L).ok;
      std::cout << "Omega is an isomorphism onto the adjoint group: " << yesNo(omega) << '\n';
      ok = ok && omega;
      break;
    }
    case FileKind::SkewBrace: {
      const PostLieImage L = toPostLie(f);
      ok = relabel(constructS(L.ring), L.iso.fromVec) == f.brace;
      std::cout << "S(L(B)) = B: " << yesNo(ok) << '\n';
      const bool omega = verifyOmegaIsomorphism(f.brace, L).ok;
      std::cout << "Omega is an isomorphism onto the adjoint group: " << yesNo(omega) << '\n';
      ok = ok && omega;
      break;
    }
  }
  return ok ? kOk : kVerify;
}

// ---------------------------------------------------------------- root-diff

int cmdRootDiff(const std::string& path, const std::string& out) {
  const StructureFile f = readStructureFile(path);
  SkewBrace B;
  std::optional<PShape> carrier = f.carrier;
  if (f.kind == FileKind::SkewBrace) {
    B = f.brace;
  } else if (f.kind == FileKind::PostLie) {
    B = constructS(f.postLie);
    carrier = f.postLie.shape();
  } else {
    std::cerr << "root-diff needs a skewbrace or postlie file\n";
    return kParse;
  }
  const PostLieImage L = carrier ? constructL(B, &*carrier) : constructL(B);
  const std::vector<Index> rd = rootDiffTriangle(B);
  const PShape& s = L.ring.shape();
  const Index n = B.order();
  PostLieRing R(L.ring.base());
  for (int i = 0; i < s.rank(); ++i)
    for (int j = 0; j < s.rank(); ++j) {
      const Index a = L.iso.fromVec[s.gen(i).index()], b = L.iso.fromVec[s.gen(j).index()];
      R.setTriangle(i, j, L.iso.toVec[rd[static_cast<std::size_t>(a) * n + b]]);
    }
  const bool same = R == L.ring;
  std::ostringstream os;
  os << "# root-of-unity triangle, xi = " << rootOfUnity(s.p(), s.maxExp()) << " mod " << s.exponent() << '\n'
     << "# agrees with the back-to-Lie construction: " << yesNo(same) << '\n'
     << formatPostLie(R);
  emit(os.str(), out);
  std::cerr << "root-diff agrees with back-to-Lie: " << yesNo(same) << '\n';
  return same ? kOk : kVerify;
}

// ---------------------------------------------------------------- bch-words

int cmdBchWords(int c, const std::string& out, bool verify) {
  if (c < 1 || c > kMaxWordsClass) throw CapacityError("bch-words: class must lie in [1, " + std::to_string(kMaxWordsClass) + "]");
  const InverseWords& w = inverseWords(c);
  emit(exportBch(bchSeries(c)) + exportGroupWord(w.P, "P") + (c >= 2 ? exportGroupWord(w.Q, "Q") : ""), out);
  if (!verify) return kOk;
  const LyndonBasis& b = LyndonBasis::get(c);
  const FreeLieElem sum = FreeLieElem::basis(c, b.find({0})) + FreeLieElem::basis(c, b.find({1}));
  bool ok = b.project(evalGroupWord(w.P).log()) == sum;
  if (c >= 2) ok = ok && b.project(evalGroupWord(w.Q).log()) == FreeLieElem::basis(c, b.find({0, 1}));
  ok = ok && bchSeries(c) == bchByLogExp(c);
  std::cerr << "self-inversion at class " << c << ": " << (ok ? "ok" : "FAILED") << '\n';
  return ok ? kOk : kVerify;
}

// ---------------------------------------------------------------- enumerate

PShape parseShapeArg(const std::string& arg) {
  // "p:e1,e2,..."
  const auto colon = arg.find(':');
  if (colon == std::string::npos) throw ParseError(0, "shape must look like p:e1,e2,...");
  std::vector<int> e;
  std::stringstream ss(arg.substr(colon + 1));
  try {
    for (std::string t; std::getline(ss, t, ',');) e.push_back(std::stoi(t));
    return PShape(std::stoi(arg.substr(0, colon)), e);
  } catch (const std::exception& x) {
    throw ParseError(0, "bad shape '" + arg + "': " + x.what());
  }
}

struct EnumerateOptions {
  std::string shape;
  std::string groupFile;
  std::string method = "hol";
  std::string outDir;
  bool postLie = false;
  bool isoDedup = false;
  bool force = false;
  std::uint64_t maxOrder = 243;
};

int cmdEnumerate(const EnumerateOptions& o) {
  std::optional<PShape> shape;
  FinGroup A;
  if (!o.shape.empty()) {
    shape = parseShapeArg(o.shape);
    A = abelianGroup(*shape);
  } else {
    const StructureFile f = readStructureFile(o.groupFile);
    if (f.kind != FileKind::Group) throw ParseError(0, "enumerate needs a group file");
    verifyGroup(f.group);
    A = f.group;
    shape = f.carrier;
  }
  const int p = A.prime();
  if (p < 3) throw NotLazardError("enumerate: the order must be a power of an odd prime");
  int k = 0;
  for (Index n = A.order(); n > 1; n /= p) ++k;
  if (A.order() > o.maxOrder)
    throw CapacityError("order " + std::to_string(A.order()) + " exceeds --max-order " + std::to_string(o.maxOrder));
  if (k >= p && !o.force)
    throw NotLazardError("order " + std::to_string(p) + "^" + std::to_string(k) +
                         ": the skew brace / pre-Lie bijection is stated for order p^k with k<p (use --force to list the Lazard ones)");

  bool ok = true;
  std::vector<SkewBrace> braces;
  if (o.method == "lambda" || o.method == "both") braces = enumerateBracesLambda(A, o.force);
  if (o.method == "hol" || o.method == "both") {
    std::vector<SkewBrace> hol = enumerateBracesHol(A, o.force);
    if (o.method == "both") {
      std::vector<std::vector<Index>> x, y;
      for (const SkewBrace& B : braces) x.push_back(braceKey(B));
      for (const SkewBrace& B : hol) y.push_back(braceKey(B));
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      const bool agree = x == y;
      std::cout << "lambda search: " << braces.size() << ", holomorph search: " << hol.size() << ", agree: " << yesNo(agree) << '\n';
      ok = ok && agree;
    }
    braces = std::move(hol);
  }
  std::cout << "Lazard skew braces on the given group: " << braces.size() << '\n';
  if (o.isoDedup) std::cout << "up to isomorphism: " << isoClasses(braces).size() << '\n';

  if (o.postLie) {
    if (!shape || !A.isAbelian()) throw ParseError(0, "--postlie needs an abelian group given by --shape or a carrier clause");
    const std::vector<PostLieRing> sc = enumeratePreLieSC(*shape, o.force);
    const std::vector<PostLieRing> aff = enumeratePreLieAff(*shape, o.force);
    const bool agree = sc == aff;
    std::cout << "pre-Lie rings, structure-constant search: " << sc.size() << ", aff search: " << aff.size()
              << ", agree: " << yesNo(agree) << '\n';
    const Pairing pr = pairCatalogs(*shape, braces, sc);
    std::cout << "bijection through S and L: " << yesNo(pr.bijective) << '\n';
    for (const std::string& msg : pr.problems) std::cout << "  " << msg << '\n';
    ok = ok && agree && pr.bijective && braces.size() == sc.size();
  }
  if (!o.outDir.empty()) {
    std::filesystem::create_directories(o.outDir);
    for (std::size_t i = 0; i < braces.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "brace_%04zu.skb", i);
      emit(formatSkewBrace(braces[i], shape ? &*shape : nullptr), (std::filesystem::path(o.outDir) / name).string());
    }
  }
  return ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lazard correspondence between post-Lie rings and skew braces of prime-power order"};
  app.require_subcommand(1);
  app.fallthrough();
  bool force = false;
  app.add_flag("--force", force, "Lift the desk-scale size caps");

  std::string path, out, direction;
  auto* check = app.add_subcommand("check", "Verify a structure file and report its invariants");
  check->add_option("file", path, "Structure file")->required();

  auto* convert = app.add_subcommand("convert", "Apply S (to-brace), L (to-postlie), Laz (to-group) or Laz^-1 (to-lie)");
  convert->add_option("direction", direction, "to-brace | to-postlie | to-group | to-lie")
      ->required()
      ->check(CLI::IsMember({"to-brace", "to-postlie", "to-group", "to-lie"}));
  convert->add_option("file", path, "Structure file")->required();
  convert->add_option("-o,--output", out, "Output file (default stdout)");

  int cls = 4;
  bool verifyWords = false;
  auto* words = app.add_subcommand("bch-words", "Export the BCH series and the inverse words P, Q");
  words->add_option("-c,--class", cls, "Truncation class, at most 6");
  words->add_option("-o,--output", out, "Output file (default stdout)");
  words->add_flag("--verify", verifyWords, "Re-check self-inversion of the exported words");

  EnumerateOptions eo;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate Lazard skew braces on a group and pair them with pre-Lie rings");
  auto* shapeOpt = enumerate->add_option("--shape", eo.shape, "Abelian group as p:e1,e2,...");
  enumerate->add_option("--group", eo.groupFile, "Group file")->excludes(shapeOpt);
  enumerate->add_option("--method", eo.method, "hol | lambda | both")->check(CLI::IsMember({"hol", "lambda", "both"}));
  enumerate->add_flag("--postlie", eo.postLie, "Also enumerate pre-Lie rings and check the bijection");
  enumerate->add_flag("--iso-dedup", eo.isoDedup, "Report the number of isomorphism classes");
  enumerate->add_option("--max-order", eo.maxOrder, "Refuse larger groups");
  enumerate->add_option("--out-dir", eo.outDir, "Write every brace to this directory");

  auto* rootDiff = app.add_subcommand("root-diff", "Recover the triangle product from lambda through roots of unity");
  rootDiff->add_option("file", path, "Skew brace or post-Lie file")->required();
  rootDiff->add_option("-o,--output", out, "Output file (default stdout)");

  auto* roundtrip = app.add_subcommand("roundtrip", "Check that the two constructions are mutually inverse on a file");
  roundtrip->add_option("file", path, "Structure file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*check) return cmdCheck(path);
    if (*convert) return cmdConvert(direction, path, out);
    if (*words) return cmdBchWords(cls, out, verifyWords);
    if (*enumerate) {
      if (eo.shape.empty() && eo.groupFile.empty()) throw ParseError(0, "enumerate needs --shape or --group");
      eo.force = force;
      return cmdEnumerate(eo);
    }
    if (*rootDiff) return cmdRootDiff(path, out);
    if (*roundtrip) return cmdRoundtrip(path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const NotLazardError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const CapacityError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const Error& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerify;
  }
  return kOk;
}
