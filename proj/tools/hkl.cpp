// hkl: parabolic KL polynomials for (B_N, A_{N-1}) from the command line.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hkl/ballot.hpp"
#include "hkl/binary_tree.hpp"
#include "hkl/hecke_module.hpp"
#include "hkl/linkpattern.hpp"
#include "hkl/render.hpp"
#include "hkl/verify.hpp"

using namespace hkl;
using nlohmann::json;

namespace {

struct Options {
  int n = 0;
  std::string kase = "A";
  int m = 1;
  std::string sign = "+";
  std::string algo = "hecke";
  std::string format = "text";
  std::string out;
};

int maxN() {
  if (const char* s = std::getenv("HKL_MAX_N")) return std::atoi(s);
  return 8;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CaseTag caseOf(const Options& o) {
  if (o.kase == "A") return CaseTag::caseA();
  if (o.kase == "B") return CaseTag::caseB(o.m);
  throw UsageError("--case must be A or B");
}

void checkN(int n) {
  if (n < 1) throw UsageError("N must be at least 1");
  if (n > maxN()) throw UsageError("N=" + std::to_string(n) + " exceeds HKL_MAX_N=" + std::to_string(maxN()));
}

void checkStrings(const Options& o, const std::vector<BinaryString>& xs) {
  for (const auto& x : xs) {
    validateString(x);
    if (o.n && static_cast<int>(x.size()) != o.n) throw UsageError(x + " does not have length " + std::to_string(o.n));
  }
  checkN(static_cast<int>(xs.front().size()));
}

// Each available route for P^sign(a, b).
std::vector<std::pair<std::string, Laurent>> routes(const Options& o, const BinaryString& a, const BinaryString& b) {
  const CaseTag kase = caseOf(o);
  const Sign eps = parseSign(o.sign);
  const int N = static_cast<int>(a.size());
  const bool all = o.algo == "all";
  std::vector<std::pair<std::string, Laurent>> r;
  if (all || o.algo == "ballot")
    r.emplace_back("ballot", qPolynomial(a, b, eps, eps == Sign::Plus ? Rule::I : Rule::II, kase));
  if (all || o.algo == "hecke") r.emplace_back("hecke", KLBasis(N, {eps, kase}).P(a, b));
  if (o.algo == "linkpattern" && eps == Sign::Plus) throw UsageError("linkpattern gives P^- only");
  if ((all || o.algo == "linkpattern") && eps == Sign::Minus) r.emplace_back("linkpattern", pMinusFromClosedForm(a, b, kase));
  if (o.algo == "tree" && eps == Sign::Minus) throw UsageError("tree gives P^+ only");
  if ((all || o.algo == "tree") && eps == Sign::Plus) r.emplace_back("tree", rPolynomial(a, b, kase));
  if (r.empty()) throw UsageError("unknown algorithm: " + o.algo);
  return r;
}

int cmdPoly(const Options& o, const BinaryString& a, const BinaryString& b) {
  checkStrings(o, {a, b});
  if (a.size() != b.size()) throw UsageError("strings differ in length");
  if (!bruhatLeq(a, b, Sign::Plus)) throw UsageError(a + " is not below " + b);
  const auto r = routes(o, a, b);
  bool agree = true;
  for (const auto& [name, p] : r) agree = agree && p == r.front().second;
  if (o.format == "json") {
    json j = {{"alpha", a}, {"beta", b}, {"sign", o.sign}, {"case", caseOf(o).name()}};
    for (const auto& [name, p] : r) j["routes"][name] = p.toJson();
    if (r.size() > 1) j["verdict"] = agree ? "AGREE" : "DISAGREE";
    std::cout << j.dump() << "\n";
  } else if (r.size() == 1) {
    std::cout << r.front().second.str() << "\n";
  } else {
    for (const auto& [name, p] : r) std::cout << name << ": " << p.str() << "\n";
    std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  return agree ? 0 : 1;
}

int cmdTable(const Options& o) {
  checkN(o.n);
  const auto S = allStrings(o.n);
  std::vector<std::vector<Laurent>> T(S.size(), std::vector<Laurent>(S.size()));
  for (std::size_t x = 0; x < S.size(); ++x)
    for (std::size_t y = 0; y < S.size(); ++y)
      if (bruhatLeq(S[x], S[y], Sign::Plus)) T[x][y] = routes(o, S[x], S[y]).front().second;
  if (o.format == "json") {
    json j = {{"n", o.n}, {"case", caseOf(o).name()}, {"sign", o.sign}, {"order", S}};
    for (std::size_t x = 0; x < S.size(); ++x) {
      json row = json::array();
      for (std::size_t y = 0; y < S.size(); ++y) row.push_back(T[x][y].toJson());
      j["rows"].push_back(row);
    }
    std::cout << j.dump() << "\n";
  } else {
    const bool csv = o.format == "csv";
    const std::string sep = csv ? "," : "\t";
    std::cout << (csv ? "alpha" : "") ;
    for (const auto& s : S) std::cout << sep << s;
    std::cout << "\n";
    for (std::size_t x = 0; x < S.size(); ++x) {
      std::cout << S[x];
      for (std::size_t y = 0; y < S.size(); ++y) {
        const std::string v = T[x][y].str();
        std::cout << sep << (csv ? "\"" + v + "\"" : v);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmdVerify(const Options& o, const std::string& suite) {
  checkN(o.n);
  const auto rep = runSuite(suite, o.n, caseOf(o));
  if (o.format == "json") {
    std::cout << rep.toJson().dump() << "\n";
  } else {
    std::cout << suite << " N<=" << o.n << " " << caseOf(o).name() << ": " << (rep.ok() ? "PASS" : "FAIL") << " ("
              << rep.checked << " checks)\n";
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
  }
  return rep.ok() ? 0 : 1;
}

void emit(const Options& o, const std::string& name, const std::string& body) {
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  std::filesystem::create_directories(o.out);
  const auto path = std::filesystem::path(o.out) / (name + (o.format == "svg" ? ".svg" : ".tex"));
  std::ofstream(path) << body;
  std::cout << path.string() << "\n";
}

int cmdRender(const Options& o, const std::string& what, const std::vector<std::string>& args) {
  const Figure f = parseFigure(o.format);
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw UsageError("render " + what + " takes " + std::to_string(k) + " string(s)");
    checkStrings(o, args);
  };
  if (what == "diagram") {
    need(1);
    emit(o, "diagram_" + args[0], renderDiagram(args[0], parseSign(o.sign), f));
  } else if (what == "config") {
    need(2);
    const auto confs = enumerateConf(args[0], args[1], Sign::Plus, Rule::I, caseOf(o));
    for (std::size_t k = 0; k < confs.size(); ++k)
      emit(o, "config_" + std::to_string(k + 1), renderConfiguration(args[0], args[1], confs[k], f));
  } else if (what == "linkpattern") {
    need(1);
    emit(o, "linkpattern_" + args[0], renderLinkPattern(args[0], caseOf(o), f));
  } else if (what == "tree") {
    need(1);
    emit(o, "tree_" + args[0], renderTree(buildTree(args[0], caseOf(o)), nullptr, f));
  } else {
    throw UsageError("unknown object: " + what);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parabolic Kazhdan-Lusztig polynomials for (B_N, A_{N-1}) with unequal parameters"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c, bool needN) {
    auto* n = c->add_option("--n", o.n, "rank N");
    if (needN) n->required();
    c->add_option("--case", o.kase, "A (t, t_N independent) or B (t_N = t^m)")->check(CLI::IsMember({"A", "B"}));
    c->add_option("--m", o.m, "exponent m for case B")->check(CLI::PositiveNumber);
    c->add_option("--sign", o.sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
  };

  BinaryString alpha, beta;
  auto* poly = app.add_subcommand("poly", "compute P^sign(alpha, beta)");
  common(poly, false);
  poly->add_option("--algo", o.algo, "ballot, linkpattern, hecke, tree or all")
      ->check(CLI::IsMember({"ballot", "linkpattern", "hecke", "tree", "all"}));
  poly->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  poly->add_option("alpha", alpha)->required();
  poly->add_option("beta", beta)->required();

  auto* table = app.add_subcommand("table", "full matrix of P^sign over all strings, lexicographic order");
  common(table, true);
  table->add_option("--algo", o.algo)->check(CLI::IsMember({"ballot", "linkpattern", "hecke", "tree"}));
  table->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run an identity check on every N up to --n");
  common(verify, true);
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suiteNames()));
  verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  std::string what;
  std::vector<std::string> objs;
  auto* render = app.add_subcommand("render", "TikZ or SVG figures");
  common(render, false);
  render->add_option("object", what, "diagram, config, linkpattern or tree")->required();
  render->add_option("strings", objs)->required();
  render->add_option("--format", o.format, "tikz or svg")->check(CLI::IsMember({"tikz", "svg"}));
  render->add_option("--out", o.out, "directory for output files; stdout if omitted");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*poly) return cmdPoly(o, alpha, beta);
    if (*table) return cmdTable(o);
    if (*verify) return cmdVerify(o, suite);
    if (*render) {
      if (o.format == "text") o.format = "tikz";
      return cmdRender(o, what, objs);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
