// sympow: symbolic-power and Frobenius-power calculator for polynomial
// rings over prime fields, plus a verification harness for the uniform
// containment theorems on squarefree monomial ideals.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympow/containment.hpp"
#include "sympow/corpus.hpp"
#include "sympow/frobenius.hpp"
#include "sympow/parse.hpp"

using nlohmann::json;
using namespace sympow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconclusive = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedIdeal {
  RingPtr ring;
  std::optional<Ideal> ideal;
  std::optional<SquarefreeIdeal> squarefree;
  std::optional<std::vector<std::vector<int>>> primes;
  std::optional<Polynomial> separator;

  const Ideal& general() const {
    if (ideal) return *ideal;
    throw InputError("internal: missing ideal");
  }
};

LoadedIdeal load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& err) {
    throw InputError(path + ": " + err.what());
  }

  if (!j.contains("char") || !j.contains("vars") || !j.contains("gens"))
    throw InputError(path + ": needs fields char, vars, gens");

  LoadedIdeal loaded;
  try {
    loaded.ring = Ring::make(j.at("char").get<std::uint64_t>(),
                             j.at("vars").get<std::vector<std::string>>());
  } catch (const std::exception& err) {
    throw InputError(path + ": " + err.what());
  }

  auto gen_strings = j.at("gens").get<std::vector<std::string>>();
  if (gen_strings.empty()) throw InputError(path + ": gens must be nonempty");
  std::vector<Polynomial> gens;
  for (const auto& s : gen_strings) {
    try {
      gens.push_back(parse_polynomial(loaded.ring, s));
    } catch (const ParseError& err) {
      throw InputError(path + ": in \"" + s + "\": " + err.what());
    }
  }

  if (j.contains("primes")) {
    std::vector<std::vector<int>> primes;
    for (const auto& plist : j.at("primes")) {
      std::vector<int> idx;
      for (const auto& name : plist) {
        int i = loaded.ring->index_of(name.get<std::string>());
        if (i < 0)
          throw InputError(path + ": prime uses undeclared variable");
        idx.push_back(i);
      }
      std::sort(idx.begin(), idx.end());
      primes.push_back(std::move(idx));
    }
    loaded.primes = std::move(primes);
  }
  if (j.contains("separator")) {
    try {
      loaded.separator =
          parse_polynomial(loaded.ring, j.at("separator").get<std::string>());
    } catch (const ParseError& err) {
      throw InputError(path + ": separator: " + err.what());
    }
  }

  // squarefree monomial inputs are auto-detected and routed combinatorially
  bool squarefree = true;
  std::vector<Exponents> sf_gens;
  for (const auto& g : gens) {
    if (!g.is_monomial()) {
      squarefree = false;
      break;
    }
    const Exponents& u = g.terms().begin()->first;
    for (int e : u)
      if (e != 0 && e != 1) squarefree = false;
    if (exp_total_degree(u) == 0) squarefree = false;
    if (!squarefree) break;
    sf_gens.push_back(u);
  }
  if (squarefree)
    loaded.squarefree =
        SquarefreeIdeal(loaded.ring, minimalize(std::move(sf_gens)));
  loaded.ideal = Ideal(loaded.ring, std::move(gens));
  return loaded;
}

const SquarefreeIdeal& need_squarefree(const LoadedIdeal& loaded,
                                       const std::string& what) {
  if (!loaded.squarefree)
    throw InputError(what + " needs a squarefree monomial ideal");
  return *loaded.squarefree;
}

struct Output {
  bool as_json = false;
  std::string path;

  void emit(const json& j, const std::string& text) const {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file) throw InputError("cannot write " + path);
      os = &file;
    }
    if (as_json)
      *os << j.dump(2) << "\n";
    else
      *os << text << "\n";
  }
};

json report_json(const ContainmentReport& r) {
  return json::parse(r.to_json());
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Holds: return kExitOk;
    case Verdict::Fails: return kExitFails;
    default: return kExitInconclusive;
  }
}

int reports_exit(const std::vector<ContainmentReport>& reports) {
  int code = kExitOk;
  for (const auto& r : reports) code = std::max(code, verdict_exit(r.verdict));
  return code;
}

std::string gens_text(const Ideal& ideal) { return describe(ideal); }

json gens_json(const Ideal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back(to_string(g));
  return json{{"result", out}};
}

json gens_json(const MonomialIdeal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.gens())
    out.push_back(monomial_to_string(ideal.ring(), g));
  return json{{"result", out}};
}

std::string gens_text(const MonomialIdeal& ideal) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& g : ideal.gens()) {
    if (!first) os << ", ";
    os << monomial_to_string(ideal.ring(), g);
    first = false;
  }
  os << ")";
  return os.str();
}

std::pair<long long, long long> parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return {std::stoll(s), 1};
    return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
  } catch (const std::exception&) {
    throw InputError("bad rational value: " + s);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic-power / Frobenius-power calculator over F_p"};
  app.require_subcommand(1);
  app.fallthrough();  // let --json / --output appear after the subcommand

  Output out;
  app.add_flag("--json", out.as_json, "emit JSON instead of text");
  app.add_option("--output", out.path, "write the report to a file");

  std::string file, file2, poly_text, variant_str = "A", tau_t = "1",
                                      order_str = "grevlex";
  int n = 1, k = 0, m = 1, nvars = 4;
  unsigned e = 1, e_max = 4;
  long long char_override = 2;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  gb->add_option("file", file)->required();
  gb->add_option("--order", order_str, "lex or grevlex");

  auto* member = app.add_subcommand("member", "ideal membership");
  member->add_option("file", file)->required();
  member->add_option("--poly", poly_text)->required();

  auto* colon = app.add_subcommand("colon", "ideal quotient (A : B)");
  colon->add_option("file", file)->required();
  colon->add_option("file2", file2)->required();

  auto* intersect = app.add_subcommand("intersect", "ideal intersection");
  intersect->add_option("file", file)->required();
  intersect->add_option("file2", file2)->required();

  auto* saturate = app.add_subcommand("saturate", "saturation (I : f^inf)");
  saturate->add_option("file", file)->required();
  saturate->add_option("--poly", poly_text)->required();

  auto* bracket = app.add_subcommand("bracket", "Frobenius bracket power I^[p^e]");
  bracket->add_option("file", file)->required();
  bracket->add_option("-e", e, "exponent e of q = p^e")->required();

  auto* fedder = app.add_subcommand("fedder", "Fedder F-purity test for R/I");
  fedder->add_option("file", file)->required();

  auto* symbolic = app.add_subcommand("symbolic", "symbolic power I^(m)");
  symbolic->add_option("file", file)->required();
  symbolic->add_option("-m", m)->required();

  auto* tau = app.add_subcommand("tau", "test ideal tau(a^t), monomial a");
  tau->add_option("file", file)->required();
  tau->add_option("-t", tau_t, "rational exponent a/b")->required();
  tau->add_option("--emax", e_max, "chain stage bound");

  auto* tau_asym = app.add_subcommand("tau-asym", "asymptotic tau(k · I^(•))");
  tau_asym->add_option("file", file)->required();
  tau_asym->add_option("-k", k)->required();

  auto* threshold =
      app.add_subcommand("threshold", "largest l with tau(l · I^(•)) = R");
  threshold->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "uniform containment theorems");
  verify->add_option("file", file)->required();
  verify->add_option("--variant", variant_str, "A, B, or ELS");
  verify->add_option("-n", n);
  verify->add_option("-k", k);

  auto* audit = app.add_subcommand("audit", "proof-chain audit for variant A");
  audit->add_option("file", file)->required();
  audit->add_option("-n", n);
  audit->add_option("-k", k);

  auto* claim =
      app.add_subcommand("claim", "colon claim (I^[q]:I) = ∩(P_i^[q]:P_i)");
  claim->add_option("file", file)->required();
  claim->add_option("-e", e);

  auto* scan = app.add_subcommand("conjecture-scan",
                                  "I^(2) ⊆ m·I over unmixed height-2 ideals");
  scan->add_option("--nvars", nvars)->required();
  scan->add_option("--char", char_override, "characteristic (default 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) ? kExitInputError : kExitOk;
  }

  try {
    if (gb->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      MonomialOrder order = order_str == "lex" ? MonomialOrder::lex()
                                               : MonomialOrder::grevlex();
      const GBasis& basis = in.general().groebner(order);
      Ideal result(in.ring, basis.elements.empty()
                                ? std::vector<Polynomial>{Polynomial::zero(in.ring)}
                                : basis.elements);
      out.emit(gens_json(result), gens_text(result));
      return kExitOk;
    }
    if (member->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      Polynomial f = parse_polynomial(in.ring, poly_text);
      bool is_member = ideal_member(f, in.general());
      out.emit(json{{"member", is_member}},
               is_member ? "member: true" : "member: false");
      return is_member ? kExitOk : kExitFails;
    }
    if (colon->parsed() || intersect->parsed()) {
      LoadedIdeal a = load_ideal_file(file);
      LoadedIdeal b = load_ideal_file(file2);
      if (!same_ring(a.ring, b.ring))
        throw InputError("the two ideals live in different rings");
      Ideal result = colon->parsed()
                         ? ideal_colon(a.general(), b.general())
                         : ideal_intersect(a.general(), b.general());
      out.emit(gens_json(result), gens_text(result));
      return kExitOk;
    }
    if (saturate->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      Polynomial f = parse_polynomial(in.ring, poly_text);
      if (f.is_zero()) throw InputError("cannot saturate by zero");
      Ideal result = ideal_saturate(in.general(), f);
      out.emit(gens_json(result), gens_text(result));
      return kExitOk;
    }
    if (bracket->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      Ideal result = bracket_power(in.general(), e);
      out.emit(gens_json(result), gens_text(result));
      return kExitOk;
    }
    if (fedder->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      FedderResult r = fedder_fpure(in.general());
      json j{{"f_pure", r.f_pure}};
      std::string text = r.f_pure ? "F-pure" : "not F-pure";
      if (r.f_pure) {
        j["witness_generator"] = to_string(*r.witness_generator);
        j["witness_term"] = monomial_to_string(in.ring, *r.witness_term);
        text += " (witness generator " + to_string(*r.witness_generator) +
                ", escaping term " +
                monomial_to_string(in.ring, *r.witness_term) + ")";
      }
      out.emit(j, text);
      return kExitOk;
    }
    if (symbolic->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      if (in.squarefree) {
        MonomialIdeal result = in.squarefree->symbolic_power(m);
        out.emit(gens_json(result), gens_text(result));
        return kExitOk;
      }
      if (!in.separator)
        throw InputError(
            "general symbolic powers need a \"separator\" field in the file");
      Ideal result = symbolic_power_general(in.general(), m, *in.separator);
      json j = gens_json(result);
      j["conditional"] = "separator attested by the caller";
      out.emit(j, gens_text(result) + "  [conditional on separator]");
      return kExitOk;
    }
    if (tau->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      MonomialIdeal a = as_monomial_ideal(in.general());
      auto [num, den] = parse_rational(tau_t);
      if (num < 0 || den <= 0) throw InputError("t must be >= 0");
      TauChainResult r = tau_monomial_power(a, num, den, e_max);
      json j = gens_json(r.value);
      j["stabilized"] = r.stabilized;
      j["e_reached"] = r.e_reached;
      out.emit(j, gens_text(r.value) +
                      (r.stabilized ? "" : "  [unstable at e_max]"));
      return r.stabilized ? kExitOk : kExitInconclusive;
    }
    if (tau_asym->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      const SquarefreeIdeal& sf = need_squarefree(in, "tau-asym");
      if (k < 0) throw InputError("k must be >= 0");
      MonomialIdeal result = sf.tau_asymptotic(k);
      out.emit(gens_json(result), gens_text(result));
      return kExitOk;
    }
    if (threshold->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      const SquarefreeIdeal& sf = need_squarefree(in, "threshold");
      int l = sf.tau_threshold();
      out.emit(json{{"threshold", l}}, "threshold: " + std::to_string(l));
      return kExitOk;
    }
    if (verify->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      MainVariant variant;
      if (variant_str == "A") variant = MainVariant::A;
      else if (variant_str == "B") variant = MainVariant::B;
      else if (variant_str == "ELS") variant = MainVariant::ELS;
      else throw InputError("variant must be A, B, or ELS");

      ContainmentReport report;
      if (in.squarefree) {
        report = verify_main(*in.squarefree, n, k, variant);
      } else if (in.primes && in.separator) {
        report = verify_main_general(in.general(), *in.primes, *in.separator,
                                     n, k, variant);
      } else {
        throw InputError(
            "non-monomial verify needs \"primes\" and \"separator\" fields");
      }
      out.emit(report_json(report), report.to_text());
      return verdict_exit(report.verdict);
    }
    if (audit->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      const SquarefreeIdeal& sf = need_squarefree(in, "audit");
      auto reports = audit_proof_chain(sf, n, k);
      json j = json::array();
      std::ostringstream text;
      for (const auto& r : reports) {
        j.push_back(report_json(r));
        text << r.to_text() << "\n";
      }
      std::string t = text.str();
      if (!t.empty()) t.pop_back();
      out.emit(j, t);
      return reports_exit(reports);
    }
    if (claim->parsed()) {
      LoadedIdeal in = load_ideal_file(file);
      ContainmentReport report;
      if (in.squarefree)
        report = check_colon_claim(*in.squarefree, e);
      else if (in.primes)
        report = check_colon_claim(in.general(), *in.primes, e);
      else
        throw InputError("claim on a non-monomial ideal needs \"primes\"");
      out.emit(report_json(report), report.to_text());
      return verdict_exit(report.verdict);
    }
    if (scan->parsed()) {
      if (nvars < 2 || nvars > 6)
        throw InputError("conjecture-scan supports 2 <= nvars <= 6");
      std::vector<std::string> vars;
      for (int i = 0; i < nvars; ++i) vars.push_back("x" + std::to_string(i + 1));
      RingPtr ring = Ring::make(static_cast<std::uint64_t>(char_override),
                                std::move(vars));
      ScanSummary summary = conjecture_scan(unmixed_height2_ideals(ring));
      json j{{"scanned", summary.scanned},
             {"filtered", summary.filtered},
             {"counterexamples", summary.counterexamples}};
      std::ostringstream text;
      text << summary.counterexamples.size() << " counterexamples / "
           << summary.scanned << " ideals scanned";
      out.emit(j, text.str());
      return summary.counterexamples.empty() ? kExitOk : kExitFails;
    }
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
