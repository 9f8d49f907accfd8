// Command-line front end: presentations, Hilbert series, Chern classes and
// the verification suite, with plain-text and JSON output.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "smc/stablemaps.hpp"

using namespace smc;
using nlohmann::json;

namespace {

TargetDim parse_target(const std::string& n) {
  if (n == "inf") return TargetDim::inf();
  try {
    std::size_t used = 0;
    int value = std::stoi(n, &used);
    if (used == n.size() && value >= 1) return TargetDim::finite(value);
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("--n", "expected a positive integer or 'inf', got '" + n + "'");
}

// Unicode display names, used only when --pretty is given.
std::string prettify(std::string s) {
  const std::pair<const char*, const char*> table[] = {
      {"sigma", "σ"}, {"rho", "ρ"}, {"tau", "τ"}, {"l1", "ℓ1"}, {"l2", "ℓ2"}, {"l3", "ℓ3"}};
  for (const auto& [from, to] : table) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
      s.replace(pos, std::string(from).size(), to);
      pos += std::string(to).size();
    }
  }
  return s;
}

struct Options {
  int d = 0;
  std::string n = "inf";
  int m = 1;
  int p = 1;
  int upto = -1;
  int max_degree = -1;
  std::string which;  // empty means the per-verb default
  bool emit_json = false;
  bool pretty = false;
  int jobs = 1;
};

std::string render(const Options& opt, const Polynomial& p) {
  std::string s = format_poly(p);
  return opt.pretty ? prettify(s) : s;
}

// For `present` the default is the T-ring; for series commands the default
// is the presentation a closed-form reference exists for (the conjectured
// generator presentation when d >= 2, the T-ring itself for d=1).
QuotientPresentation presentation_for(const Options& opt, TargetDim dim, bool series_default) {
  std::string which = opt.which;
  if (which.empty()) which = (series_default && opt.d >= 2) ? "conjecture" : "t-ring";
  if (which == "t-ring") return t_ring(opt.d, dim);
  if (which == "conjecture") {
    if (opt.d == 1) throw CLI::ValidationError("--which", "no conjecture presentation for d=1");
    return conjecture_ring(opt.d, dim);
  }
  throw CLI::ValidationError("--which", "expected 't-ring' or 'conjecture'");
}

std::string coefficient_list(const std::vector<Int>& coeffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += coeffs[i].str();
  }
  return out + "]";
}

json degrees_json(const CheckReport& rep) {
  json arr = json::array();
  for (const auto& dc : rep.per_degree)
    arr.push_back({{"degree", dc.degree},
                   {"expected", dc.expected.str()},
                   {"actual", dc.actual.str()}});
  return arr;
}

json report_json(const CheckReport& rep, const Options& opt, const std::string& n) {
  json out = {{"check", rep.check},
              {"d", opt.d},
              {"n", n},
              {"params", json::object()},
              {"ok", rep.ok},
              {"perDegree", degrees_json(rep)}};
  if (!rep.failures.empty()) out["witness"] = rep.failures.front();
  return out;
}

void print_report(const CheckReport& rep, const Options& opt, const std::string& n) {
  if (opt.emit_json) {
    std::cout << report_json(rep, opt, n).dump(2) << "\n";
    return;
  }
  std::cout << rep.check << " d=" << opt.d << " n=" << n << ": "
            << (rep.ok ? "pass" : "FAIL") << "\n";
  for (const auto& dc : rep.per_degree)
    std::cout << "  degree " << dc.degree << ": expected " << dc.expected << ", actual "
              << dc.actual << (dc.expected == dc.actual ? "" : "  <-- mismatch") << "\n";
  for (const auto& f : rep.failures) std::cout << "  failure: " << f << "\n";
}

int cmd_present(const Options& opt) {
  TargetDim dim = parse_target(opt.n);
  QuotientPresentation pres = presentation_for(opt, dim, /*series_default=*/false);
  std::cout << pres.label << "\n";
  std::cout << "variables:";
  for (int i = 0; i < pres.ring->nvars(); ++i) {
    std::string name = pres.ring->var(i).name;
    std::cout << " " << (opt.pretty ? prettify(name) : name) << "(" << pres.ring->weight(i)
              << ")";
  }
  std::cout << "\nrelations:\n";
  for (const auto& g : pres.relations.generators()) std::cout << "  " << render(opt, g) << "\n";
  return 0;
}

// A closed-form reference exists for every finite-n presentation and for the
// d=2/3 conjecture presentations at n=inf. The n=inf T-ring quotients carry
// only the base relations and are not expected to match it.
std::optional<HilbertSeries> reference_for(const Options& opt, TargetDim dim,
                                           const QuotientPresentation& pres) {
  if (dim.infinite && (opt.d == 1 || same_ring(pres.ring, t_poly_ring(opt.d))))
    return std::nullopt;
  return reference_series(opt.d, dim);
}

int cmd_series(const Options& opt, bool betti_table) {
  TargetDim dim = parse_target(opt.n);
  QuotientPresentation pres = presentation_for(opt, dim, /*series_default=*/true);
  std::cerr << "computing Groebner basis for " << pres.label << "\n";
  HilbertSeries series = hilbert_series(pres);
  bool ok = true;
  std::optional<HilbertSeries> ref = reference_for(opt, dim, pres);
  std::string verdict = ref ? (series == *ref ? "matches reference series"
                                              : "DIFFERS from reference series")
                            : "no reference series for this presentation";
  if (ref && !(series == *ref)) ok = false;
  int upto = opt.upto >= 0 ? opt.upto : (betti_table ? 8 : -1);
  if (opt.emit_json) {
    json out = {{"check", betti_table ? "betti" : "hilbert"},
                {"d", opt.d},
                {"n", dim.to_string()},
                {"params", {{"which", opt.which}}},
                {"ok", ok},
                {"series", series.to_string()},
                {"reference", verdict}};
    if (upto >= 0) {
      json coeffs = json::array();
      for (const Int& c : series.coefficients(upto)) coeffs.push_back(c.str());
      out["coefficients"] = coeffs;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << pres.label << "\n";
    std::cout << "series: " << series.to_string() << "\n";
    if (upto >= 0)
      std::cout << "coefficients through degree " << upto << ": "
                << coefficient_list(series.coefficients(upto)) << "\n";
    std::cout << verdict << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_chern(const Options& opt) {
  Polynomial cls = chern_class(opt.d, opt.m, opt.p);
  bool ok = true;
  std::string formula_note;
  if (opt.p <= 2 && !(opt.d == 1 && opt.p == 2 && opt.m != 1)) {
    GroebnerBasis base = buchberger(Ideal(t_poly_ring(opt.d), base_relations(opt.d)));
    Polynomial diff = normal_form(cls - chern_closed_formula(opt.d, opt.m, opt.p), base);
    ok = diff.is_zero();
    formula_note = ok ? "matches closed formula" : "DIFFERS from closed formula";
  }
  if (opt.emit_json) {
    json out = {{"check", "chern"},
                {"d", opt.d},
                {"n", "inf"},
                {"params", {{"m", opt.m}, {"p", opt.p}}},
                {"ok", ok},
                {"class", format_poly(cls)}};
    if (!formula_note.empty()) out["witness"] = formula_note;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render(opt, cls) << "\n";
    if (!formula_note.empty()) std::cout << formula_note << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_pn_koszul(const Options& opt) {
  TargetDim dim = parse_target(opt.n);
  if (dim.infinite) throw CLI::ValidationError("--n", "pn-koszul requires a finite n");
  QuotientPresentation pres = pn_koszul(dim.n);
  bool ok = pn_koszul_check(dim.n);
  HilbertSeries series = hilbert_series(pres);
  if (opt.emit_json) {
    json out = {{"check", "pn-koszul"},
                {"d", 0},
                {"n", dim.to_string()},
                {"params", json::object()},
                {"ok", ok},
                {"series", series.to_string()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << pres.label << "\n";
    std::cout << "series: " << series.to_string() << "\n";
    std::cout << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_verify(const Options& opt, const std::string& suite) {
  TargetDim dim = parse_target(opt.n);
  if (suite == "conjecture-d3") {
    if (dim.infinite) throw CLI::ValidationError("--n", "conjecture-d3 requires a finite n");
    std::cerr << "verifying the d=3 presentation at n=" << dim.n << "\n";
    ConjectureD3Report rep = verify_conjecture_d3(dim.n, opt.jobs);
    Options o = opt;
    o.d = 3;
    print_report(rep.detail, o, dim.to_string());
    return rep.ok() ? 0 : 1;
  }
  if (suite == "intertwiner") {
    if (dim.infinite) throw CLI::ValidationError("--n", "intertwiner requires a finite n");
    CheckReport rep = check_intertwiner(opt.d, dim.n);
    print_report(rep, opt, dim.to_string());
    return rep.ok ? 0 : 1;
  }
  if (suite == "symmetry") {
    bool ok = check_symmetry(opt.d, dim);
    CheckReport rep{"symmetry"};
    if (!ok) rep.fail("ideal is not stable under the symmetric-group action");
    print_report(rep, opt, dim.to_string());
    return ok ? 0 : 1;
  }
  if (suite == "whitney-d1") {
    if (dim.infinite) throw CLI::ValidationError("--n", "whitney-d1 requires a finite n");
    bool ok = whitney_check_d1(dim.n);
    CheckReport rep{"whitney-d1"};
    if (!ok) rep.fail("Whitney recursion ideal differs from the moving relations");
    Options o = opt;
    o.d = 1;
    print_report(rep, o, dim.to_string());
    return ok ? 0 : 1;
  }
  if (suite == "injectivity") {
    int upto = opt.max_degree >= 0 ? opt.max_degree : (dim.infinite ? 6 : dim.n + 2);
    std::cerr << "checking graded injectivity through degree " << upto << "\n";
    CheckReport rep = graded_injectivity(opt.d, dim, upto, opt.jobs);
    print_report(rep, opt, dim.to_string());
    return rep.ok ? 0 : 1;
  }
  if (suite == "invariants-d2") {
    if (dim.infinite) throw CLI::ValidationError("--n", "invariants-d2 requires a finite n");
    int upto = opt.max_degree >= 0 ? opt.max_degree : dim.n + 3;
    CheckReport rep = invariant_check_d2(dim.n, upto, opt.jobs);
    Options o = opt;
    o.d = 2;
    print_report(rep, o, dim.to_string());
    return rep.ok ? 0 : 1;
  }
  if (suite == "pn-koszul") {
    if (dim.infinite) throw CLI::ValidationError("--n", "pn-koszul requires a finite n");
    bool ok = pn_koszul_check(dim.n);
    CheckReport rep{"pn-koszul"};
    if (!ok) rep.fail("series differs from (1-t^{n+1})/(1-t)");
    Options o = opt;
    o.d = 0;
    print_report(rep, o, dim.to_string());
    return ok ? 0 : 1;
  }
  throw CLI::ValidationError(
      "suite", "expected one of conjecture-d3, intertwiner, symmetry, whitney-d1, "
               "injectivity, invariants-d2, pn-koszul");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of graded ring presentations"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_d) {
    auto* d = sub->add_option("--d", opt.d, "map degree (1, 2 or 3)")->check(CLI::Range(1, 3));
    if (needs_d) d->required();
    sub->add_option("--n", opt.n, "target dimension: positive integer or 'inf'");
    sub->add_flag("--json", opt.emit_json, "machine-readable output");
    sub->add_flag("--pretty", opt.pretty, "unicode variable names (display only)");
    sub->add_option("--jobs", opt.jobs, "parallel verification cases")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* present = app.add_subcommand("present", "print a presentation");
  add_common(present, true);
  present->add_option("--which", opt.which, "t-ring or conjecture");

  CLI::App* hilbert = app.add_subcommand("hilbert", "print the Hilbert series");
  add_common(hilbert, true);
  hilbert->add_option("--which", opt.which, "t-ring or conjecture");
  hilbert->add_option("--upto", opt.upto, "also print coefficients through this degree")
      ->check(CLI::NonNegativeNumber);

  CLI::App* betti = app.add_subcommand("betti", "print graded dimensions");
  add_common(betti, true);
  betti->add_option("--which", opt.which, "t-ring or conjecture");
  betti->add_option("--upto", opt.upto, "highest degree")->check(CLI::NonNegativeNumber);

  CLI::App* chern = app.add_subcommand("chern", "print a Chern class in normal form");
  add_common(chern, true);
  chern->add_option("--m", opt.m, "twist")->required()->check(CLI::PositiveNumber);
  chern->add_option("--p", opt.p, "class index")->required()->check(CLI::PositiveNumber);

  CLI::App* koszul = app.add_subcommand("pn-koszul", "projective-space smoke test");
  add_common(koszul, false);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "which suite to run")->required();
  add_common(verify, false);
  verify->add_option("--max-degree", opt.max_degree, "highest degree to check")
      ->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (present->parsed()) return cmd_present(opt);
    if (hilbert->parsed()) return cmd_series(opt, false);
    if (betti->parsed()) return cmd_series(opt, true);
    if (chern->parsed()) return cmd_chern(opt);
    if (koszul->parsed()) return cmd_pn_koszul(opt);
    if (verify->parsed()) {
      if ((suite == "intertwiner" || suite == "symmetry" || suite == "injectivity") &&
          opt.d == 0)
        throw CLI::ValidationError("--d", "this suite requires --d");
      return cmd_verify(opt, suite);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
