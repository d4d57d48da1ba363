#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "taut/errors.hpp"
#include "taut/independence.hpp"
#include "taut/taut_ring.hpp"

namespace taut::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kLclassCap = 6;

struct Config {
  int n = 0;
  int genus = 0;
  std::string flavor = "closed";
  int max_degree = -1;
  std::string model;
  std::string format;
  std::string expr;
  int max_i = 4;
  bool allow_large = false;
  std::size_t size_cap = KernelOptions{}.size_cap;
};

void require_n(const Config& c) {
  if (c.n < 1) throw DomainError("--n must be >= 1");
}

int cmd_lclass(const Config& c, std::ostream& out) {
  require_n(c);
  if (c.max_i < 0) throw DomainError("--max-i must be >= 0");
  if (c.max_i > kLclassCap && !c.allow_large)
    throw DomainError("--max-i above " + std::to_string(kLclassCap) + " needs --allow-large");
  Json rows = Json::array();
  if (c.format == "tsv") out << "i\tn\tltilde\tclassical\tleading\tcheck\n";
  for (int i = 0; i <= c.max_i; ++i) {
    const auto lt = l_tilde(i, c.n);
    std::string classical = "1", leading = "-", check = "-";
    if (i > 0) {
      classical = to_string(l_classical(i));
      if (i <= c.n) {
        Exponents e(static_cast<std::size_t>(c.n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        const Rational expected = l_tilde_leading_coefficient(i, c.n);
        leading = to_string(expected);
        check = lt.poly.coefficient(e) == expected ? "ok" : "MISMATCH";
      }
    }
    const std::string text = to_string(lt.poly);
    if (c.format == "json") {
      rows.push_back(Json{{"i", i}, {"n", c.n}, {"ltilde", text}, {"classical", classical}, {"leading", leading},
                          {"check", check}});
    } else if (c.format == "tsv") {
      out << i << '\t' << c.n << '\t' << text << '\t' << classical << '\t' << leading << '\t' << check << '\n';
    } else {
      out << "Lt_" << i << " (n=" << c.n << ") = " << text << '\n';
      if (i > 0) out << "  L_" << i << " = " << classical << "\n  leading " << leading << " [" << check << "]\n";
    }
  }
  if (c.format == "json") out << rows.dump(2) << '\n';
  return ok;
}

int cmd_normal_form(const Config& c, std::ostream& out) {
  require_n(c);
  const Flavor flavor = parse_flavor(c.flavor);
  const auto x = parse(c.expr, c.n, flavor);
  TautPresentation pres(c.n, c.genus, flavor);
  const auto nf = normal_form(x, pres, c.max_degree);
  const std::string text = to_string(nf);
  if (c.format == "json") {
    Json gens = Json::array();
    for (const auto& g : pres.generators()) gens.push_back(Json{{"name", g.name}, {"degree", g.degree}});
    out << Json{{"expr", x.to_string()}, {"n", c.n},      {"g", c.genus},
                {"flavor", c.flavor},    {"generators", gens}, {"krull_dimension", krull_dimension(pres)},
                {"normal_form", text}}
               .dump(2)
        << '\n';
  } else if (c.format == "tsv") {
    out << "expr\tnormal_form\n" << x.to_string() << '\t' << text << '\n';
  } else {
    out << text << '\n';
  }
  return ok;
}

Json report_json(const AuditReport& r) {
  return Json{{"relation", r.relation}, {"model", r.model_label}, {"n", r.n},
              {"g", r.g},               {"verdict", to_string(r.verdict)}, {"witness", to_string(r.witness)},
              {"family", r.family}};
}

int cmd_audit(const Config& c, std::ostream& out) {
  require_n(c);
  std::vector<AuditReport> reports;
  if (!c.expr.empty()) {
    if (c.model.empty()) throw DomainError("--expr needs --model");
    const auto model = BundleModel::make(parse_model_kind(c.model), c.n, c.genus);
    const auto x = parse(c.expr, c.n, model.pointed() ? Flavor::pointed : Flavor::closed);
    reports.push_back(audit(x, model, "user", -1));
  } else {
    reports = builtin_relation_suite(c.n, c.genus, c.max_degree < 0 ? 16 : c.max_degree);
    if (!c.model.empty()) {
      const auto kind = parse_model_kind(c.model);
      std::erase_if(reports, [&](const AuditReport& r) { return r.model != kind; });
    }
  }
  if (c.format == "tsv") out << "family\tmodel\tverdict\trelation\twitness\n";
  std::size_t refuted = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::refuted) ++refuted;
    if (c.format == "json") {
      out << report_json(r).dump() << '\n';
    } else if (c.format == "tsv") {
      out << r.family << '\t' << r.model_label << '\t' << to_string(r.verdict) << '\t' << r.relation << '\t'
          << to_string(r.witness) << '\n';
    } else {
      out << to_string(r.verdict) << "  " << r.family << "  " << r.model_label << "  " << r.relation;
      if (r.verdict == Verdict::refuted) out << "  witness: " << to_string(r.witness);
      out << '\n';
    }
  }
  if (c.format == "text") out << reports.size() - refuted << " verified, " << refuted << " refuted\n";
  return ok;
}

int cmd_independence(const Config& c, std::ostream& out) {
  require_n(c);
  const Flavor flavor = parse_flavor(c.flavor);
  KernelOptions opts;
  opts.size_cap = c.size_cap;
  const auto res = check_presentation_independence(c.n, c.genus, flavor, c.max_degree, opts);
  const std::string verdict = res.injective() ? "independent" : "dependent";
  if (c.format == "json") {
    Json gens = Json::array();
    for (const auto& g : res.map.source()->generators()) gens.push_back(g.name);
    Json kernel = Json::array(), degrees = Json::array();
    for (const auto& d : res.degrees) {
      degrees.push_back(Json{{"degree", d.degree}, {"source_dim", d.source_dim}, {"rank", d.rank}});
      if (d.basis.empty()) continue;
      Json basis = Json::array();
      for (const auto& k : d.basis) basis.push_back(to_string(k));
      kernel.push_back(Json{{"degree", d.degree}, {"basis", basis}});
    }
    out << Json{{"n", c.n},
                {"g", c.genus},
                {"flavor", c.flavor},
                {"max_degree", res.max_degree},
                {"generators", gens},
                {"degrees", degrees},
                {"kernel", kernel},
                {"verdict", verdict}}
               .dump(2)
        << '\n';
  } else {
    if (c.format == "tsv") out << "degree\tsource_dim\trank\tkernel\n";
    for (const auto& d : res.degrees) {
      std::string ks;
      for (const auto& k : d.basis) ks += (ks.empty() ? "" : "; ") + to_string(k);
      if (c.format == "tsv")
        out << d.degree << '\t' << d.source_dim << '\t' << d.rank << '\t' << ks << '\n';
      else
        out << "degree " << d.degree << ": " << d.source_dim << " monomials, rank " << d.rank
            << (ks.empty() ? "" : ", kernel " + ks) << '\n';
    }
    if (c.format == "text") out << verdict << " up to degree " << res.max_degree << '\n';
  }
  return ok;
}

int cmd_model_eval(const Config& c, std::ostream& out) {
  require_n(c);
  if (c.model.empty()) throw DomainError("model-eval needs --model");
  const auto model = BundleModel::make(parse_model_kind(c.model), c.n, c.genus);
  const auto x = parse(c.expr, c.n, model.pointed() ? Flavor::pointed : Flavor::closed);
  const auto value = model_eval(x, model, c.max_degree);
  const std::string text = to_string(value);
  if (c.format == "json") {
    Json gens = Json::array();
    for (const auto& g : model.target()->generators()) gens.push_back(g.name);
    out << Json{{"expr", x.to_string()}, {"model", model.label()}, {"target", gens}, {"value", text}}.dump(2) << '\n';
  } else if (c.format == "tsv") {
    out << "expr\tmodel\tvalue\n" << x.to_string() << '\t' << model.label() << '\t' << text << '\n';
  } else {
    out << text << '\n';
  }
  return ok;
}

int cmd_basis(const Config& c, std::ostream& out) {
  require_n(c);
  const int D = c.max_degree < 0 ? 4 * c.n : c.max_degree;
  const auto basis = enumerate_basis(c.n, D);
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& b : basis) arr.push_back(Json{{"monomial", b.to_string()}, {"degree", b.degree()}});
    out << arr.dump(2) << '\n';
    return ok;
  }
  if (c.format == "tsv") out << "degree\tmonomial\n";
  for (const auto& b : basis) out << b.degree() << (c.format == "tsv" ? "\t" : "  ") << b.to_string() << '\n';
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculus for tautological rings of W_g bundles", "tautring"};
  app.require_subcommand(1);
  Config cfg;
  const std::vector<std::string> formats{"text", "json", "tsv"};

  // the format default differs per subcommand and is applied after parsing
  std::vector<std::pair<CLI::App*, std::string>> default_formats;
  auto add_common = [&](CLI::App* sub, const std::string& default_format) {
    sub->add_option("--n", cfg.n, "half-dimension n (manifold dimension 2n)")->required();
    sub->add_option("--format", cfg.format, "output format: text, json or tsv (default " + default_format + ")")
        ->check(CLI::IsMember(formats));
    default_formats.emplace_back(sub, default_format);
  };
  auto* lclass = app.add_subcommand("lclass", "modified and classical Hirzebruch classes");
  add_common(lclass, "text");
  lclass->add_option("--max-i", cfg.max_i, "largest index i")->default_val(4);
  lclass->add_flag("--allow-large", cfg.allow_large, "permit --max-i above 6");

  auto* nf = app.add_subcommand("normal-form", "normal form in the free presentation");
  add_common(nf, "text");
  nf->add_option("--genus", cfg.genus)->check(CLI::NonNegativeNumber);
  nf->add_option("--flavor", cfg.flavor)->check(CLI::IsMember({"closed", "pointed", "disc"}));
  nf->add_option("--expr", cfg.expr, "kappa expression")->required();
  nf->add_option("--max-degree", cfg.max_degree, "degree cap for intermediate products");

  auto* au = app.add_subcommand("audit", "audit relations against bundle models");
  add_common(au, "json");
  au->add_option("--genus", cfg.genus)->check(CLI::NonNegativeNumber);
  au->add_option("--max-degree", cfg.max_degree, "degree bound for instantiated classes c (default 16)");
  au->add_option("--model", cfg.model, "restrict to one model kind");
  au->add_option("--expr", cfg.expr, "audit a single relation (needs --model)");

  auto* ind = app.add_subcommand("independence", "degreewise kernel of the presentation map");
  add_common(ind, "json");
  ind->add_option("--genus", cfg.genus)->check(CLI::NonNegativeNumber);
  ind->add_option("--flavor", cfg.flavor)->check(CLI::IsMember({"closed", "pointed", "disc"}));
  ind->add_option("--max-degree", cfg.max_degree, "even degree bound (default 8n)");
  ind->add_option("--size-cap", cfg.size_cap, "max source monomials per degree (default 20000)")
      ->check(CLI::PositiveNumber);

  auto* me = app.add_subcommand("model-eval", "evaluate an expression in a bundle model");
  add_common(me, "text");
  me->add_option("--genus", cfg.genus)->check(CLI::NonNegativeNumber);
  me->add_option("--model", cfg.model)->required();
  me->add_option("--expr", cfg.expr)->required();
  me->add_option("--max-degree", cfg.max_degree);

  auto* basis = app.add_subcommand("basis", "monomial basis of H*(BSO(2n))");
  add_common(basis, "text");
  basis->add_option("--max-degree", cfg.max_degree, "default 4n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : unsupported;
  }
  if (cfg.format.empty())
    for (const auto& [sub, fmt] : default_formats)
      if (sub->parsed()) cfg.format = fmt;

  try {
    if (*lclass) return cmd_lclass(cfg, out);
    if (*nf) return cmd_normal_form(cfg, out);
    if (*au) return cmd_audit(cfg, out);
    if (*ind) return cmd_independence(cfg, out);
    if (*me) return cmd_model_eval(cfg, out);
    if (*basis) return cmd_basis(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return unsupported;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return unsupported;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return resource;
  }
  return unsupported;
}

}  // namespace taut::cli
