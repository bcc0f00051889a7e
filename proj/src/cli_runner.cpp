#include "mxinv/cli_runner.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

namespace mxinv {

using nlohmann::ordered_json;

namespace {

struct Session {
  RunConfig cfg;
  GFPtr f;
  GroupName group;
};

Session open_session(const RunConfig& cfg) {
  if (cfg.q > cfg.cap_q)
    throw std::invalid_argument("q = " + std::to_string(cfg.q) + " exceeds the cap of " +
                                std::to_string(cfg.cap_q) + " (raise with --cap-q)");
  auto [p, s] = factor_prime_power(cfg.q);
  GFPtr f = cfg.modulus.empty() ? GF::make(p, s) : GF::make(p, s, cfg.modulus);
  return Session{cfg, f, parse_group_name(cfg.group)};
}

Report make_report(const Session& ses) {
  Report r;
  r.q = ses.f->q();
  r.p = ses.f->p();
  r.s = ses.f->s();
  r.modulus = ses.f->modulus();
  r.group = ses.cfg.group;
  r.command = ses.cfg.command;
  return r;
}

std::string base_name(const std::string& shown) {
  auto paren = shown.find('(');
  return paren == std::string::npos ? shown : shown.substr(0, paren);
}

// What the structure theorems assert about invariance, per group. nullopt
// means the verdict is measured and reported without being counted.
std::optional<bool> expected_invariance(const std::string& shown, GroupName g, const GFPtr& f) {
  const std::string name = base_name(shown);
  const uint32_t q = f->q();
  const bool even = f->p() == 2;
  switch (g) {
    case GroupName::U2:
      return true;
    case GroupName::U2Tilde:
      if (name == "zeta") return false;
      if (name == "f0") return even ? std::optional<bool>(true) : std::optional<bool>(false);
      return true;
    case GroupName::SL2:
      if (name == "f2" || name == "f3" || name == "g0") return true;
      if (name == "k1") return even ? std::optional<bool>(true) : std::nullopt;
      if (name == "g1" || name == "g2") return q >= 5 ? std::optional<bool>(true) : std::nullopt;
      return std::nullopt;
    case GroupName::SL2Tilde:
      if (name == "f2" || name == "f3" || name == "g0") return true;
      if (name == "k1") return even ? std::optional<bool>(true) : std::nullopt;
      if (name == "g1") return q >= 5 ? std::optional<bool>(true) : std::nullopt;
      if (name == "g2") return q >= 5 ? std::optional<bool>(false) : std::nullopt;
      return std::nullopt;
    case GroupName::GL2:
      return std::nullopt;
  }
  return std::nullopt;
}

void add_invariance_results(Report& r, const Session& ses, bool include_poly_text) {
  auto spec = GroupSpec::make(ses.group, ses.f);
  for (const NamedInvariant& inv : named_for_group(ses.group, ses.f)) {
    auto check = verify_invariant(inv.poly, spec);
    auto expected = expected_invariance(inv.name, ses.group, ses.f);
    CheckResult c;
    c.check = "invariance:" + inv.name;
    if (expected.has_value())
      c.paper_claim = inv.name + (*expected ? " is invariant under " : " is not invariant under ") +
                      ses.cfg.group;
    else
      c.paper_claim = "invariance of " + inv.name + " under " + ses.cfg.group +
                      " is measured, not asserted";
    c.status = expected.has_value() ? (check.invariant == *expected ? "pass" : "fail") : "info";
    c.detail["degree"] = inv.degree;
    c.detail["invariant"] = check.invariant;
    if (!check.invariant) c.detail["witness"] = check.witness;
    if (include_poly_text) c.detail["polynomial"] = inv.poly.str();
    r.add(std::move(c));
  }
}

uint32_t default_hilbert_degree(GroupName g, const GeneratorSet& gs, uint32_t q) {
  if (g == GroupName::U2 || g == GroupName::U2Tilde) return std::min(2 * q + 2, 16u);
  uint32_t top = 0;
  for (uint32_t e : gs.series.numerator_exps) top = std::max(top, e);
  for (uint32_t e : gs.series.denominator_degrees) top = std::max(top, e);
  return std::min(top + 1, 17u);
}

void add_hilbert_results(Report& r, const Session& ses, const GeneratorSet& gs) {
  uint32_t D = ses.cfg.max_degree.value_or(default_hilbert_degree(ses.group, gs, ses.f->q()));
  auto spec = GroupSpec::make(ses.group, ses.f);
  auto report = hilbert_check(spec, gs.series, D, ses.cfg.caps);
  CheckResult c;
  c.check = "hilbert";
  c.paper_claim = "the Hilbert series of the " + ses.cfg.group + " invariant ring is " +
                  gs.series.str();
  c.status = report.pass ? "pass" : "fail";
  if (!gs.asserted) c.paper_claim += " (reproduced computationally, not theorem-backed)";
  ordered_json rows = ordered_json::array();
  for (const HilbertRow& row : report.rows) {
    ordered_json e;
    e["degree"] = row.degree;
    e["expected"] = row.expected;
    e["computed"] = row.computed;
    e["match"] = row.match;
    rows.push_back(std::move(e));
  }
  c.detail["max_degree"] = D;
  c.detail["rows"] = std::move(rows);
  r.add(std::move(c));
}

void add_hsop_results(Report& r, const Session& ses, const GeneratorSet& gs) {
  std::vector<Poly> polys;
  std::string names;
  for (const NamedInvariant& p : gs.primaries) {
    polys.push_back(p.poly);
    names += (names.empty() ? "" : ",") + p.name;
  }
  auto report = hsop_certify(polys, ses.cfg.caps);
  CheckResult c;
  c.check = "hsop";
  c.paper_claim = "{" + names + "} is a homogeneous system of parameters";
  c.status = report.zero_dimensional ? "pass" : "fail";
  c.detail["degrees"] = report.degrees;
  c.detail["degree_product"] = report.degree_product;
  c.detail["quotient_dimension"] = report.quotient_dim;
  c.detail["groebner_basis_size"] = report.basis_size;
  ordered_json pures = ordered_json::array();
  for (const Monomial& m : report.pure_powers) {
    for (size_t v = 0; v < 4; ++v)
      if (m.e[v] != 0) pures.push_back("x" + std::to_string(v + 1) + "^" + std::to_string(m.e[v]));
  }
  c.detail["pure_power_leads"] = std::move(pures);
  r.add(std::move(c));

  // for the extended groups the degree product matching the image order is
  // the polynomial-algebra certificate
  GroupName ext = (ses.group == GroupName::U2 || ses.group == GroupName::U2Tilde)
                      ? GroupName::U2Tilde
                      : GroupName::SL2Tilde;
  auto extspec = GroupSpec::make(ext, ses.f);
  CheckResult c2;
  c2.check = "degree-product";
  c2.paper_claim = "the product of the parameter degrees equals the order of the " +
                   group_name_str(ext) + " image";
  c2.status = report.degree_product == extspec.order_formula() ? "pass" : "fail";
  c2.detail["degree_product"] = report.degree_product;
  c2.detail["group_order"] = extspec.order_formula();
  r.add(std::move(c2));
}

void add_decompose_results(Report& r, const Session& ses, const GeneratorSet& gs) {
  const uint32_t sdeg = gs.secondary ? gs.secondary->degree : 0;
  uint32_t D = ses.cfg.max_degree.value_or(std::min(2 * sdeg + 2, 16u));
  auto spec = GroupSpec::make(ses.group, ses.f);
  std::vector<Poly> polys;
  std::string names;
  for (const NamedInvariant& p : gs.primaries) {
    polys.push_back(p.poly);
    names += (names.empty() ? "" : ",") + p.name;
  }
  Poly secondary = gs.secondary ? gs.secondary->poly : Poly::constant(ses.f, 1);
  auto report = decompose(polys, secondary, spec, D, ses.cfg.caps);
  CheckResult c;
  c.check = "decompose";
  c.paper_claim = gs.secondary
                      ? "the invariant ring is the free module on {1," + gs.secondary->name +
                            "} over the subalgebra generated by {" + names + "}, degreewise"
                      : "the invariant ring is the polynomial algebra on {" + names + "}, degreewise";
  c.status = report.pass ? "pass" : "fail";
  ordered_json rows = ordered_json::array();
  for (const DecompRow& row : report.rows) {
    ordered_json e;
    e["degree"] = row.degree;
    e["invariant_dim"] = row.invariant_dim;
    e["span_rank"] = row.span_rank;
    e["match"] = row.match;
    rows.push_back(std::move(e));
  }
  c.detail["max_degree"] = D;
  c.detail["rows"] = std::move(rows);
  r.add(std::move(c));
}

void add_relation_results(Report& r, const Session& ses, const GeneratorSet& gs) {
  if (!gs.secondary)
    throw std::invalid_argument("no generating relation: " + ses.cfg.group +
                                " has a polynomial invariant ring");
  std::vector<Poly> polys;
  for (const NamedInvariant& p : gs.primaries) polys.push_back(p.poly);
  auto rel = find_relation(polys, gs.secondary->poly, ses.cfg.caps);
  CheckResult c;
  c.check = "relation";
  c.paper_claim = "the five generators satisfy one monic quadratic relation in " +
                  gs.secondary->name + ", found explicitly with zero residual";
  c.status = rel.found && rel.residual_zero ? "pass" : "fail";
  c.detail["found"] = rel.found;
  if (rel.found) {
    c.detail["weighted_degree"] = rel.weighted_degree;
    c.detail["residual_zero"] = rel.residual_zero;
    c.detail["relation"] = rel.text;
    ordered_json vars = ordered_json::array();
    for (const NamedInvariant& p : gs.primaries) vars.push_back(p.name);
    vars.push_back(gs.secondary->name);
    c.detail["variables"] = std::move(vars);
  }
  r.add(std::move(c));
}

void add_reflection_results(Report& r, const Session& ses, const GeneratorSet& gs) {
  auto spec = GroupSpec::make(ses.group, ses.f);
  auto scan = reflection_scan(spec, ses.cfg.caps);
  const bool asserted_free = ses.group == GroupName::U2 || ses.group == GroupName::SL2;
  CheckResult c;
  c.check = "reflections";
  c.paper_claim = asserted_free
                      ? "the image of " + ses.cfg.group + " in GL4 contains no reflections"
                      : "reflection count of the " + ses.cfg.group + " image is measured";
  c.status = asserted_free ? (scan.count == 0 ? "pass" : "fail") : "info";
  c.detail["image_order"] = scan.scanned;
  c.detail["reflections"] = scan.count;
  if (!scan.witnesses.empty()) c.detail["witness_indices"] = scan.witnesses;
  r.add(std::move(c));

  std::vector<uint32_t> degrees;
  for (const NamedInvariant& p : gs.primaries) degrees.push_back(p.degree);
  auto predicted = predict_secondary_degree(degrees, scan.count == 0);
  CheckResult c2;
  c2.check = "secondary-degree";
  if (predicted.has_value()) {
    uint32_t expected = 0;
    for (uint32_t e : gs.series.numerator_exps) expected = std::max(expected, e);
    c2.paper_claim = "the module generator degree is the parameter degree sum minus 4";
    c2.status = asserted_free ? (*predicted == expected ? "pass" : "fail") : "info";
    c2.detail["predicted"] = *predicted;
    c2.detail["expected"] = expected;
  } else {
    c2.paper_claim = "no degree prediction: the image contains reflections";
    c2.status = "info";
  }
  r.add(std::move(c2));
}

void add_search_results(Report& r, const Session& ses, const GeneratorSet& gs) {
  if (!ses.cfg.search_degree) throw std::invalid_argument("search requires --degree");
  const uint32_t d = *ses.cfg.search_degree;
  auto spec = GroupSpec::make(ses.group, ses.f);
  std::vector<Poly> polys;
  std::string names;
  if (ses.cfg.primary_names.empty()) {
    for (const NamedInvariant& p : gs.primaries) {
      polys.push_back(p.poly);
      names += (names.empty() ? "" : ",") + p.name;
    }
  } else {
    for (const std::string& n : ses.cfg.primary_names) {
      polys.push_back(build_named(n, ses.f).poly);
      names += (names.empty() ? "" : ",") + n;
    }
  }
  auto found = secondary_search(spec, polys, d, ses.cfg.caps);
  CheckResult c;
  c.check = "search:d=" + std::to_string(d);
  c.paper_claim = "a degree-" + std::to_string(d) + " invariant of " + ses.cfg.group +
                  " outside the span of products of {" + names + "}";
  c.status = found.has_value() ? "pass" : "info";
  c.detail["found"] = found.has_value();
  if (found) {
    c.detail["polynomial"] = found->str();
    c.detail["terms"] = found->term_count();
    c.detail["invariant"] = verify_invariant(*found, spec).invariant;
  } else {
    c.detail["note"] = "products of the primaries already span this degree";
  }
  r.add(std::move(c));
}

}  // namespace

Report run_command(const RunConfig& cfg) {
  Session ses = open_session(cfg);
  Report r = make_report(ses);
  const std::string& cmd = cfg.command;

  if (cmd == "gens" || cmd == "verify") {
    add_invariance_results(r, ses, cmd == "gens");
    return r;
  }
  const bool needs_secondary = cmd == "decompose" || cmd == "relation" || cmd == "report";
  GeneratorSet gs = standard_generators(ses.group, ses.f, needs_secondary, cfg.caps);

  if (cmd == "hilbert") {
    add_hilbert_results(r, ses, gs);
  } else if (cmd == "hsop") {
    add_hsop_results(r, ses, gs);
  } else if (cmd == "decompose") {
    add_decompose_results(r, ses, gs);
  } else if (cmd == "relation") {
    add_relation_results(r, ses, gs);
  } else if (cmd == "reflections") {
    add_reflection_results(r, ses, gs);
  } else if (cmd == "search") {
    add_search_results(r, ses, gs);
  } else if (cmd == "report") {
    add_invariance_results(r, ses, false);
    add_reflection_results(r, ses, gs);
    add_hsop_results(r, ses, gs);
    add_hilbert_results(r, ses, gs);
    add_decompose_results(r, ses, gs);
    if (gs.secondary) add_relation_results(r, ses, gs);
  } else {
    throw std::invalid_argument("unknown command: " + cmd);
  }
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"transpose-action matrix invariants over finite fields"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string modulus_str, format = "table", primaries_csv;
  int threads = 0;
  int64_t max_degree = -1, search_degree = -1;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gens", "print the named invariants with degrees and verdicts"},
      {"verify", "run the invariance suite for one group"},
      {"hilbert", "compare graded invariant dimensions with the closed-form series"},
      {"hsop", "certify the standard parameter system via a Groebner basis"},
      {"decompose", "certify the free-module decomposition degreewise"},
      {"relation", "compute the generating relation and check its residual"},
      {"reflections", "scan the image for reflections and predict the secondary degree"},
      {"search", "find an invariant outside the product span at one degree"},
      {"report", "full verification pipeline for one group"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--q", cfg.q, "field order, a prime power")->required();
    sub->add_option("--modulus", modulus_str,
                    "extension modulus c0,c1,...,1 (low-degree first, monic)");
    sub->add_option("--group", cfg.group, "u2, u2tilde, sl2, sl2tilde or gl2")->required();
    sub->add_option("--max-degree", max_degree, "degree bound for graded checks");
    sub->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--threads", threads, "worker thread cap (default: INVAR_THREADS or all)");
    sub->add_option("--cap-monomials", cfg.caps.max_monomials, "largest graded component");
    sub->add_option("--cap-group", cfg.caps.max_group, "largest group image");
    sub->add_option("--cap-basis", cfg.caps.max_basis, "largest Groebner basis");
    sub->add_option("--cap-q", cfg.cap_q, "largest accepted field order");
    if (name == "search") {
      sub->add_option("--degree", search_degree, "degree to search")->required();
      sub->add_option("--primaries", primaries_csv,
                      "comma-separated invariant names spanning the product side");
    }
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (sub->count("--max-degree")) {
      if (max_degree < 0) throw std::invalid_argument("--max-degree must be non-negative");
      cfg.max_degree = uint32_t(max_degree);
    }
    if (cfg.command == "search") {
      if (search_degree < 0) throw std::invalid_argument("--degree must be non-negative");
      cfg.search_degree = uint32_t(search_degree);
    }
    if (!modulus_str.empty()) {
      std::stringstream ss(modulus_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.modulus.push_back(uint32_t(std::stoul(tok)));
    }
    if (!primaries_csv.empty()) {
      std::stringstream ss(primaries_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.primary_names.push_back(tok);
    }
    if (sub->count("--threads") == 0) {
      if (const char* env = std::getenv("INVAR_THREADS")) threads = std::stoi(env);
    }
    if (threads < 0) throw std::invalid_argument("--threads must be positive");
    if (threads > 0) omp_set_num_threads(threads);

    Report report = run_command(cfg);
    if (format == "json")
      out << report_to_json(report).dump(2) << "\n";
    else
      out << report_table(report);
    return report.verdict ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mxinv
