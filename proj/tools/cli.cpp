#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "json_io.hpp"

namespace lorhom::cli {

namespace {

constexpr const char* kSchemaVersion = "1";

Json report_header(const std::string& verb, Json inputs) {
  return {{"schema_version", kSchemaVersion}, {"verb", verb}, {"inputs", std::move(inputs)}};
}

int exit_for(const std::vector<CheckResult>& checks) {
  int code = kPass;
  for (const auto& c : checks) {
    if (c.status == Tri::No) return kFail;
    if (c.status == Tri::Unknown) code = kIndeterminate;
  }
  return code;
}

Json checks_json(const std::vector<CheckResult>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back(to_json(c));
  return a;
}

// ---- inputs shared by admissible / metric / analyze ----

struct SourceOpts {
  std::string g, l, m, theta, flat, case_name, eigen;
  std::size_t p = 1, q = 0;
};

void add_source_options(CLI::App* app, SourceOpts& s) {
  app->add_option("--g", s.g, "Lie algebra file for g");
  app->add_option("--l", s.l, "Lie algebra file for l (matrices inside g)");
  app->add_option("--m", s.m, "span file for m (default: Killing complement of l)");
  app->add_option("--theta", s.theta, "file {\"theta\": matrix} in g coordinates");
  app->add_option("--flat", s.flat, "Lie algebra file h; uses h ⋉ R^N with m = R^N");
  app->add_option("--case", s.case_name, "catalog row or family instead of files");
  app->add_option("--p", s.p, "catalog parameter p");
  app->add_option("--q", s.q, "catalog parameter q");
  app->add_option("--eigen", s.eigen, "contact eigenvalues, e.g. \"1,2;-1\"");
}

CatalogCase resolve_case(const std::string& name, std::size_t p, std::size_t q, const std::string& eigen) {
  const auto rows = wolf_names();
  if (std::find(rows.begin(), rows.end(), name) != rows.end()) return wolf_case(name, p);
  if (const auto fam = parse_family(name)) {
    if (eigen.empty()) throw UsageError("family '" + name + "' needs --eigen");
    ContactElementSpec spec{*fam, p, q, {}, {}};
    try {
      std::tie(spec.first, spec.second) = parse_eigen(eigen);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --eigen: ") + e.what());
    }
    return contact_case(spec);
  }
  for (auto& c : standard_cases())
    if (c.name == name) return c;
  throw UsageError("unknown catalog case '" + name + "' (see 'catalog list')");
}

struct Loaded {
  ReductiveDecomposition dec;
  std::optional<Matrix> theta;
  Json echo;
};

Loaded load_source(const SourceOpts& s) {
  Loaded out;
  if (!s.case_name.empty()) {
    out.echo = {{"case", s.case_name}, {"p", s.p}, {"q", s.q}, {"eigen", s.eigen}};
    const CaseData d = resolve_case(s.case_name, s.p, s.q, s.eigen).build();
    if (!d.dec) {
      std::string why = d.violations.empty() ? "C_p(Z) != 0" : d.violations.front();
      throw LieError("case has no valid decomposition: " + why);
    }
    out.dec = *d.dec;
    out.theta = d.theta;
    return out;
  }
  if (!s.flat.empty()) {
    out.echo = {{"flat", s.flat}};
    out.dec = flat_model(algebra_from_json(read_json_file(s.flat)));
    return out;
  }
  if (s.g.empty() || s.l.empty()) throw UsageError("need --g and --l, --flat, or --case");
  out.echo = {{"g", s.g}, {"l", s.l}};
  const auto g = algebra_from_json(read_json_file(s.g));
  const Subspace l = span_from_json(read_json_file(s.l), g);
  if (!s.theta.empty()) {
    out.echo["theta"] = s.theta;
    out.theta = keyed_matrix_from_json(read_json_file(s.theta), "theta");
    if (out.theta->rows() != g.dim() || out.theta->cols() != g.dim())
      throw UsageError("theta must be dim g x dim g");
  }
  if (!s.m.empty()) {
    out.echo["m"] = s.m;
    out.dec = make_decomposition(g, l, span_from_json(read_json_file(s.m), g), out.theta);
  } else {
    out.dec = reductive_complement(g, l, out.theta);
  }
  return out;
}

Json dims_json(const ReductiveDecomposition& d) {
  return {{"g", d.g.dim()}, {"l", d.l.span.dim()}, {"m", d.m.dim()}, {"m_l", d.m_l.dim()}, {"m_prime", d.m_prime.dim()}};
}

// ---- verbs ----

int do_classify(std::size_t space, const std::string& gram_path, const std::string& algebra_path, std::ostream& out,
                std::ostream& err) {
  Json inputs{{"algebra", algebra_path}};
  Matrix gram;
  if (!gram_path.empty()) {
    inputs["gram"] = gram_path;
    gram = keyed_matrix_from_json(read_json_file(gram_path), "gram");
  } else {
    inputs["space"] = space;
    gram = minkowski(space).gram;
  }
  const auto h = algebra_from_json(read_json_file(algebra_path));
  if (h.ambient_size() != gram.rows()) throw UsageError("algebra acts on the wrong dimension for this space");
  const DecompositionOptions opts;
  inputs["seed"] = opts.seed;
  const auto c = classify(gram, h, opts);

  Json r = report_header("classify", inputs);
  r["verdict"] = to_string(c.verdict);
  Json w = Json::object();
  if (!c.W.is_zero()) w["W"] = to_json(c.W);
  if (c.timelike) w["timelike"] = to_json(*c.timelike);
  w["k_part"] = to_json(c.k_part);
  if (c.d_witness) w["d"] = to_json(*c.d_witness);
  if (c.C0) w["C0"] = to_json(*c.C0);
  if (c.isotropic_pair) w["isotropic_pair"] = {to_json(c.isotropic_pair->first), to_json(c.isotropic_pair->second)};
  if (c.witness) w["invariant_subspace_without_complement"] = to_json(*c.witness);
  Json comps = Json::array();
  for (const auto& s : c.components) comps.push_back(to_json(s));
  w["components"] = comps;
  r["witnesses"] = w;
  r["diagnostics"] = c.diagnostics;
  const bool indeterminate = c.verdict == SubalgebraType::Indeterminate;
  r["checks"] = Json::array({Json{{"name", "verdict computed"}, {"status", indeterminate ? "indeterminate" : "pass"}}});
  out << r.dump(2) << '\n';
  err << "classify: " << to_string(c.verdict) << '\n';
  return indeterminate ? kIndeterminate : kPass;
}

int do_admissible(const SourceOpts& s, std::ostream& out, std::ostream& err) {
  const Loaded in = load_source(s);
  const auto rep = classify_admissible(in.dec);
  Json r = report_header("admissible", in.echo);
  r["dims"] = dims_json(in.dec);
  r["admissible"] = rep.admissible;
  r["subtype"] = to_string(rep.subtype);
  r["m_l"] = to_json(in.dec.m_l);
  if (rep.Z_witness) r["Z"] = to_json(*rep.Z_witness);
  r["minimality"] = tri_name(rep.minimality);
  if (!rep.failing_condition.empty()) r["failing_condition"] = rep.failing_condition;
  r["m_l_killing_intrinsic"] = to_json(rep.ml_killing);
  r["m_l_killing_restricted"] = to_json(rep.ml_restricted);
  r["checks"] = checks_json(rep.checks);
  out << r.dump(2) << '\n';
  err << "admissible: " << (rep.admissible ? "yes" : "no") << ", subtype " << to_string(rep.subtype)
      << ", minimality " << tri_name(rep.minimality) << '\n';
  return exit_for(rep.checks);
}

std::string regime(const Signature& s) {
  if (s.is_positive_definite()) return "euclidean";
  if (s.n_zero > 0) return "degenerate";
  if (s.is_lorentzian()) return "lorentzian";
  return "other";
}

int do_metric(const SourceOpts& s, const std::string& lambda_text, std::optional<std::size_t> z_index,
              std::ostream& out, std::ostream& err) {
  Rational lambda;
  try {
    lambda = parse_rational(lambda_text);
  } catch (const std::exception&) {
    throw UsageError("bad --lambda '" + lambda_text + "'");
  }
  Loaded in = load_source(s);
  const auto& dec = in.dec;
  if (!in.theta) {
    if (!signature(dec.g.killing()).is_negative_definite())
      throw UsageError("g is not compact: pass --theta with a Cartan involution");
    in.theta = Matrix::identity(dec.g.dim());
  }
  if (dec.m_l.is_zero()) throw LieError("m_l = 0: no invariant Lorentzian metric");
  Vector Z;
  if (z_index) {
    if (*z_index >= dec.m_l.dim()) throw UsageError("--Z index out of range for m_l");
    Z = dec.m_l.basis()[*z_index];
  } else {
    const auto rep = classify_admissible(dec);
    Z = rep.Z_witness ? *rep.Z_witness : dec.m_l.basis()[0];
  }
  const auto gm = invariant_euclidean_metric(dec, *in.theta);
  const Rational t = lambda_threshold(dec, gm, Z);
  const auto gl = lorentz_metric(dec, gm, Z, lambda);

  Json inputs = in.echo;
  inputs["lambda"] = to_string(lambda);
  if (z_index) inputs["Z_index"] = *z_index;
  Json r = report_header("metric", inputs);
  r["dims"] = dims_json(dec);
  r["m"] = to_json(dec.m);
  r["Z"] = to_json(Z);
  r["g_m"] = {{"gram", to_json(gm.gram)}, {"signature", to_json(gm.signature)}};
  r["threshold"] = to_string(t);
  r["lambda"] = to_string(lambda);
  r["g_lambda"] = {{"gram", to_json(gl.gram)}, {"signature", to_json(gl.signature)}};
  r["regime"] = regime(gl.signature);
  const std::vector<CheckResult> checks{
      {"g_m positive definite", gm.signature.is_positive_definite() ? Tri::Yes : Tri::No, {}},
      {"g_lambda ad_l-invariant", gl.invariance_certificate ? Tri::Yes : Tri::No, {}},
  };
  r["checks"] = checks_json(checks);
  out << r.dump(2) << '\n';
  err << "metric: lambda = " << to_string(lambda) << ", threshold = " << to_string(t) << ", " << regime(gl.signature)
      << '\n';
  return exit_for(checks);
}

int do_analyze(const SourceOpts& s, const std::string& type, const std::string& gram_path, std::ostream& out,
               std::ostream& err) {
  if (type != "II" && type != "III") throw UsageError("--type must be II or III");
  const Loaded in = load_source(s);
  const Matrix gram = keyed_matrix_from_json(read_json_file(gram_path), "gram");
  if (gram.rows() != in.dec.m.dim() || gram.cols() != in.dec.m.dim()) throw UsageError("gram must be dim m x dim m");
  Json inputs = in.echo;
  inputs["type"] = type;
  inputs["gram"] = gram_path;
  Json r = report_header("analyze", inputs);
  r["dims"] = dims_json(in.dec);
  std::vector<CheckResult> checks;
  bool consistent = false;
  std::string summary;
  if (type == "II") {
    const auto a = analyze_typeII(in.dec, gram);
    r["consistent"] = a.consistent;
    r["model"] = to_string(a.model);
    r["c"] = to_string(a.c);
    r["c2"] = to_string(a.c2);
    r["W"] = to_json(a.W);
    r["U"] = to_json(a.U);
    if (a.fixed_witness) r["fixed_witness"] = to_json(*a.fixed_witness);
    checks = a.checks;
    consistent = a.consistent;
    summary = to_string(a.model);
  } else {
    const auto a = analyze_typeIII(in.dec, gram);
    r["consistent"] = a.consistent;
    r["lambda"] = to_string(a.lambda);
    r["C0"] = to_json(a.C0);
    r["dichotomy"] = a.dichotomy;
    r["verdict"] = a.verdict;
    if (a.fixed_witness) r["fixed_witness"] = to_json(*a.fixed_witness);
    checks = a.checks;
    consistent = a.consistent;
    summary = a.verdict;
  }
  r["checks"] = checks_json(checks);
  out << r.dump(2) << '\n';
  err << "analyze type " << type << ": " << summary << '\n';
  if (!consistent && exit_for(checks) == kPass) return kFail;
  return exit_for(checks);
}

Json case_json(const CaseReport& c) {
  Json j{{"name", c.name}, {"formula", c.formula}, {"overall", tri_name(c.overall)}};
  j["dims"] = {{"g", c.dim_g}, {"l", c.dim_l}, {"m_l", c.dim_ml}, {"m_prime", c.dim_mprime}};
  if (c.admissibility) {
    j["subtype"] = to_string(c.admissibility->subtype);
    j["minimality"] = tri_name(c.admissibility->minimality);
  }
  if (c.threshold) j["threshold"] = to_string(*c.threshold);
  Json samples = Json::array();
  for (const auto& s : c.metric_samples)
    samples.push_back({{"lambda", to_string(s.lambda)}, {"signature", to_json(s.signature)}, {"regime", regime(s.signature)}});
  j["metric_samples"] = samples;
  j["checks"] = checks_json(c.checks);
  return j;
}

int do_catalog_list(std::ostream& out, std::ostream& err) {
  Json r = report_header("catalog list", Json::object());
  Json fams = Json::array();
  for (Family f : {Family::su_pq, Family::so_pq, Family::sp2n_R, Family::sp_pq, Family::so_n_H, Family::su_n,
                   Family::so_n, Family::sp_n})
    fams.push_back({{"name", to_string(f)}, {"realification", realification_note(f)}});
  r["families"] = fams;
  Json rows = Json::array();
  for (const auto& n : wolf_names()) rows.push_back(n);
  r["wolf_rows"] = rows;
  Json cases = Json::array();
  const auto std_cases = standard_cases();
  for (const auto& c : std_cases) cases.push_back(c.name);
  r["standard_cases"] = cases;
  Json ex = Json::array();
  for (const auto& s : exceptional_stubs())
    ex.push_back({{"name", s.name},
                  {"formula", s.formula},
                  {"dims", {{"g", s.dim_g}, {"l", s.dim_l}, {"m_l", s.dim_ml}, {"m_prime", s.dim_mprime}}},
                  {"verifiable", false}});
  r["exceptional_rows"] = ex;
  out << r.dump(2) << '\n';
  err << "catalog: " << std_cases.size() << " standard cases, " << rows.size() << " row builders\n";
  return kPass;
}

int do_catalog_verify(const std::string& name, std::size_t p, std::size_t q, const std::string& eigen, unsigned jobs,
                      std::ostream& out, std::ostream& err) {
  std::vector<CatalogCase> cases;
  if (name == "all") {
    cases = standard_cases();
  } else {
    cases.push_back(resolve_case(name, p, q, eigen));
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = verify_cases(cases, jobs);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  Json inputs{{"name", name}};
  if (name != "all") {
    inputs["p"] = p;
    inputs["q"] = q;
    inputs["eigen"] = eigen;
  }
  Json r = report_header("catalog verify", inputs);
  Json arr = Json::array();
  std::size_t pass = 0, fail = 0, unk = 0;
  std::vector<CheckResult> overall;
  for (const auto& c : reports) {
    arr.push_back(case_json(c));
    overall.push_back({c.name, c.overall, {}});
    (c.overall == Tri::Yes ? pass : c.overall == Tri::No ? fail : unk)++;
  }
  r["cases"] = arr;
  r["summary"] = {{"pass", pass}, {"fail", fail}, {"indeterminate", unk}};
  out << r.dump(2) << '\n';
  err << "catalog verify: " << pass << " pass, " << fail << " fail, " << unk << " indeterminate (" << secs << " s)\n";
  for (const auto& c : reports)
    if (c.overall != Tri::Yes)
      for (const auto& ch : c.checks)
        if (ch.status != Tri::Yes) err << "  " << c.name << ": " << ch.name << " " << tri_name(ch.status) << ' ' << ch.detail << '\n';
  return exit_for(overall);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for Lorentz subalgebras and homogeneous Lorentzian decompositions", "lorhom"};
  app.require_subcommand(1);

  std::size_t space = 0;
  std::string gram_path, algebra_path;
  auto* classify_cmd = app.add_subcommand("classify", "classify a subalgebra of so(V)");
  auto* space_opt = classify_cmd->add_option("--space", space, "n for R^{1,n+1} in Witt basis");
  classify_cmd->add_option("--gram", gram_path, "file {\"gram\": matrix}, any Lorentzian form")->excludes(space_opt);
  classify_cmd->add_option("--algebra", algebra_path, "Lie algebra file")->required();

  SourceOpts adm;
  auto* adm_cmd = app.add_subcommand("admissible", "admissibility, subtype and minimality of g = l + m");
  add_source_options(adm_cmd, adm);

  SourceOpts met;
  std::string lambda_text;
  std::optional<std::size_t> z_index;
  auto* met_cmd = app.add_subcommand("metric", "invariant Euclidean metric and its Lorentzian deformation");
  add_source_options(met_cmd, met);
  met_cmd->add_option("--lambda", lambda_text, "deformation parameter r/s")->required();
  met_cmd->add_option("--Z", z_index, "index into the basis of m_l (default: the classifier's Z)");

  SourceOpts ana;
  std::string type, ana_gram;
  auto* ana_cmd = app.add_subcommand("analyze", "structure of Type II / Type III isotropy");
  add_source_options(ana_cmd, ana);
  ana_cmd->add_option("--type", type, "II or III")->required();
  ana_cmd->add_option("--gram", ana_gram, "file {\"gram\": matrix} on m, Lorentzian")->required();

  auto* cat_cmd = app.add_subcommand("catalog", "classical algebras and decomposition rows");
  cat_cmd->require_subcommand(1);
  auto* list_cmd = cat_cmd->add_subcommand("list", "list catalog entries");
  std::string case_name, eigen;
  std::size_t p = 1, q = 0;
  unsigned jobs = 0;
  auto* ver_cmd = cat_cmd->add_subcommand("verify", "run the verification suite");
  ver_cmd->add_option("name", case_name, "row name, family, standard case name, or 'all'")->required();
  ver_cmd->add_option("--p", p, "parameter p");
  ver_cmd->add_option("--q", q, "parameter q");
  ver_cmd->add_option("--eigen", eigen, "contact eigenvalues, e.g. \"1,2;-1\"");
  ver_cmd->add_option("--jobs", jobs, "worker threads (0 = hardware)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string verb = classify_cmd->parsed() ? "classify"
                           : adm_cmd->parsed()    ? "admissible"
                           : met_cmd->parsed()    ? "metric"
                           : ana_cmd->parsed()    ? "analyze"
                           : list_cmd->parsed()   ? "catalog list"
                                                  : "catalog verify";
  try {
    if (verb == "classify") {
      if (gram_path.empty() && space_opt->count() == 0) throw UsageError("need --space or --gram");
      return do_classify(space, gram_path, algebra_path, out, err);
    }
    if (verb == "admissible") return do_admissible(adm, out, err);
    if (verb == "metric") return do_metric(met, lambda_text, z_index, out, err);
    if (verb == "analyze") return do_analyze(ana, type, ana_gram, out, err);
    if (verb == "catalog list") return do_catalog_list(out, err);
    return do_catalog_verify(case_name, p, q, eigen, jobs, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    // Mathematical failures still produce a report.
    Json r = report_header(verb, Json::object());
    r["error"] = e.what();
    r["checks"] = Json::array({Json{{"name", "input accepted"}, {"status", "fail"}, {"detail", e.what()}}});
    out << r.dump(2) << '\n';
    err << verb << ": " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace lorhom::cli
