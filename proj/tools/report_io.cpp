#include "report_io.hpp"

#include <sstream>

#include "acmwild/errors.hpp"

namespace acmwild::io {

namespace {

std::string_view mode_name(ACMVarietyDescriptor::Mode m) {
  return m == ACMVarietyDescriptor::Mode::complete_intersection ? "complete-intersection"
                                                                : "degree-data";
}

template <class T>
T required(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace

Json to_json(const CohomologyTable& table) {
  Json j;
  j["dim"] = table.dim;
  j["t_min"] = table.window.min;
  j["t_max"] = table.window.max;
  Json cells = Json::array();
  Json provenance = Json::array();
  if (table.window.size() > 0) {
    for (int i = 0; i <= table.dim; ++i) {
      cells.push_back(table.cells[static_cast<std::size_t>(i)]);
      Json row = Json::array();
      for (auto p : table.provenance[static_cast<std::size_t>(i)]) row.push_back(to_string(p));
      provenance.push_back(std::move(row));
    }
  }
  j["cells"] = std::move(cells);
  j["provenance"] = std::move(provenance);
  j["top_cokernel"] = table.top_cokernel;
  return j;
}

CohomologyTable table_from_json(const Json& j) {
  const int dim = required<int>(j, "dim");
  const TwistWindow window{required<int>(j, "t_min"), required<int>(j, "t_max")};
  auto table = CohomologyTable::zeros(dim, window, Provenance::exact_rank);
  if (window.size() == 0) return table;
  const auto& cells = j.at("cells");
  const auto& provenance = j.at("provenance");
  if (cells.size() != static_cast<std::size_t>(dim) + 1 || provenance.size() != cells.size()) {
    throw ParseError("table: expected " + std::to_string(dim + 1) + " rows");
  }
  for (int i = 0; i <= dim; ++i) {
    const auto row = static_cast<std::size_t>(i);
    if (cells[row].size() != window.size() || provenance[row].size() != window.size()) {
      throw ParseError("table: row " + std::to_string(i) + " does not match the window");
    }
    for (std::size_t c = 0; c < window.size(); ++c) {
      table.cells[row][c] = cells[row][c].get<std::int64_t>();
      table.provenance[row][c] = provenance_from_string(provenance[row][c].get<std::string>());
    }
  }
  table.top_cokernel = j.at("top_cokernel").get<std::vector<std::int64_t>>();
  if (table.top_cokernel.size() != window.size()) {
    throw ParseError("table: top_cokernel does not match the window");
  }
  return table;
}

Json to_json(const LinearFormMatrix& phi) {
  Json j;
  j["n"] = phi.n();
  j["rows"] = phi.rows();
  j["cols"] = phi.cols();
  j["prime"] = phi.field().characteristic();
  Json entries = Json::array();
  for (std::size_t r = 0; r < phi.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < phi.cols(); ++c) {
      auto e = phi.entry(r, c);
      row.push_back(std::vector<std::uint32_t>(e.begin(), e.end()));
    }
    entries.push_back(std::move(row));
  }
  j["coeffs"] = std::move(entries);
  return j;
}

LinearFormMatrix linear_form_matrix_from_json(const Json& j) {
  const int n = required<int>(j, "n");
  const auto rows = required<std::size_t>(j, "rows");
  const auto cols = required<std::size_t>(j, "cols");
  const PrimeField field(required<std::uint32_t>(j, "prime"));
  std::vector<PrimeField::Element> flat;
  const auto& entries = j.at("coeffs");
  if (entries.size() != rows) throw ParseError("phi: wrong number of rows");
  for (const auto& row : entries) {
    if (row.size() != cols) throw ParseError("phi: wrong number of columns");
    for (const auto& entry : row) {
      auto v = entry.get<std::vector<std::uint32_t>>();
      if (v.size() != static_cast<std::size_t>(n) + 1) throw ParseError("phi: wrong arity");
      flat.insert(flat.end(), v.begin(), v.end());
    }
  }
  return LinearFormMatrix(field, n, rows, cols, std::move(flat));
}

Json to_json(const SurjectivityCertificate& cert) {
  Json j;
  j["surjective_at_degree"] =
      cert.surjective_at_degree ? Json(*cert.surjective_at_degree) : Json(nullptr);
  j["searched_up_to"] = cert.searched_up_to;
  j["h0_phi1_iso"] = cert.h0_phi1_iso;
  return j;
}

SurjectivityCertificate certificate_from_json(const Json& j) {
  SurjectivityCertificate cert;
  if (!j.at("surjective_at_degree").is_null()) {
    cert.surjective_at_degree = j.at("surjective_at_degree").get<int>();
  }
  cert.searched_up_to = required<int>(j, "searched_up_to");
  cert.h0_phi1_iso = required<bool>(j, "h0_phi1_iso");
  return cert;
}

Json to_json(const StabilizerReport& report) {
  Json j;
  j["stab_dimension"] = report.stab_dimension;
  j["kac_value"] = report.kac_value;
  j["simple"] = report.simple;
  j["equations"] = report.equations;
  j["unknowns"] = report.unknowns;
  return j;
}

StabilizerReport stabilizer_from_json(const Json& j) {
  StabilizerReport r;
  r.stab_dimension = required<std::size_t>(j, "stab_dimension");
  r.kac_value = required<std::int64_t>(j, "kac_value");
  r.simple = required<bool>(j, "simple");
  r.equations = required<std::size_t>(j, "equations");
  r.unknowns = required<std::size_t>(j, "unknowns");
  return r;
}

Json to_json(const VanishingChaseTrace& trace) {
  Json j;
  j["target_index"] = trace.target_index;
  j["excluded_twists"] = trace.excluded_twists;
  Json chain = Json::array();
  for (const auto& e : trace.chain) {
    Json entry;
    entry["step"] = e.step;
    entry["index"] = e.index;
    entry["twist_offsets"] = e.twist_offsets;
    entry["justification"] = to_string(e.justification);
    chain.push_back(std::move(entry));
  }
  j["chain"] = std::move(chain);
  j["certified"] = trace.certified;
  return j;
}

VanishingChaseTrace trace_from_json(const Json& j) {
  VanishingChaseTrace trace;
  trace.target_index = required<int>(j, "target_index");
  trace.excluded_twists = required<std::vector<int>>(j, "excluded_twists");
  for (const auto& e : j.at("chain")) {
    ChaseEntry entry;
    entry.step = required<int>(e, "step");
    entry.index = required<int>(e, "index");
    entry.twist_offsets = required<std::vector<int>>(e, "twist_offsets");
    entry.justification = justification_from_string(required<std::string>(e, "justification"));
    trace.chain.push_back(std::move(entry));
  }
  trace.certified = required<bool>(j, "certified");
  return trace;
}

Json to_json(const AcmVerdict& verdict) {
  Json j;
  j["s"] = verdict.s;
  j["status"] = to_string(verdict.status);
  Json witnesses = Json::array();
  for (const auto& w : verdict.witnesses) {
    witnesses.push_back(Json{{"i", w.i}, {"t", w.t}, {"value", w.value}});
  }
  j["witnesses"] = std::move(witnesses);
  Json missing = Json::array();
  for (const auto& m : verdict.missing) {
    missing.push_back(Json{{"i", m.i}, {"t", m.t ? Json(*m.t) : Json(nullptr)}});
  }
  j["missing"] = std::move(missing);
  return j;
}

AcmVerdict verdict_from_json(const Json& j) {
  AcmVerdict v;
  v.s = required<int>(j, "s");
  v.status = acm_status_from_string(required<std::string>(j, "status"));
  for (const auto& w : j.at("witnesses")) {
    v.witnesses.push_back(
        {required<int>(w, "i"), required<int>(w, "t"), required<std::int64_t>(w, "value")});
  }
  for (const auto& m : j.at("missing")) {
    MissingCell cell;
    cell.i = required<int>(m, "i");
    if (!m.at("t").is_null()) cell.t = m.at("t").get<int>();
    v.missing.push_back(cell);
  }
  return v;
}

Json to_json(const ACMVarietyDescriptor& x) {
  Json j;
  j["mode"] = mode_name(x.mode());
  j["n"] = x.n();
  j["dimension"] = x.dimension();
  j["codimension"] = x.codimension();
  j["ci_degrees"] = x.ci_degrees();
  j["twists"] = x.resolution().twists;
  Json forms = Json::array();
  for (const auto& f : x.forms()) {
    forms.push_back(Json{{"degree", f.degree}, {"coeffs", f.coeffs}});
  }
  j["forms"] = std::move(forms);
  j["prime"] = x.field() ? Json(x.field()->characteristic()) : Json(nullptr);
  return j;
}

ACMVarietyDescriptor variety_from_json(const Json& j) {
  const auto mode = required<std::string>(j, "mode");
  const int n = required<int>(j, "n");
  if (mode == "degree-data") {
    ResolutionDegreeData res;
    res.n = n;
    res.twists = required<std::vector<std::vector<int>>>(j, "twists");
    return ACMVarietyDescriptor::from_degree_data(std::move(res));
  }
  if (mode != "complete-intersection") throw ParseError("unknown variety mode '" + mode + "'");
  const auto& forms = j.at("forms");
  if (forms.empty()) {
    return ACMVarietyDescriptor::complete_intersection(
        n, required<std::vector<int>>(j, "ci_degrees"));
  }
  std::vector<HomogeneousForm> parsed;
  for (const auto& f : forms) {
    parsed.push_back(HomogeneousForm{n, required<int>(f, "degree"),
                                     required<std::vector<std::uint32_t>>(f, "coeffs")});
  }
  return ACMVarietyDescriptor::complete_intersection(
      n, std::move(parsed), PrimeField(required<std::uint32_t>(j, "prime")));
}

Json to_json(const WildnessReport& r) {
  Json j;
  j["report"] = "wildness-certificate";
  j["tool_version"] = r.tool_version;
  j["prime"] = r.prime;
  j["seed"] = r.seed;
  j["accepted_seed"] = r.accepted_seed;
  j["attempts"] = r.attempts;
  j["n"] = r.n;
  j["a"] = r.a;
  j["s"] = r.s;
  j["verdict"] = r.verdict;
  j["rank"] = r.rank;
  j["family_dimension"] = r.family_dimension;
  j["veronese_bound"] = r.veronese_bound;
  j["ambient_dim_for_s"] = r.ambient_dim_for_s;
  j["checks"] = Json{{"genericity", r.checks.genericity},
                     {"h0_iso", r.checks.h0_iso},
                     {"simplicity", r.checks.simplicity},
                     {"vanishing_certificate", r.checks.vanishing_certificate},
                     {"acm_wrt_s", r.checks.acm_wrt_s}};
  j["variety"] = to_json(r.variety);
  j["surjectivity"] = to_json(r.surjectivity);
  j["stabilizer"] = to_json(r.stabilizer);
  Json traces = Json::array();
  for (const auto& t : r.vanishing_certificate) traces.push_back(to_json(t));
  j["vanishing_certificate"] = std::move(traces);
  j["restricted_table"] = r.restricted_table ? to_json(*r.restricted_table) : Json(nullptr);
  j["acm"] = to_json(r.acm);
  j["phi"] = to_json(r.phi);
  return j;
}

WildnessReport wildness_report_from_json(const Json& j) {
  if (j.value("report", std::string{}) != "wildness-certificate") {
    throw ParseError("not a wildness certificate");
  }
  WildnessReport r;
  r.tool_version = required<std::string>(j, "tool_version");
  r.prime = required<std::uint32_t>(j, "prime");
  r.seed = required<std::uint64_t>(j, "seed");
  r.accepted_seed = required<std::uint64_t>(j, "accepted_seed");
  r.attempts = required<int>(j, "attempts");
  r.n = required<int>(j, "n");
  r.a = required<int>(j, "a");
  r.s = required<int>(j, "s");
  r.verdict = required<bool>(j, "verdict");
  r.rank = required<int>(j, "rank");
  r.family_dimension = required<std::int64_t>(j, "family_dimension");
  r.veronese_bound = required<std::int64_t>(j, "veronese_bound");
  r.ambient_dim_for_s = required<std::int64_t>(j, "ambient_dim_for_s");
  const auto& checks = j.at("checks");
  r.checks.genericity = required<bool>(checks, "genericity");
  r.checks.h0_iso = required<bool>(checks, "h0_iso");
  r.checks.simplicity = required<bool>(checks, "simplicity");
  r.checks.vanishing_certificate = required<bool>(checks, "vanishing_certificate");
  r.checks.acm_wrt_s = required<bool>(checks, "acm_wrt_s");
  r.variety = variety_from_json(j.at("variety"));
  r.surjectivity = certificate_from_json(j.at("surjectivity"));
  r.stabilizer = stabilizer_from_json(j.at("stabilizer"));
  for (const auto& t : j.at("vanishing_certificate")) {
    r.vanishing_certificate.push_back(trace_from_json(t));
  }
  if (!j.at("restricted_table").is_null()) {
    r.restricted_table = table_from_json(j.at("restricted_table"));
  }
  r.acm = verdict_from_json(j.at("acm"));
  r.phi = linear_form_matrix_from_json(j.at("phi"));
  return r;
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string table_markdown(const CohomologyTable& table) {
  std::ostringstream out;
  out << "| i \\ t |";
  for (int t = table.window.min; t <= table.window.max; ++t) out << ' ' << t << " |";
  out << "\n|---|";
  for (std::size_t c = 0; c < table.window.size(); ++c) out << "---|";
  out << '\n';
  for (int i = 0; i <= table.dim; ++i) {
    out << "| " << i << " |";
    for (int t = table.window.min; t <= table.window.max; ++t) {
      out << ' ' << table.at(i, t);
      if (table.source(i, t) == Provenance::certified_vanishing) out << '*';
      out << " |";
    }
    out << '\n';
  }
  return out.str();
}

std::string report_markdown(const WildnessReport& r) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "pass" : "FAIL"; };
  out << "# Wildness certificate\n\n";
  out << "- verdict: " << (r.verdict ? "wild representation type certified" : "not certified")
      << '\n';
  out << "- X: " << mode_name(r.variety.mode()) << " of dimension " << r.variety.dimension()
      << " in P^" << r.n;
  if (!r.variety.ci_degrees().empty()) {
    out << ", degrees";
    for (int e : r.variety.ci_degrees()) out << ' ' << e;
  }
  out << '\n';
  out << "- polarization: O_X(" << r.s << "), embedding in P^" << r.ambient_dim_for_s << '\n';
  out << "- bundle rank " << r.rank << ", family dimension " << r.family_dimension
      << ", Veronese bound " << r.veronese_bound << '\n';
  out << "- prime " << r.prime << ", seed " << r.seed << " (accepted " << r.accepted_seed
      << " after " << r.attempts << " attempt" << (r.attempts == 1 ? "" : "s") << ")\n";
  out << "- tool version " << r.tool_version << "\n\n";
  out << "| check | result |\n|---|---|\n";
  out << "| genericity | " << yes(r.checks.genericity) << " |\n";
  out << "| H^0(phi(1)) isomorphism | " << yes(r.checks.h0_iso) << " |\n";
  out << "| simplicity (stabilizer dim " << r.stabilizer.stab_dimension << ", Kac value "
      << r.stabilizer.kac_value << ") | " << yes(r.checks.simplicity) << " |\n";
  out << "| vanishing certificate | " << yes(r.checks.vanishing_certificate) << " |\n";
  out << "| ACM for O_X(" << r.s << ") | " << yes(r.checks.acm_wrt_s) << " |\n";
  if (r.restricted_table) {
    out << "\n## h^i(X, E(t))\n\n" << table_markdown(*r.restricted_table);
    out << "\n`*` certified vanishing\n";
  }
  return out.str();
}

}  // namespace acmwild::io
