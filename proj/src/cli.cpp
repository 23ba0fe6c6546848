#include "kncrystal/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kncrystal/crystal.hpp"
#include "kncrystal/csp.hpp"
#include "kncrystal/error.hpp"
#include "kncrystal/qpoly.hpp"

namespace kn::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  int code = kSuccess;
  std::string text;
};

std::string render_json(const Json& j) { return j.dump() + "\n"; }

// ---- enumerate -------------------------------------------------------------

Outcome cmd_enumerate(const RunConfig& cfg) {
  const TableauSet set = enumerate_by_crystal(cfg.shape, cfg.m, cfg.cap);
  if (cfg.format == Format::json) return {kSuccess, render_json(to_json(set))};
  std::ostringstream os;
  os << "SP" << cfg.shape.to_string() << ", m=" << cfg.m << ": " << set.size() << " tableaux\n\n";
  for (const KNTableau& t : set.members()) os << pretty(t) << "\n";
  os << "weight multiplicities\n";
  for (const auto& [chi, count] : set.weight_index()) os << "  " << chi.to_string() << "  " << count << "\n";
  return {kSuccess, os.str()};
}

// ---- graph -----------------------------------------------------------------

Outcome cmd_graph(const RunConfig& cfg) {
  const TableauSet set = enumerate_by_crystal(cfg.shape, cfg.m, cfg.cap);
  const std::vector<CrystalEdge> edges = crystal_edges(set.members());
  switch (cfg.format) {
    case Format::dot: return {kSuccess, to_dot(set.members(), edges)};
    case Format::json: {
      Json j;
      j["shape"] = cfg.shape.parts();
      j["m"] = cfg.m;
      Json vertices = Json::array();
      for (const KNTableau& t : set.members()) vertices.push_back(t.to_json());
      Json ej = Json::array();
      for (const CrystalEdge& e : edges) ej.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
      j["vertices"] = std::move(vertices);
      j["edges"] = std::move(ej);
      return {kSuccess, render_json(j)};
    }
    case Format::table: {
      std::ostringstream os;
      os << set.size() << " vertices, " << edges.size() << " edges\n";
      for (const CrystalEdge& e : edges)
        os << set.members()[e.from].serialize() << " -" << e.label << "-> "
           << set.members()[e.to].serialize() << "\n";
      return {kSuccess, os.str()};
    }
  }
  return {kUsage, ""};
}

// ---- csp -------------------------------------------------------------------

std::string value_or_dash(const std::optional<BigInt>& v) { return v ? v->str() : "non-integer"; }

Outcome cmd_csp(const RunConfig& cfg) {
  const TableauSet set = enumerate_by_crystal(cfg.shape, cfg.m, cfg.cap);
  const CspReport report = verify_csp(set, sigma_action());
  const int code = report.verdict ? kSuccess : kVerdictFalse;
  if (cfg.format == Format::json) return {code, render_json(report.to_json())};
  std::ostringstream os;
  os << "shape " << cfg.shape.to_string() << ", m=" << cfg.m << ", |SP|=" << set.size() << "\n";
  os << "hypotheses: " << report.hypotheses.describe() << "\n";
  os << "orbit census (size: count): " << report.census.to_string() << "\n";
  os << "f_sp mod q^" << 2 * cfg.m << "-1: " << report.f_sp_residue.to_string() << "\n";
  os << std::setw(4) << "d" << std::setw(10) << "fixed" << std::setw(14) << "f_sp(w^d)" << std::setw(14)
     << "X(w^d)" << "\n";
  for (const RootEvaluation& e : report.evaluations)
    os << std::setw(4) << e.d << std::setw(10) << e.fixed << std::setw(14) << value_or_dash(e.poly)
       << std::setw(14) << value_or_dash(e.x_poly) << (e.agrees() ? "" : "   <- mismatch") << "\n";
  os << "verdict: " << (report.verdict ? "cyclic sieving holds" : "cyclic sieving fails") << "\n";
  return {code, os.str()};
}

// ---- check -----------------------------------------------------------------

enum class Status { pass, fail, not_applicable };

struct CheckResult {
  std::string name;
  Status status;
  std::string detail;
};

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "n/a";
  }
  return "?";
}

Status verdict(bool ok) { return ok ? Status::pass : Status::fail; }

std::vector<CheckResult> run_checks(const Partition& shape, int m, std::size_t cap) {
  std::vector<CheckResult> out;
  const TableauSet set = enumerate_by_crystal(shape, m, cap);
  const Hypotheses hyp = hypotheses_hold(shape, m);
  const int n = shape.size();

  const TableauSet filtered = enumerate_by_filter(shape, m, cap);
  out.push_back({"crystal closure equals KN filter", verdict(set == filtered),
                 std::to_string(set.size()) + " vs " + std::to_string(filtered.size())});

  bool all_valid = true;
  for (const KNTableau& t : set.members()) all_valid = all_valid && !find_kn_violation(shape, t.rows(), m);
  out.push_back({"crystal members satisfy the KN conditions", verdict(all_valid), ""});

  const BigInt hc = hook_content_count(shape, m);
  out.push_back({"hook-content count equals |SP|", verdict(hc == set.size()), "hook-content " + hc.str()});

  bool pwr_ok = true;
  for (const KNTableau& t : set.members()) pwr_ok = pwr_ok && pwr_wt(t.weight(), n, m) == pwr_tab(t);
  out.push_back({"pwr from weight equals pwr from tableau", verdict(pwr_ok), ""});

  const IntPoly x = x_poly(set);
  const IntPoly f = f_sp(shape, m);
  out.push_back({"X(q) = q^kappa f_sp(q)", verdict(x == f.shifted(static_cast<std::size_t>(shape.kappa()))),
                 "X(q) = " + x.to_string()});
  out.push_back({"X(q) = determinant quotient", verdict(x == determinant_poly(shape, m)), ""});

  const StaircaseParts mu(shape, m);
  out.push_back({"numerator determinant closed form",
                 verdict(determinant(staircase_matrix(mu)) == closed_form_det(mu)), ""});
  out.push_back({"denominator determinant closed form",
                 verdict(determinant(staircase_matrix(StaircaseParts(Partition(), m))) == closed_form_denominator(m)),
                 ""});

  bool symmetric = true;
  const auto& index = set.weight_index();
  for (const auto& [chi, count] : index)
    for (int i = 1; i <= m; ++i) {
      auto it = index.find(reflect(chi, i));
      symmetric = symmetric && it != index.end() && it->second == count;
    }
  out.push_back({"weight multiplicities invariant under signed permutations", verdict(symmetric), ""});

  bool sigma_i_ok = true;
  for (const KNTableau& t : set.members())
    for (int i = 1; i <= m; ++i) {
      const KNTableau s = sigma_i(t, i);
      sigma_i_ok = sigma_i_ok && s.weight() == reflect(t.weight(), i) && sigma_i(s, i) == t;
    }
  out.push_back({"sigma_i is an involution acting as s_i on weights", verdict(sigma_i_ok), ""});

  bool sigma_ok = true;
  for (const KNTableau& t : set.members()) {
    KNTableau cur = t;
    Weight w = t.weight();
    for (int k = 0; k < 2 * m; ++k) {
      cur = sigma(cur);
      w = rotate_weight(w);
      sigma_ok = sigma_ok && cur.weight() == w;
    }
    sigma_ok = sigma_ok && cur == t;
  }
  out.push_back({"sigma rotates weights and sigma^(2m) = id", verdict(sigma_ok), ""});

  const std::string hyp_note = "hypotheses fail: " + hyp.describe();
  auto conditional = [&](const std::string& name, bool ok, const std::string& diag) {
    if (hyp.hold())
      out.push_back({name, verdict(ok), diag});
    else
      out.push_back({name, Status::not_applicable, hyp_note + "; observed " + (ok ? "holds" : "does not hold") +
                                                       (diag.empty() ? "" : " (" + diag + ")")});
  };

  const OrbitTheoremReport orbit = check_orbit_theorem(set, sigma_action());
  conditional("every sigma-orbit has size 2m", orbit.all_full, "census " + orbit.census.to_string());

  std::vector<Weight> weights;
  for (const auto& [chi, count] : index) weights.push_back(chi);
  const BlockPartition blocks = a_chi_blocks(weights);
  out.push_back({"A_chi blocks are equal or disjoint and stay in wt(SP)", verdict(blocks.disjoint && blocks.closed),
                 std::to_string(blocks.blocks.size()) + " blocks"});
  bool sized = std::all_of(blocks.blocks.begin(), blocks.blocks.end(),
                           [&](const auto& b) { return b.size() == static_cast<std::size_t>(2 * m); });
  conditional("every A_chi block has 2m weights", sized, "");

  bool residues = true;
  for (const auto& b : blocks.blocks) residues = residues && check_residue_lemma(*b.begin(), n, m).complete;
  conditional("pwr over each A_chi block is a complete residue system mod 2m", residues, "");

  const EquivReport equiv = check_equiv_theorem(set);
  conditional("X(q) mod q^(2m)-1 is flat", equiv.flat, "residue " + equiv.residue.to_string());

  const CspReport csp = verify_csp(set, sigma_action());
  out.push_back({"fixed-point counts agree with the orbit census", verdict(csp.census_consistent), ""});
  conditional("cyclic sieving with f_sp", csp.verdict, "f_sp residue " + csp.f_sp_residue.to_string());
  return out;
}

Outcome cmd_check(const RunConfig& cfg) {
  const std::vector<CheckResult> results = run_checks(cfg.shape, cfg.m, cfg.cap);
  const bool failed =
      std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::fail; });
  const int code = failed ? kVerdictFalse : kSuccess;
  if (cfg.format == Format::json) {
    Json checks = Json::array();
    for (const CheckResult& r : results)
      checks.push_back({{"name", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}});
    Json j;
    j["shape"] = cfg.shape.parts();
    j["m"] = cfg.m;
    j["hypotheses"] = hypotheses_hold(cfg.shape, cfg.m).to_json();
    j["checks"] = std::move(checks);
    j["passed"] = !failed;
    return {code, render_json(j)};
  }
  std::ostringstream os;
  for (const CheckResult& r : results) {
    os << std::left << std::setw(5) << status_name(r.status) << r.name;
    if (!r.detail.empty()) os << "  [" << r.detail << "]";
    os << "\n";
  }
  os << (failed ? "FAILED\n" : "OK\n");
  return {code, os.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystal combinatorics on symplectic KN tableaux"};
  app.require_subcommand(1);

  std::string shape_text;
  int m = 0;
  std::string format_text;
  std::string out_path;
  std::size_t cap = kDefaultEnumerationCap;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--shape", shape_text, "partition, comma separated (\"\" for the empty shape)")->required();
    sub->add_option("--m", m, "rank of C_m")->required();
    sub->add_option("--format", format_text, "json | table | dot");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--cap", cap, "maximum number of tableaux to enumerate");
  };
  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate SP(shape, 2m)");
  CLI::App* graph = app.add_subcommand("graph", "export the crystal graph");
  CLI::App* csp = app.add_subcommand("csp", "verify cyclic sieving under sigma");
  CLI::App* check = app.add_subcommand("check", "run every identity and orbit check");
  for (CLI::App* sub : {enumerate, graph, csp, check}) add_common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.m = m;
  cfg.cap = cap;
  cfg.out_path = out_path;
  try {
    cfg.shape = Partition::parse(shape_text);
    if (cfg.m < 1) throw InvalidArgument("--m must be at least 1");
    if (cfg.shape.length() > cfg.m)
      throw InvalidArgument("shape " + cfg.shape.to_string() + " has more than m=" + std::to_string(cfg.m) + " rows");
    if (cfg.cap < 1) throw InvalidArgument("--cap must be at least 1");
    const bool is_graph = cfg.command == "graph";
    if (format_text.empty())
      cfg.format = is_graph ? Format::dot : Format::json;
    else if (format_text == "json")
      cfg.format = Format::json;
    else if (format_text == "table")
      cfg.format = Format::table;
    else if (format_text == "dot" && is_graph)
      cfg.format = Format::dot;
    else
      throw InvalidArgument("--format " + format_text + " not valid for " + cfg.command);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Outcome result;
  try {
    if (cfg.command == "enumerate")
      result = cmd_enumerate(cfg);
    else if (cfg.command == "graph")
      result = cmd_graph(cfg);
    else if (cfg.command == "csp")
      result = cmd_csp(cfg);
    else
      result = cmd_check(cfg);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (cfg.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out_path << "\n";
      return kUsage;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace kn::cli
