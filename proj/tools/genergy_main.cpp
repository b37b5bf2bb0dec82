#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "genergy/canon.hpp"
#include "genergy/verify.hpp"

using namespace genergy;

namespace {

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::Internal:
    case Errc::ToleranceUnreachable:
    case Errc::QuadratureFailure: return 1;
    default: return 2;  // bad input of one kind or another
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out_path);
    f << text << "\n";
  }
}

std::string graph_text(const Graph& g, const std::string& format) {
  if (format == "graph6") return to_graph6(g);
  if (format == "json") return graph_to_json(g);
  std::ostringstream os;  // human
  os << "n=" << g.n << " m=" << g.edge_count() << " edges:";
  for (auto [u, v] : g.edges()) os << " " << u << "-" << v;
  return os.str();
}

double default_tol(double fallback) {
  if (const char* env = std::getenv("GENERGY_TOL")) {
    try {
      double v = std::stod(env);
      if (v > 0) return v;
    } catch (...) {
      fail(Errc::ParseError, "GENERGY_TOL is not a number");
    }
  }
  return fallback;
}

struct RunConfig {
  double tolerance = 1e-9;
  int jobs = 1;
  std::string format;
  std::string output;
};

void load_config(const std::string& path, RunConfig& cfg) {
  std::ifstream f(path);
  if (!f) fail(Errc::ParseError, "config file not readable: " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("config: ") + e.what());
  }
  if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
  if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (cfg.tolerance <= 0 || cfg.jobs < 1) fail(Errc::ParseError, "config: tolerance > 0 and jobs >= 1 required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-energy toolkit: bipartite tricyclic families, exact characteristic "
               "polynomials, quasi-order comparison, certified energies"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.tolerance = default_tol(1e-9);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (tolerance, jobs, format, output)");

  std::string spec1, spec2, format, out_path;
  double tol = -1, gap_tol = -1;
  int n = 0, jobs = 1;
  std::string mode = "central", method = "sturm", cycles, json_path;
  std::vector<std::string> claim_ids;
  bool no_energies = false;

  auto* cb = app.add_subcommand("build", "construct a family member");
  cb->add_option("spec", spec1, "family spec, e.g. theta2:20:6,6,6:3,2,2")->required();
  cb->add_option("--format", format, "graph6|json|human");
  cb->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* cp = app.add_subcommand("charpoly", "exact characteristic polynomial");
  cp->add_option("spec", spec1)->required();
  cp->add_option("--format", format, "human|json");
  cp->add_option("-o,--output", out_path);

  auto* cs = app.add_subcommand("bseq", "b-coefficients of a bipartite family member");
  cs->add_option("spec", spec1)->required();
  cs->add_option("--format", format, "human|json|csv");
  cs->add_option("-o,--output", out_path);

  auto* ce = app.add_subcommand("energy", "certified energy enclosure (or coulson estimate)");
  ce->add_option("spec", spec1)->required();
  ce->add_option("--tol", tol, "enclosure width target (default 1e-9 or GENERGY_TOL)");
  ce->add_option("--method", method, "sturm|coulson");
  ce->add_option("-o,--output", out_path);

  auto* cc = app.add_subcommand("compare", "quasi-order comparison, energy fallback when incomparable");
  cc->add_option("spec1", spec1)->required();
  cc->add_option("spec2", spec2)->required();
  cc->add_option("--gap-tol", gap_tol, "energy gap tolerance (default 1e-6)");
  cc->add_option("--format", format, "human|json|csv");
  cc->add_option("-o,--output", out_path);

  auto* cn = app.add_subcommand("enumerate", "central structures or the full class");
  cn->add_option("--n", n, "order")->required();
  cn->add_option("--mode", mode, "central|full");
  cn->add_option("--cycles", cycles, "a,b,k filter (central mode)");
  cn->add_option("--format", format, "graph6|json|specs");
  cn->add_option("-o,--output", out_path);

  auto* cv = app.add_subcommand("verify", "replay the case analyses on their grids");
  cv->add_option("claims", claim_ids,
                 "claim ids: L3.3 T3.4 L3.5 L3.6 L3.9 L3.10 T3.8 background identities "
                 "scan:N flatten:N all (default: all)");
  cv->add_option("--jobs", jobs, "worker threads");
  cv->add_option("--json", json_path, "also write the JSON report here");
  cv->add_option("-o,--output", out_path, "markdown report file (default stdout)");

  auto* cx = app.add_subcommand("scan", "quasi-order scan of all central structures vs P_n^{6,6,6}");
  cx->add_option("--n", n, "order (>= 20)")->required();
  cx->add_flag("--no-energies", no_energies, "skip energy comparisons for exceptional members");
  cx->add_option("--json", json_path);
  cx->add_option("-o,--output", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) load_config(config_path, cfg);
    if (tol <= 0) tol = cfg.tolerance;
    if (gap_tol <= 0) gap_tol = 1e-6;
    if (jobs == 1 && cfg.jobs > 1) jobs = cfg.jobs;
    if (format.empty()) format = cfg.format;
    if (out_path.empty()) out_path = cfg.output;

    if (cb->parsed()) {
      if (format.empty()) format = "graph6";
      emit(graph_text(build(FamilySpec::parse(spec1)), format), out_path);
    } else if (cp->parsed()) {
      IntPoly p = charpoly_oracle(build(FamilySpec::parse(spec1)));
      emit(format == "json" ? p.to_json() : p.to_string(), out_path);
    } else if (cs->parsed()) {
      Graph g = build(FamilySpec::parse(spec1));
      BSeq b = b_sequence(g);
      if (format == "json") {
        nlohmann::json j;
        j["n"] = b.n;
        for (const auto& x : b.b) j["b"].push_back(x.str());
        emit(j.dump(), out_path);
      } else if (format == "csv") {
        std::ostringstream os;
        for (std::size_t i = 0; i < b.b.size(); ++i) os << (i ? "," : "") << b.b[i].str();
        emit(os.str(), out_path);
      } else {
        emit(b.to_string(), out_path);
      }
    } else if (ce->parsed()) {
      Graph g = build(FamilySpec::parse(spec1));
      nlohmann::json j;
      j["spec"] = spec1;
      if (method == "coulson") {
        double est = coulson_energy(g, tol < 1e-6 ? 1e-6 : tol);
        j["energy_lo"] = est;
        j["energy_hi"] = est;
        j["method"] = "coulson";
      } else if (method == "sturm") {
        EnergyEnclosure e = energy_certified(g, tol);
        j["energy_lo"] = e.lo.to_double();
        j["energy_hi"] = e.hi.to_double();
        j["method"] = "sturm";
      } else {
        fail(Errc::ParseError, "unknown method: " + method);
      }
      emit(j.dump(), out_path);
    } else if (cc->parsed()) {
      Graph g1 = build(FamilySpec::parse(spec1));
      Graph g2 = build(FamilySpec::parse(spec2));
      QuasiOrd q = compare(g1, g2);
      std::optional<EnergyOrder> eo;
      if (q.relation == Relation::Incomparable) eo = energy_compare(g1, g2, gap_tol);
      if (format == "csv") {
        std::ostringstream os;
        os << spec1 << "," << spec2 << "," << relation_name(q.relation) << "," << q.first_witness();
        if (eo) os << "," << energy_order_name(*eo);
        emit(os.str(), out_path);
      } else if (format == "json") {
        nlohmann::json j;
        j["spec1"] = spec1;
        j["spec2"] = spec2;
        j["relation"] = relation_name(q.relation);
        j["witness_indices"] = q.witness_indices;
        if (eo) j["energy_order"] = energy_order_name(*eo);
        emit(j.dump(), out_path);
      } else {
        std::ostringstream os;
        os << relation_name(q.relation);
        if (!q.witness_indices.empty()) os << " (first witness b_" << 2 * q.first_witness() << ")";
        if (eo) os << ", energy fallback: " << energy_order_name(*eo);
        emit(os.str(), out_path);
      }
    } else if (cn->parsed()) {
      std::optional<std::array<int, 3>> filter;
      if (!cycles.empty()) {
        auto abk = FamilySpec::parse("theta2:0:" + cycles + ":2,2,2");
        filter = {{abk.a, abk.b, abk.k}};
      }
      std::ostringstream os;
      if (mode == "central") {
        auto specs = enumerate_central(n, filter);
        if (format == "json") {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& s : specs) arr.push_back(nlohmann::json::parse(s.to_json()));
          os << arr.dump();
        } else {
          for (const auto& s : specs)
            os << (format == "graph6" ? to_graph6(build(s)) : s.to_string()) << "\n";
        }
      } else if (mode == "full") {
        for (const Graph& g : enumerate_full(n))
          os << (format == "json" ? graph_to_json(g) : to_graph6(g)) << "\n";
      } else {
        fail(Errc::ParseError, "unknown mode: " + mode);
      }
      std::string text = os.str();
      if (!text.empty() && text.back() == '\n') text.pop_back();
      emit(text, out_path);
    } else if (cv->parsed()) {
      if (claim_ids.empty()) claim_ids.push_back("all");
      VerifyReport rep = run_verify(claim_ids, jobs);
      if (!json_path.empty()) emit(rep.to_json(), json_path);
      emit(rep.to_markdown(), out_path);
      return rep.proved_failures() > 0 ? 3 : 0;
    } else if (cx->parsed()) {
      VerifyReport rep = conjecture_scan(n, !no_energies);
      if (!json_path.empty()) emit(rep.to_json(), json_path);
      emit(rep.to_markdown(), out_path);
      return rep.proved_failures() > 0 ? 3 : 0;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
