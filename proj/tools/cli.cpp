#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "enriques/error.hpp"
#include "enriques/serialize.hpp"

namespace enriques::cli {

using io::json;

namespace {

// One record per line (jsonl), or CSV with a header line. A record whose keys
// differ from the current header starts a new header block.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  void write(const json& record) {
    if (format_ == OutputFormat::jsonl) {
      out_ << record.dump() << '\n';
      return;
    }
    std::vector<std::string> keys;
    for (const auto& item : record.items()) keys.push_back(item.key());
    if (keys != header_) {
      if (!header_.empty()) out_ << '\n';
      header_ = keys;
      write_row(keys);
    }
    std::vector<std::string> cells;
    for (const auto& item : record.items()) cells.push_back(cell(item.value()));
    write_row(cells);
  }

 private:
  static std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell(v[i]);
      return s;
    }
    return v.dump();
  }

  void write_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string& c = cells[i];
      const bool quote = c.find_first_of(",\"\n") != std::string::npos;
      if (i) out_ << ',';
      if (!quote) {
        out_ << c;
        continue;
      }
      out_ << '"';
      for (char ch : c) out_ << (ch == '"' ? "\"\"" : std::string(1, ch));
      out_ << '"';
    }
    out_ << '\n';
  }

  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> header_;
};

const std::string& require(const std::optional<std::string>& value, const char* flag, const std::string& command) {
  if (!value) throw UsageError{command + " requires " + flag};
  return *value;
}

ChamberPoint require_point(const RunConfig& c) { return ChamberPoint::parse(require(c.point, "--point", c.command)); }

json check_record(const std::string& name, bool pass, json detail = json::object()) {
  return json{{"check", name}, {"pass", pass}, {"detail", std::move(detail)}};
}

json int_matrix(const linalg::IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

bool is_even(const linalg::IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i][i] % 2 != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_reduce(const RunConfig& c, RecordWriter& w) {
  const LatticeVector v = io::vector_from_json(io::parse(require(c.vector, "--vector", c.command)));
  const Reduction r = reduce(v, c.normalize);
  const LatticeVector input_l = v.basis() == Basis::E ? psi(v) : v.free_part();
  w.write(json{{"input", io::to_json(v)},
               {"output", io::to_json(r.output)},
               {"point", io::rational_array(r.point.b)},
               {"in_open_chamber", in_chamber(r.point, Region::open)},
               {"input_square", to_string(square(input_l))},
               {"output_square", to_string(square(r.output))},
               {"cremona_moves", r.trace.cremona_moves()},
               {"trace", io::to_json(r.trace)}});
  return ok;
}

int cmd_phi(const RunConfig& c, RecordWriter& w) {
  const ChamberPoint p = require_point(c);
  json rec{{"b", io::rational_array(p.b)}, {"phi", to_string(phi_closed_form(p))}};
  if (c.brute) {
    const PhiResult r = phi_bruteforce(p, EnumerationBound(c.cmax.value_or(6)));
    rec["brute_value"] = to_string(r.value);
    rec["argmin"] = io::to_json(r.argmin);
    rec["verified_up_to"] = r.verified_up_to;
    rec["certified"] = r.certified;
    rec["agrees"] = r.value == phi_closed_form(p);
  }
  w.write(rec);
  return ok;
}

int cmd_capacity(const RunConfig& c, RecordWriter& w) {
  const ChamberPoint p = require_point(c);
  const CapacityResult r = alg_capacity(p, c.k, EnumerationBound(c.cmax.value_or(6)), c.nef_model);
  w.write(json{{"b", io::rational_array(p.b)},
               {"k", c.k},
               {"nef_model", to_string(c.nef_model)},
               {"cmax", c.cmax.value_or(6)},
               {"value", to_string(r.value)},
               {"argmin", io::to_json(r.argmin)},
               {"certified", r.certified}});
  return ok;
}

int cmd_symp_radius(const RunConfig& c, RecordWriter& w) {
  const ChamberPoint p = require_point(c);
  w.write(json{{"b", io::rational_array(p.b)}, {"s_squared", to_string(symp_radius_squared(p))}});
  return ok;
}

int cmd_witness(const RunConfig& c, RecordWriter& w) {
  const ChamberPoint p = require_point(c);
  if (!in_chamber(p, Region::open))
    throw Error(ErrorKind::invalid_input, "witness: point " + p.str() + " is not in the open chamber");
  const WitnessReport r = non_kahler_witness(p);
  const KahlerBounds kb = kahler_bounds(p);
  json rec{{"b", io::rational_array(p.b)}};
  rec.update(io::to_json(r));
  rec["kahler_lower"] = to_string(kb.lower);
  rec["kahler_upper"] = to_string(kb.upper);
  w.write(rec);
  return ok;
}

int cmd_report(const RunConfig& c, RecordWriter& w) {
  const ChamberPoint p = require_point(c);
  w.write(io::to_json(invariant_report(p, c.ks, EnumerationBound(c.cmax.value_or(6)), c.nef_model)));
  return ok;
}

int cmd_sample_region(const RunConfig& c, RecordWriter& w) {
  const auto [px, py] = c.projection;
  if (px < 1 || px > 10 || py < 1 || py > 10) throw UsageError{"--projection indices must be in 1..10"};
  const RegionSummary summary = sample_region(c.n, c.seed, c.denom, [&](const RegionSample& s) {
    json row;
    for (std::size_t i = 0; i < 10; ++i) row["b" + std::to_string(i + 1)] = to_string(s.point.b[i]);
    row["s_squared"] = to_string(s.report.s_squared);
    row["upper_squared"] = to_string(s.report.upper_squared);
    row["verdict"] = s.report.verdict;
    row["proj_x"] = to_string(s.point.b[px - 1]);
    row["proj_y"] = to_string(s.point.b[py - 1]);
    w.write(row);
  });
  w.write(json{{"summary", true},
               {"count", summary.count},
               {"witnesses", summary.witnesses},
               {"witness_fraction", to_string(summary.witness_fraction)},
               {"seed", c.seed},
               {"denom", c.denom}});
  return ok;
}

int cmd_vertices(const RunConfig&, RecordWriter& w) {
  const auto& vs = vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    w.write(json{{"name", "V" + std::to_string(i + 1)}, {"b", io::rational_array(vs[i].b)}});
  return ok;
}

int cmd_check_lattice(const RunConfig&, RecordWriter& w) {
  bool all = true;
  auto emit = [&](const std::string& name, bool pass, json detail = json::object()) {
    all = all && pass;
    w.write(check_record(name, pass, std::move(detail)));
  };

  const auto psi_m = linalg::to_rational(psi_matrix());
  const Rational det_psi = linalg::determinant(psi_m);
  emit("psi_unimodular", det_psi == 1 || det_psi == -1, {{"determinant", to_string(det_psi)}});

  // Reference form on (-E8 + U) + (-1)_e written from the Dynkin diagram.
  auto reference = dynkin_enriques_gram();
  for (auto& row : reference) row.push_back(0);
  reference.push_back(std::vector<long>(11, 0));
  reference[10][10] = -1;
  std::size_t mismatches = 0;
  auto basis_image = [](std::size_t i) {
    return i < 10 ? psi(LatticeVector::unit(Basis::E, i)) : psi(LatticeVector::zero(Basis::E), 1);
  };
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 11; ++j)
      if (pairing(basis_image(i), basis_image(j)) != reference[i][j]) ++mismatches;
  emit("psi_isometry", mismatches == 0, {{"pairs", 121}, {"mismatches", mismatches}});

  std::size_t roundtrip_failures = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    const auto back = psi_inv(psi(LatticeVector::unit(Basis::E, i), i));
    if (!(back.enriques == LatticeVector::unit(Basis::E, i)) || back.e_multiplicity != long(i)) ++roundtrip_failures;
  }
  emit("psi_inverse", roundtrip_failures == 0, {{"failures", roundtrip_failures}});

  const auto ge = gram_of_enriques_basis();
  const auto in_e = linalg::inertia(linalg::to_rational(ge));
  const Rational det_e = linalg::determinant(linalg::to_rational(ge));
  emit("enriques_gram",
       linalg::is_symmetric(ge) && is_even(ge) && det_e == -1 && in_e.positive == 1 && in_e.negative == 9 &&
           ge == dynkin_enriques_gram(),
       {{"determinant", to_string(det_e)},
        {"signature", {in_e.positive, in_e.negative}},
        {"even", is_even(ge)},
        {"matches_dynkin", ge == dynkin_enriques_gram()}});

  const auto& gl = lattice(Basis::L).gram;
  const auto in_l = linalg::inertia(linalg::to_rational(gl));
  const Rational det_l = linalg::determinant(linalg::to_rational(gl));
  emit("blowup_gram", (det_l == 1 || det_l == -1) && in_l.positive == 1 && in_l.negative == 10,
       {{"determinant", to_string(det_l)}, {"signature", {in_l.positive, in_l.negative}}});

  const auto& gk = lattice(Basis::K3).gram;
  const auto in_k = linalg::inertia(linalg::to_rational(gk));
  emit("k3_gram", linalg::is_symmetric(gk) && is_even(gk) && in_k.positive == 3 && in_k.negative == 19,
       {{"signature", {in_k.positive, in_k.negative}}, {"even", is_even(gk)}});

  bool orthogonal = true;
  for (std::size_t i = 0; i < 10; ++i) orthogonal = orthogonal && pairing(basis_image(i), classes::k()) == 0;
  emit("k_orthogonal_to_enriques", orthogonal);

  const auto oracle = enumerate_vertices_oracle();
  const auto& listed = vertices();
  json unlisted = json::array(), spurious = json::array();
  for (const auto& v : oracle)
    if (std::find(listed.begin(), listed.end(), v) == listed.end()) unlisted.push_back(io::rational_array(v.b));
  for (const auto& v : listed)
    if (std::find(oracle.begin(), oracle.end(), v) == oracle.end()) spurious.push_back(io::rational_array(v.b));
  emit("vertex_oracle", unlisted.empty() && spurious.empty(),
       {{"oracle_count", oracle.size()}, {"listed_count", listed.size()}, {"not_listed", unlisted}, {"not_vertices", spurious}});

  return all ? ok : invariant_failure;
}

int cmd_k3_info(const RunConfig&, RecordWriter& w) {
  const auto& gk = lattice(Basis::K3).gram;
  const auto in_k = linalg::inertia(linalg::to_rational(gk));
  w.write(json{{"lattice", "Q_T"},
               {"rank", 22},
               {"signature", {in_k.positive, in_k.negative}},
               {"even", is_even(gk)}});
  const auto& plus = invariant_sublattice();
  const auto& minus = anti_invariant_sublattice();
  w.write(json{{"lattice", "Q_T+"}, {"rank", plus.rank}, {"gram", int_matrix(plus.gram)}});
  w.write(json{{"lattice", "Q_T-"}, {"rank", minus.rank}, {"gram", int_matrix(minus.gram)}});
  linalg::Matrix rows;
  for (const auto* s : {&plus, &minus})
    for (const auto& b : s->basis) rows.emplace_back(b.coeffs().begin(), b.coeffs().end());
  const std::size_t joint = linalg::rank(rows);
  w.write(json{{"lattice", "Q_T+ and Q_T-"}, {"joint_rank", joint}, {"intersection_rank", plus.rank + minus.rank - joint}});
  return ok;
}

int cmd_gr_sw(const RunConfig& c, RecordWriter& w) {
  const BlowupClass cls = io::blowup_class_from_json(io::parse(require(c.klass, "--class", c.command)));
  const NonvanishingReport r = classify(cls);
  json rec = io::to_json(cls);
  rec["surface"] = cls.on_blowup_surface() ? "blowup" : "S";
  rec["gt_dimension"] = to_string(gt_dimension(cls));
  rec["forward_closure"] = forward_closure_member(cls.B);
  rec["gr_nonzero"] = r.gr_nonzero;
  rec["gr_prime_nonzero"] = r.gr_prime_nonzero;
  rec["sw_nonzero"] = r.sw_nonzero;
  if (cls.is_zero()) rec["connected_rep"] = "degenerate";
  else rec["connected_rep"] = connected_rep_exists(cls);
  w.write(rec);
  return ok;
}

int cmd_period_check(const RunConfig& c, RecordWriter& w) {
  const PeriodCandidate pc = io::period_candidate_from_json(io::parse(require(c.candidate, "--candidate", c.command)));
  const PeriodCheck r = period_point_check(pc, EnumerationBound(c.cmax.value_or(2)));
  json rec{{"isotropic", r.isotropic},
           {"positive", r.positive},
           {"d0_up_to_bound", r.d0_up_to_bound},
           {"bound", r.bound}};
  rec["violating_root"] = r.violating_root ? io::k3_to_json(*r.violating_root) : json(nullptr);
  w.write(rec);
  return ok;
}

std::pair<int, int> parse_projection(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError{"--projection expects i,j"};
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError{"--projection expects i,j"};
  }
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig config;
  CLI::App app{"Exact lattice computations for the Enriques surface and its one-point blowup", "enriques"};
  app.require_subcommand(1);

  std::string format = "jsonl", nef = "forward", projection;
  long cmax = 0;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"jsonl", "csv"}));
    sub->add_option("--out", config.out, "Write records to PATH instead of stdout");
  };
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--point", config.point, "Chamber point b1,...,b10 as rationals")->required();
  };
  auto add_cmax = [&](CLI::App* sub) { sub->add_option("--cmax", cmax, "Bound on the l0-coefficient")->check(CLI::PositiveNumber); };

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a forward-cone class into the fundamental chamber");
  reduce_cmd->add_option("--vector", config.vector, "Vector literal (JSON)")->required();
  reduce_cmd->add_flag("--no-normalize{false}", config.normalize, "Keep the reduced class unscaled");

  auto* phi_cmd = app.add_subcommand("phi", "Phi-invariant at a chamber point");
  add_point(phi_cmd);
  phi_cmd->add_flag("--brute", config.brute, "Also minimize over enumerated isotropic classes");
  add_cmax(phi_cmd);

  auto* cap_cmd = app.add_subcommand("capacity", "Algebraic capacity c_k");
  add_point(cap_cmd);
  cap_cmd->add_option("--k", config.k, "Capacity index k >= 0");
  add_cmax(cap_cmd);
  cap_cmd->add_option("--nef-model", nef, "Nef model")->check(CLI::IsMember({"forward", "chamber"}));

  auto* radius_cmd = app.add_subcommand("symp-radius", "Square of the symplectic radius");
  add_point(radius_cmd);

  auto* witness_cmd = app.add_subcommand("witness", "Non-Kahler witness test at a chamber point");
  add_point(witness_cmd);

  auto* report_cmd = app.add_subcommand("report", "Full invariant report at a chamber point");
  add_point(report_cmd);
  report_cmd->add_option("--ks", config.ks, "Capacity indices")->delimiter(',');
  add_cmax(report_cmd);
  report_cmd->add_option("--nef-model", nef, "Nef model")->check(CLI::IsMember({"forward", "chamber"}));

  auto* sample_cmd = app.add_subcommand("sample-region", "Seeded sampling of witness verdicts over the chamber");
  sample_cmd->add_option("--n", config.n, "Number of points")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", config.seed, "RNG seed");
  sample_cmd->add_option("--denom", config.denom, "Grid denominator")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--projection", projection, "Coordinate pair i,j (1-based) for the projected view");

  auto* vertices_cmd = app.add_subcommand("vertices", "The nine chamber vertices");
  auto* check_cmd = app.add_subcommand("check-lattice", "Structural verification of the lattices and psi");
  auto* k3_cmd = app.add_subcommand("k3-info", "Covering K3 lattice and its involution eigenlattices");

  auto* grsw_cmd = app.add_subcommand("gr-sw", "Gromov-Taubes / Seiberg-Witten nonvanishing");
  grsw_cmd->add_option("--class", config.klass, "Class literal {\"B\": vector@E, \"l\": int}")->required();

  auto* period_cmd = app.add_subcommand("period-check", "Period domain checks for a candidate in Q_T^-");
  period_cmd->add_option("--candidate", config.candidate, "{\"p\": K3 literal, \"q\": K3 literal}")->required();
  add_cmax(period_cmd);

  for (auto* sub : {reduce_cmd, phi_cmd, cap_cmd, radius_cmd, witness_cmd, report_cmd, sample_cmd, vertices_cmd,
                    check_cmd, k3_cmd, grsw_cmd, period_cmd})
    add_format(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    throw HelpRequested{chosen.empty() ? app.help() : chosen.back()->help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError{e.what()};
  }

  config.command = app.get_subcommands().front()->get_name();
  config.format = format == "csv" ? OutputFormat::csv : OutputFormat::jsonl;
  config.nef_model = parse_nef_model(nef);
  if (cmax > 0) config.cmax = cmax;
  if (!projection.empty()) config.projection = parse_projection(projection);
  return config;
}

int run(const RunConfig& config, std::ostream& out) {
  RecordWriter w(out, config.format);
  const std::string& cmd = config.command;
  if (cmd == "reduce") return cmd_reduce(config, w);
  if (cmd == "phi") return cmd_phi(config, w);
  if (cmd == "capacity") return cmd_capacity(config, w);
  if (cmd == "symp-radius") return cmd_symp_radius(config, w);
  if (cmd == "witness") return cmd_witness(config, w);
  if (cmd == "report") return cmd_report(config, w);
  if (cmd == "sample-region") return cmd_sample_region(config, w);
  if (cmd == "vertices") return cmd_vertices(config, w);
  if (cmd == "check-lattice") return cmd_check_lattice(config, w);
  if (cmd == "k3-info") return cmd_k3_info(config, w);
  if (cmd == "gr-sw") return cmd_gr_sw(config, w);
  if (cmd == "period-check") return cmd_period_check(config, w);
  throw UsageError{"unknown command '" + cmd + "'"};
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto error_record = [&](const std::string& kind, const std::string& message, int code) {
    err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
    return code;
  };
  try {
    const RunConfig config = parse_args(argc, argv);
    if (!config.out) return run(config, out);
    std::ofstream file(*config.out);
    if (!file) return error_record("invalid_input", "cannot open output file " + *config.out, usage);
    return run(config, file);
  } catch (const HelpRequested& h) {
    out << h.text;
    return ok;
  } catch (const UsageError& e) {
    return error_record("usage", e.message, usage);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::infeasible_bound: return error_record(to_string(e.kind()), e.what(), infeasible_bound);
      case ErrorKind::invariant_failure: return error_record(to_string(e.kind()), e.what(), invariant_failure);
      default: return error_record(to_string(e.kind()), e.what(), usage);
    }
  } catch (const nlohmann::json::exception& e) {
    return error_record("invalid_input", e.what(), usage);
  } catch (const std::exception& e) {
    return error_record("internal", e.what(), invariant_failure);
  }
}

}  // namespace enriques::cli
