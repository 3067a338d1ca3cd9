#include "nakayama/io.hpp"

#include <sstream>

namespace nakayama {

namespace {

int parse_int(const std::string& token, const std::string& what) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw Error("cannot parse " + what + ": '" + token + "'");
  }
  if (used != token.size()) throw Error("cannot parse " + what + ": '" + token + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

Algebra parse_kupisch_text(const std::string& text) {
  std::vector<int> series;
  for (const std::string& token : split(text, ',')) {
    series.push_back(parse_int(token, "Kupisch entry"));
  }
  return validate_kupisch(static_cast<int>(series.size()), series);
}

std::string format_kupisch(const std::vector<int>& series) {
  std::string out;
  for (size_t i = 0; i < series.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(series[i]);
  }
  return out;
}

Algebra parse_relations_text(const std::string& text) {
  // "n=5;1:3,3:3,5:2"
  const std::vector<std::string> halves = split(text, ';');
  if (halves.size() != 2 || halves[0].rfind("n=", 0) != 0) {
    throw Error("relations format is \"n=N;start:arrows,...\": '" + text + "'");
  }
  RelationSystem rs;
  rs.n = parse_int(halves[0].substr(2), "rank");
  for (const std::string& pair : split(halves[1], ',')) {
    const std::vector<std::string> parts = split(pair, ':');
    if (parts.size() != 2) throw Error("bad relation token '" + pair + "'");
    rs.rels.push_back({parse_int(parts[0], "relation start"),
                       parse_int(parts[1], "relation arrow count")});
  }
  return kupisch_from_relations(rs);  // validates; throws InconsistentRelations
}

std::string format_relations(const RelationSystem& rs) {
  std::string out = "n=" + std::to_string(rs.n) + ";";
  for (size_t j = 0; j < rs.rels.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(rs.rels[j].start) + ":" + std::to_string(rs.rels[j].arrows);
  }
  return out;
}

UniserialModule parse_module_text(const Algebra& a, const std::string& text) {
  // "top=T,len=L"
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 2 || parts[0].rfind("top=", 0) != 0 || parts[1].rfind("len=", 0) != 0) {
    throw Error("module format is \"top=T,len=L\": '" + text + "'");
  }
  return make_module(a, parse_int(parts[0].substr(4), "module top"),
                     parse_int(parts[1].substr(4), "module length"));
}

std::string format_factors(const Algebra& a, UniserialModule m) {
  std::string out = "[";
  const std::vector<Vertex> factors = composition_factors(a, m);
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(factors[i]);
  }
  return out + "]";
}

nlohmann::json dim_to_json(Dim d) {
  if (d.is_finite()) return d.value();
  return "inf";
}

nlohmann::json invariants_json(const Algebra& a) {
  const DimensionReport direct = direct_report(a);
  const RelationSystem rels = relations_from_kupisch(a);
  const Algebra op = opposite(a);
  const DimensionReport op_direct = direct_report(op);

  nlohmann::json j;
  j["kupisch"] = a.kupisch();
  j["rank"] = a.rank();
  j["selfinjective"] = is_selfinjective(a);
  nlohmann::json jrels = nlohmann::json::array();
  for (const Relation& rel : rels.rels) jrels.push_back({rel.start, rel.arrows});
  j["relations"] = jrels;
  j["gldim"] = dim_to_json(direct.gldim);
  j["findim"] = direct.findim;
  j["phi_dim"] = direct.phi_dim;
  j["del"] = dim_to_json(direct.del);
  nlohmann::json jdel = nlohmann::json::array();
  for (Dim d : direct.del_simples) jdel.push_back(dim_to_json(d));
  j["del_per_simple"] = jdel;
  j["op_kupisch"] = op.kupisch();
  j["findim_op"] = op_direct.findim;
  j["del_op"] = dim_to_json(op_direct.del);
  nlohmann::json jblocks = nlohmann::json::array();
  for (const DeltaBlock& b : delta_blocks(a)) jblocks.push_back({b.top, b.len});
  j["delta_blocks"] = jblocks;
  if (is_selfinjective(a)) {
    j["epsilon_kupisch"] = nullptr;
  } else {
    j["epsilon_kupisch"] = epsilon(a).kupisch;
  }
  return j;
}

std::string invariants_table(const Algebra& a) {
  const nlohmann::json j = invariants_json(a);
  std::ostringstream os;
  os << "kupisch        " << format_kupisch(a.kupisch()) << "\n";
  os << "rank           " << a.rank() << "\n";
  os << "selfinjective  " << (j["selfinjective"].get<bool>() ? "yes" : "no") << "\n";
  os << "relations      " << format_relations(relations_from_kupisch(a)) << "\n";
  auto dim_text = [](const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>());
  };
  os << "gldim          " << dim_text(j["gldim"]) << "\n";
  os << "findim         " << j["findim"].get<int>() << "\n";
  os << "phi_dim        " << j["phi_dim"].get<int>() << "\n";
  os << "del            " << dim_text(j["del"]) << "  (per simple:";
  for (const auto& v : j["del_per_simple"]) os << " " << dim_text(v);
  os << ")\n";
  os << "opposite       " << format_kupisch(j["op_kupisch"].get<std::vector<int>>())
     << "  findim_op=" << j["findim_op"].get<int>() << " del_op=" << dim_text(j["del_op"])
     << "\n";
  os << "delta_blocks  ";
  for (const DeltaBlock& b : delta_blocks(a)) {
    os << " [" << format_kupisch(composition_factors(a, {b.top, b.len})) << "]";
  }
  os << "\n";
  if (j["epsilon_kupisch"].is_null()) {
    os << "epsilon        (undefined: selfinjective)\n";
  } else {
    const EpsilonResult eps = epsilon(a);
    os << "epsilon        " << format_kupisch(eps.kupisch)
       << (eps.algebra ? "" : "  (degenerate: not a cyclic Nakayama series)") << "\n";
  }
  return os.str();
}

nlohmann::json sweep_json(const SweepReport& report) {
  nlohmann::json j;
  j["spec"] = {{"rank_min", report.spec.rank_min},
               {"rank_max", report.spec.rank_max},
               {"max_len", report.spec.max_len},
               {"dedupe", report.spec.dedupe}};
  nlohmann::json jchecks = nlohmann::json::array();
  for (CheckId id : report.checks) jchecks.push_back(std::string(check_name(id)));
  j["checks"] = jchecks;
  j["algebra_count"] = report.algebra_count;
  nlohmann::json jtotals;
  for (const auto& [id, totals] : report.totals) {
    jtotals[std::string(check_name(id))] = {
        {"pass", totals.pass}, {"fail", totals.fail}, {"skip", totals.skip}};
  }
  j["totals"] = jtotals;
  nlohmann::json jfailures = nlohmann::json::array();
  for (const SweepFailure& f : report.failures) {
    jfailures.push_back({{"kupisch", f.kupisch},
                         {"check", std::string(check_name(f.check))},
                         {"payload", f.payload}});
  }
  j["failures"] = jfailures;
  j["histograms"] = {{"findim", report.findim_hist},
                     {"del", report.del_hist},
                     {"phi", report.phi_hist}};
  return j;
}

std::string sweep_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "canonical_kupisch,rank,gldim,findim,del,phi,findim_op,del_op,eps_kupisch,"
        "failed_checks\n";
  for (const AlgebraRow& row : report.rows) {
    os << '"' << format_kupisch(row.kupisch) << "\"," << row.rank << ','
       << to_string(row.gldim) << ',' << row.findim << ',' << to_string(row.del) << ','
       << row.phi << ',' << row.findim_op << ',' << to_string(row.del_op) << ',';
    if (!row.eps_kupisch.empty()) os << '"' << format_kupisch(row.eps_kupisch) << '"';
    os << ',';
    for (size_t i = 0; i < row.failed.size(); ++i) {
      if (i) os << ';';
      os << check_name(row.failed[i]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace nakayama
