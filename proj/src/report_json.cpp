#include "cherx/report_json.hpp"

#include <sstream>

namespace cherx {

using nlohmann::json;

json poly_to_json(const MultiPoly& f, bool indexed_params) {
  json terms = json::array();
  for (const auto& [e, s] : f.terms()) {
    json t;
    t["exponents"] = e;
    t["coefficient"] = s.str(indexed_params);
    terms.push_back(t);
  }
  json out;
  out["nvars"] = f.nvars();
  out["text"] = f.str(indexed_params);
  out["terms"] = terms;
  return out;
}

json pbw_to_json(const PBWElement& e) {
  bool multi = e.group().num_params() > 1;
  json terms = json::array();
  for (const auto& [k, s] : e.terms()) {
    json t;
    t["x"] = k.xe;
    t["D"] = k.ye;
    std::string ws = group_element_str(e.group(), k.w);
    t["w"] = ws.empty() ? "1" : ws;
    t["coefficient"] = s.str(multi);
    terms.push_back(t);
  }
  json out;
  out["text"] = e.str();
  out["terms"] = terms;
  return out;
}

json report_to_json(const DecompositionReport& rep) {
  json out;
  out["group"] = rep.group_spec;
  out["c"] = rep.c_desc;
  out["N"] = rep.N;
  json lows = json::array();
  for (const auto& entry : rep.lowest_weights) {
    json e;
    e["degree"] = entry.degree;
    e["isotype"] = entry.isotype;
    json basis = json::array();
    for (const auto& f : entry.basis) basis.push_back(f.str());
    e["basis"] = basis;
    lows.push_back(e);
  }
  out["lowest_weights"] = lows;
  json sums = json::array();
  for (const auto& s : rep.summands) {
    json e;
    e["generator"] = s.generator.str();
    e["dims"] = s.space.dims();
    sums.push_back(e);
  }
  out["summands"] = sums;
  json certs;
  certs["direct_sum"] = rep.direct_sum;
  certs["completeness"] = rep.completeness;
  certs["stability"] = rep.stability;
  out["certificates"] = certs;
  out["anomalies"] = rep.anomalies;
  return out;
}

json lowest_weights_to_json(const GroupData& g, const DecompositionReport& rep) {
  json out;
  out["group"] = rep.group_spec;
  out["c"] = rep.c_desc;
  out["N"] = rep.N;
  json lows = json::array();
  for (const auto& entry : rep.lowest_weights) {
    json e;
    e["degree"] = entry.degree;
    e["isotype"] = entry.isotype;
    json basis = json::array();
    for (const auto& f : entry.basis) basis.push_back(f.str());
    e["basis"] = basis;
    lows.push_back(e);
  }
  out["lowest_weights"] = lows;
  return out;
}

json char_table_to_json(const GroupData& g, const CharacterTable& t) {
  json out;
  out["group"] = g.family().str();
  json classes = json::array();
  for (size_t c = 0; c < g.num_classes(); ++c) {
    json e;
    std::string rep = group_element_str(g, g.class_rep(c));
    e["rep"] = rep.empty() ? "1" : rep;
    e["size"] = g.class_members(c).size();
    classes.push_back(e);
  }
  out["classes"] = classes;
  json irreps = json::array();
  for (size_t i = 0; i < t.num_irreps(); ++i) {
    json e;
    e["label"] = t.labels[i];
    e["dim"] = t.dims[i];
    json vals = json::array();
    for (const auto& v : t.values[i]) vals.push_back(v.reduced().str());
    e["values"] = vals;
    irreps.push_back(e);
  }
  out["irreps"] = irreps;
  return out;
}

json molien_to_json(const GroupData& g, const CharacterTable& t, size_t chi, const MolienSeries& s) {
  json out;
  out["group"] = g.family().str();
  out["chi"] = t.labels[chi];
  out["N"] = s.N;
  out["coefficients"] = s.coef;
  return out;
}

json equivalence_to_json(const EquivalenceReport& rep) {
  json out;
  out["holds"] = rep.holds;
  out["checks"] = rep.checks;
  out["violations"] = rep.violations;
  return out;
}

std::string char_table_text(const GroupData& g, const CharacterTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header = {"irrep", "dim"};
  for (size_t c = 0; c < g.num_classes(); ++c) {
    std::string rep = group_element_str(g, g.class_rep(c));
    header.push_back(rep.empty() ? "1" : rep);
  }
  cells.push_back(header);
  std::vector<std::string> sizes = {"|class|", ""};
  for (size_t c = 0; c < g.num_classes(); ++c)
    sizes.push_back(std::to_string(g.class_members(c).size()));
  cells.push_back(sizes);
  for (size_t i = 0; i < t.num_irreps(); ++i) {
    std::vector<std::string> row = {t.labels[i], std::to_string(t.dims[i])};
    for (const auto& v : t.values[i]) row.push_back(v.reduced().str());
    cells.push_back(row);
  }
  std::vector<size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t j = 0; j < row.size(); ++j) {
      os << row[j];
      if (j + 1 < row.size()) os << std::string(width[j] - row[j].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cherx
