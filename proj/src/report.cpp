#include "siegel/report.hpp"

#include <sstream>

namespace siegel {

Json num(Int x) { return std::to_string(x); }
Json num(const BigInt& x) { return to_string(x); }
Json num(const ExactRational& x) { return to_string(x); }

Json num_list(const std::vector<Int>& xs) {
  Json out = Json::array();
  for (Int x : xs) out.push_back(num(x));
  return out;
}

Json to_json(const Weight& w) { return Json{{"a", num_list(w.a)}, {"m0", num(w.m0)}}; }

Json to_json(const WeylElt& w) {
  Json perm = Json::array();
  Json flips = Json::array();
  for (int p : w.perm) perm.push_back(num(Int(p + 1)));
  for (char f : w.flips) flips.push_back(f ? "1" : "0");
  return Json{{"perm", perm}, {"flips", flips}, {"length", num(Int(w.length))}};
}

Json to_json(const GradedVirtualRep& module) {
  Json summands = Json::array();
  for (const auto& s : module.summands()) {
    Json pairings = Json::object();
    for (auto [idx, value] : module.pairings(s)) pairings[std::to_string(idx)] = num(value);
    const Int central = central_weight(s.weight);
    summands.push_back(Json{{"degree", num(Int(s.degree))},
                            {"weight", to_json(s.weight)},
                            {"leviWeight", to_levi_weight(module.shape(), s.weight).to_string()},
                            {"mult", num(s.mult)},
                            {"centralWeight", num(central)},
                            {"sheafWeight", num(-central)},
                            {"pairings", pairings}});
  }
  std::vector<Int> blocks(module.shape().glBlocks.begin(), module.shape().glBlocks.end());
  return Json{{"S", module.parabolic().to_string()},
              {"leviBlocks", num_list(blocks)},
              {"sympRank", num(Int(module.shape().sympRank))},
              {"summands", summands}};
}

Json to_json(const SymbolicClass& cls) {
  Json terms = Json::array();
  for (const auto& t : cls.terms()) {
    Json term = to_json(t.module);
    term["coefficient"] = num(t.coefficient);
    terms.push_back(std::move(term));
  }
  return Json{{"terms", terms}};
}

Json to_json(const HeckeMatrix& matrix) {
  Json cells = Json::array();
  for (const auto& [key, cell] : matrix.cells) {
    Json c{{"C1", num(key.first)}, {"C2", num(key.second)}, {"count", num(cell.count)}, {"coefficient", num(cell.coefficient)}};
    if (!cell.annotation.empty()) c["annotation"] = cell.annotation;
    cells.push_back(std::move(c));
  }
  return Json{{"levelNClasses", num(matrix.levelNClasses)}, {"levelMClasses", num(matrix.levelMClasses)}, {"cells", cells}};
}

std::string graded_report_tsv(const SymbolicClass& cls, const std::string& label, bool header) {
  std::ostringstream out;
  if (header) {
    if (!label.empty()) out << "profile\t";
    out << "S\tdegree\tweight\tmult\tcentral_weight\tsheaf_weight\tpairings\n";
  }
  for (const auto& row : graded_report(cls)) {
    if (!label.empty()) out << label << '\t';
    out << row.S << '\t' << row.degree << '\t' << row.weight << '\t' << to_string(row.mult) << '\t'
        << row.centralWeight << '\t' << row.sheafWeight << '\t';
    for (std::size_t i = 0; i < row.pairings.size(); ++i)
      out << (i ? "," : "") << row.pairings[i].first << ':' << row.pairings[i].second;
    out << '\n';
  }
  return out.str();
}

namespace {

void flatten(const Json& node, const std::string& prefix, std::ostringstream& out) {
  if (node.is_object() || node.is_array()) {
    if (node.empty()) {
      out << prefix << '\t' << (node.is_object() ? "{}" : "[]") << '\n';
      return;
    }
    if (node.is_object()) {
      for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else {
      for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "." + std::to_string(i), out);
    }
    return;
  }
  out << prefix << '\t' << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
}

}  // namespace

std::string flatten_tsv(const Json& doc) {
  std::ostringstream out;
  out << "key\tvalue\n";
  flatten(doc, "", out);
  return out.str();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace siegel
