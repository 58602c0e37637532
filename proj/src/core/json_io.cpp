#include "json_io.hpp"

#include <cstdint>

namespace qts {

nlohmann::json symf_to_json(const SymF& f, Basis b) {
  nlohmann::json j;
  j["basis"] = basis_name(b);
  j["degree"] = f.max_degree();
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [lam, c] : f.coords(b)) {
    nlohmann::json term;
    term["index"] = lam;
    term["coeff"] = c.text();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

SymF symf_from_json(const nlohmann::json& j) {
  Basis b = basis_from_name(j.at("basis").get<std::string>());
  std::map<Partition, QTRatio> coords;
  for (auto& term : j.at("terms")) {
    Partition lam = term.at("index").get<Partition>();
    QTRatio c = QTRatio::parse(term.at("coeff").get<std::string>());
    if (!c.is_zero()) coords[lam] += c;
  }
  return SymF::from_coords(b, coords);
}

nlohmann::json opexpr_to_json(const OpExpr& x) {
  nlohmann::json words = nlohmann::json::array();
  for (auto& [w, c] : x.terms()) {
    nlohmann::json entry;
    entry["letters"] = w;
    entry["coeff"] = c.text();
    words.push_back(std::move(entry));
  }
  nlohmann::json j;
  j["words"] = std::move(words);
  return j;
}

OpExpr opexpr_from_json(const nlohmann::json& j) {
  OpExpr x;
  for (auto& entry : j.at("words")) {
    Word w = entry.at("letters").get<Word>();
    x.add_term(w, QTRatio::parse(entry.at("coeff").get<std::string>()));
  }
  return x;
}

std::string checksum_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace qts
