#include "mcperm/io.hpp"

#include "mcperm/enumerate.hpp"

namespace mcperm {

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string sigma_text(const GroupElement& pi) {
  std::string out;
  for (int i = 1; i <= pi.n(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(pi.image(i));
  }
  return out;
}

std::string colors_text(const GroupElement& pi) {
  std::string out;
  for (int i = 1; i <= pi.n(); ++i) {
    if (i > 1) out += ';';
    auto row = pi.color(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(row[j]);
    }
  }
  return out;
}

std::string thm1_label(const GroupElement& pi) { return pi.n() < 2 ? "" : classify_thm1(pi).to_string(); }

std::string thm2_label(const GroupElement& pi) {
  if (pi.n() < 2 || fix(pi) != 0) return "";
  return classify_thm2(pi).to_string();
}

}  // namespace

Json to_json(const StatisticsRecord& rec) {
  Json j;
  j["exc"] = rec.exc;
  j["exc_A"] = rec.exc_A;
  j["csum"] = rec.csum;
  j["csum_per_palette"] = rec.csum_per_palette;
  j["fix"] = rec.fix;
  j["cyc"] = rec.cyc;
  return j;
}

Json to_json(const MultiPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exponents"] = e;
    t["coeff"] = c.str();
    terms.push_back(std::move(t));
  }
  return terms;
}

MultiPolynomial polynomial_from_json(const Json& j) {
  MultiPolynomial p;
  for (const auto& t : j) p.add_term(t.at("exponents").get<Exponents>(), BigInt(t.at("coeff").get<std::string>()));
  return p;
}

std::string csv_header() { return "n,signature,sigma,colors,exc,exc_A,csum,fix,cyc,class_thm1,class_thm2"; }

std::string csv_row(const GroupElement& pi) {
  const StatisticsRecord rec = stats(pi);
  std::string out;
  out += std::to_string(pi.n()) + ',';
  out += csv_field(pi.signature().to_string()) + ',';
  out += csv_field(sigma_text(pi)) + ',';
  out += csv_field(colors_text(pi)) + ',';
  out += std::to_string(rec.exc) + ',' + std::to_string(rec.exc_A) + ',' + std::to_string(rec.csum) + ',';
  out += std::to_string(rec.fix) + ',' + std::to_string(rec.cyc) + ',';
  out += csv_field(thm1_label(pi)) + ',' + csv_field(thm2_label(pi));
  return out;
}

Json element_record(const GroupElement& pi) {
  const StatisticsRecord rec = stats(pi);
  Json j;
  j["n"] = pi.n();
  j["signature"] = pi.signature().to_string();
  j["sigma"] = std::vector<int>(pi.sigma().begin(), pi.sigma().end());
  Json rows = Json::array();
  for (int i = 1; i <= pi.n(); ++i) rows.push_back(std::vector<int>(pi.color(i).begin(), pi.color(i).end()));
  j["colors"] = std::move(rows);
  j["exc"] = rec.exc;
  j["exc_A"] = rec.exc_A;
  j["csum"] = rec.csum;
  j["fix"] = rec.fix;
  j["cyc"] = rec.cyc;
  j["class_thm1"] = thm1_label(pi);
  j["class_thm2"] = thm2_label(pi);
  return j;
}

}  // namespace mcperm
