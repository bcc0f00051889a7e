#include "mxinv/reports.hpp"

#include <sstream>

namespace mxinv {

using nlohmann::ordered_json;

void Report::add(CheckResult r) {
  if (r.status == "fail") verdict = false;
  results.push_back(std::move(r));
}

ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["q"] = r.q;
  j["p"] = r.p;
  j["s"] = r.s;
  j["modulus"] = r.modulus.empty() ? ordered_json(nullptr) : ordered_json(r.modulus);
  j["group"] = r.group;
  j["command"] = r.command;
  ordered_json results = ordered_json::array();
  for (const CheckResult& c : r.results) {
    ordered_json e;
    e["check"] = c.check;
    e["paper_claim"] = c.paper_claim;
    e["status"] = c.status;
    e["detail"] = c.detail;
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  j["verdict"] = r.verdict ? "pass" : "fail";
  return j;
}

Report report_from_json(const ordered_json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<int>();
  r.q = j.at("q").get<uint32_t>();
  r.p = j.at("p").get<uint32_t>();
  r.s = j.at("s").get<uint32_t>();
  if (!j.at("modulus").is_null()) r.modulus = j.at("modulus").get<std::vector<uint32_t>>();
  r.group = j.at("group").get<std::string>();
  r.command = j.at("command").get<std::string>();
  for (const auto& e : j.at("results")) {
    CheckResult c;
    c.check = e.at("check").get<std::string>();
    c.paper_claim = e.at("paper_claim").get<std::string>();
    c.status = e.at("status").get<std::string>();
    c.detail = e.at("detail");
    r.results.push_back(std::move(c));
  }
  r.verdict = j.at("verdict").get<std::string>() == "pass";
  return r;
}

namespace {

// aligned sub-table for a detail array of flat objects
void render_rows(std::ostringstream& os, const ordered_json& rows) {
  if (!rows.is_array() || rows.empty() || !rows.front().is_object()) return;
  std::vector<std::string> keys;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
  std::vector<size_t> width;
  for (const auto& k : keys) width.push_back(k.size());
  auto cell = [](const ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  for (const auto& row : rows)
    for (size_t i = 0; i < keys.size(); ++i)
      width[i] = std::max(width[i], cell(row.value(keys[i], ordered_json())).size());
  os << "    ";
  for (size_t i = 0; i < keys.size(); ++i) {
    os << keys[i] << std::string(width[i] - keys[i].size() + 2, ' ');
  }
  os << "\n";
  for (const auto& row : rows) {
    os << "    ";
    for (size_t i = 0; i < keys.size(); ++i) {
      std::string v = cell(row.value(keys[i], ordered_json()));
      os << v << std::string(width[i] - v.size() + 2, ' ');
    }
    os << "\n";
  }
}

}  // namespace

std::string report_table(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "   group: " << r.group << "   q: " << r.q;
  if (!r.modulus.empty()) {
    os << "   modulus: [";
    for (size_t i = 0; i < r.modulus.size(); ++i) os << (i ? "," : "") << r.modulus[i];
    os << "]";
  }
  os << "\n";
  for (const CheckResult& c : r.results) {
    os << "  [" << c.status << "] " << c.check << " - " << c.paper_claim << "\n";
    for (auto it = c.detail.begin(); it != c.detail.end(); ++it) {
      if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
        os << "    " << it.key() << ":\n";
        render_rows(os, it.value());
      } else {
        os << "    " << it.key() << ": "
           << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
      }
    }
  }
  os << "verdict: " << (r.verdict ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace mxinv
