#include "cymirror/report.hpp"

#include "cymirror/errors.hpp"

#include "json.hpp"

namespace cymirror {

using Json = nlohmann::ordered_json;

std::string to_json(const EulerReport& r) {
  Json j;
  j["weights"] = r.weights.weights();
  j["degree"] = r.weights.degree();
  j["well_formed"] = r.well_formed;
  j["gorenstein"] = r.gorenstein;
  j["ip"] = r.ip;
  j["transverse"] = r.transverse;
  j["chi_orb_formula"] = to_string(r.chi_orb_formula);
  j["chi_str_mirror"] = r.chi_str_mirror ? Json(to_string(*r.chi_str_mirror)) : Json(nullptr);
  j["integral"] = r.integral;
  j["methods_agree"] = r.methods_agree;
  j["notes"] = r.notes;
  return j.dump(2);
}

EulerReport report_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    EulerReport r(WeightVector(j.at("weights").get<std::vector<std::uint64_t>>()));
    if (j.at("degree").get<std::uint64_t>() != r.weights.degree()) throw ParseError("degree does not match the weights");
    r.well_formed = j.at("well_formed").get<bool>();
    r.gorenstein = j.at("gorenstein").get<bool>();
    r.ip = j.at("ip").get<bool>();
    r.transverse = j.at("transverse").get<bool>();
    r.chi_orb_formula = parse_rational(j.at("chi_orb_formula").get<std::string>());
    if (!j.at("chi_str_mirror").is_null()) r.chi_str_mirror = parse_rational(j.at("chi_str_mirror").get<std::string>());
    r.integral = j.at("integral").get<bool>();
    r.methods_agree = j.at("methods_agree").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid report: ") + e.what());
  }
}

}  // namespace cymirror
