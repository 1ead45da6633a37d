#include "cayleylab/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace cayleylab {

namespace {

std::string num_str(const ExactRatio& q) { return numer(q).str(); }
std::string den_str(const ExactRatio& q) { return denom(q).str(); }

ExactRatio ratio_from(const std::string& num, const std::string& den) {
  return ExactRatio(BigInt(num), BigInt(den));
}

ExactRatio ratio_from_json(const nlohmann::json& j, const char* num_key, const char* den_key) {
  return ratio_from(j.at(num_key).get<std::string>(), j.at(den_key).get<std::string>());
}

std::string fraction(const ExactRatio& q) { return num_str(q) + "/" + den_str(q); }

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

const char* regime_name(BoundRegime regime) {
  return regime == BoundRegime::general ? "general" : "elem_abelian_2";
}

BoundRegime regime_from_name(const std::string& name) {
  if (name == "general") return BoundRegime::general;
  if (name == "elem_abelian_2") return BoundRegime::elem_abelian_2;
  throw precondition_error("unknown regime name: " + name);
}

nlohmann::json to_json(const ExactReport& report) {
  return {{"n", report.n},
          {"k", report.k},
          {"t", report.t},
          {"p_num", num_str(report.p)},
          {"p_den", den_str(report.p)}};
}

ExactReport exact_report_from_json(const nlohmann::json& j) {
  ExactReport r;
  r.n = j.at("n").get<long>();
  r.k = j.at("k").get<long>();
  r.t = j.at("t").get<long>();
  r.p = ratio_from_json(j, "p_num", "p_den");
  return r;
}

nlohmann::json to_json(const DiameterBoundReport& report) {
  return {{"n", report.n},
          {"k", report.k},
          {"t_used", report.t_used},
          {"p_num", num_str(report.p_value)},
          {"p_den", den_str(report.p_value)},
          {"raw_lower_num", num_str(report.raw_lower)},
          {"raw_lower_den", den_str(report.raw_lower)},
          {"raw_upper_num", num_str(report.raw_upper)},
          {"raw_upper_den", den_str(report.raw_upper)},
          {"lower_num", num_str(report.lower)},
          {"lower_den", den_str(report.lower)},
          {"upper_num", num_str(report.upper)},
          {"upper_den", den_str(report.upper)},
          {"regime", regime_name(report.regime)}};
}

DiameterBoundReport bound_report_from_json(const nlohmann::json& j) {
  DiameterBoundReport r;
  r.n = j.at("n").get<long>();
  r.k = j.at("k").get<long>();
  r.t_used = j.at("t_used").get<long>();
  r.p_value = ratio_from_json(j, "p_num", "p_den");
  r.raw_lower = ratio_from_json(j, "raw_lower_num", "raw_lower_den");
  r.raw_upper = ratio_from_json(j, "raw_upper_num", "raw_upper_den");
  r.lower = ratio_from_json(j, "lower_num", "lower_den");
  r.upper = ratio_from_json(j, "upper_num", "upper_den");
  r.regime = regime_from_name(j.at("regime").get<std::string>());
  return r;
}

nlohmann::json to_json(const SimulationReport& report) {
  return {{"group_spec", report.group_spec},
          {"n", report.n},
          {"k", report.k},
          {"trials", report.estimate.trials},
          {"hits", report.estimate.hits},
          {"point", report.estimate.point},
          {"ci_low", report.estimate.ci_low},
          {"ci_high", report.estimate.ci_high},
          {"seed", report.estimate.seed}};
}

SimulationReport simulation_report_from_json(const nlohmann::json& j) {
  SimulationReport r;
  r.group_spec = j.at("group_spec").get<std::string>();
  r.n = j.at("n").get<long>();
  r.k = j.at("k").get<long>();
  r.estimate.trials = j.at("trials").get<long>();
  r.estimate.hits = j.at("hits").get<long>();
  r.estimate.point = j.at("point").get<double>();
  r.estimate.ci_low = j.at("ci_low").get<double>();
  r.estimate.ci_high = j.at("ci_high").get<double>();
  r.estimate.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

nlohmann::json to_json(const std::vector<ScanRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ScanRow& row : rows)
    arr.push_back({{"regime", row.regime},
                   {"n_or_t", row.n_or_t},
                   {"k", row.k},
                   {"exact_value", row.exact_value},
                   {"rate_prediction", row.rate_prediction},
                   {"relative_error", row.relative_error}});
  return {{"rows", arr}};
}

std::vector<ScanRow> scan_rows_from_json(const nlohmann::json& j) {
  std::vector<ScanRow> rows;
  for (const nlohmann::json& item : j.at("rows")) {
    ScanRow row;
    row.regime = item.at("regime").get<std::string>();
    row.n_or_t = item.at("n_or_t").get<long>();
    row.k = item.at("k").get<long>();
    row.exact_value = item.at("exact_value").get<double>();
    row.rate_prediction = item.at("rate_prediction").get<double>();
    row.relative_error = item.at("relative_error").get<double>();
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const std::vector<ThresholdRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ThresholdRow& row : rows)
    arr.push_back({{"t", row.t}, {"k_star", row.k}, {"upper_bound", row.upper}});
  return {{"rows", arr}};
}

std::vector<ThresholdRow> threshold_rows_from_json(const nlohmann::json& j) {
  std::vector<ThresholdRow> rows;
  for (const nlohmann::json& item : j.at("rows")) {
    ThresholdRow row;
    row.t = item.at("t").get<long>();
    row.k = item.at("k_star").get<long>();
    row.upper = item.at("upper_bound").get<double>();
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const GroupInfoReport& report) {
  return {{"spec", report.spec},
          {"order", report.order},
          {"elem_abelian_2", report.elem_abelian_2},
          {"max_sqrt_ratio_num", num_str(report.max_sqrt_ratio)},
          {"max_sqrt_ratio_den", den_str(report.max_sqrt_ratio)},
          {"axioms_ok", report.axioms_ok}};
}

GroupInfoReport group_info_from_json(const nlohmann::json& j) {
  GroupInfoReport r;
  r.spec = j.at("spec").get<std::string>();
  r.order = j.at("order").get<long>();
  r.elem_abelian_2 = j.at("elem_abelian_2").get<bool>();
  r.max_sqrt_ratio = ratio_from_json(j, "max_sqrt_ratio_num", "max_sqrt_ratio_den");
  r.axioms_ok = j.at("axioms_ok").get<bool>();
  return r;
}

std::string to_csv(const ExactReport& report) {
  std::ostringstream out;
  out << "n,k,t,p_num,p_den\n"
      << report.n << ',' << report.k << ',' << report.t << ',' << num_str(report.p) << ','
      << den_str(report.p) << '\n';
  return out.str();
}

std::string to_csv(const DiameterBoundReport& report) {
  std::ostringstream out;
  out << "n,k,t_used,p_num,p_den,lower,upper,regime\n"
      << report.n << ',' << report.k << ',' << report.t_used << ',' << num_str(report.p_value)
      << ',' << den_str(report.p_value) << ',' << fraction(report.lower) << ','
      << fraction(report.upper) << ',' << regime_name(report.regime) << '\n';
  return out.str();
}

std::string to_csv(const SimulationReport& report) {
  std::ostringstream out;
  out << "group_spec,n,k,trials,hits,point,ci_low,ci_high,seed\n"
      << csv_escape(report.group_spec) << ',' << report.n << ',' << report.k << ','
      << report.estimate.trials << ',' << report.estimate.hits << ','
      << fmt_double(report.estimate.point) << ',' << fmt_double(report.estimate.ci_low) << ','
      << fmt_double(report.estimate.ci_high) << ',' << report.estimate.seed << '\n';
  return out.str();
}

std::string to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "regime,n_or_t,k,exact_value,rate_prediction,relative_error\n";
  for (const ScanRow& row : rows)
    out << csv_escape(row.regime) << ',' << row.n_or_t << ',' << row.k << ','
        << fmt_double(row.exact_value) << ',' << fmt_double(row.rate_prediction) << ','
        << fmt_double(row.relative_error) << '\n';
  return out.str();
}

std::string to_csv(const std::vector<ThresholdRow>& rows) {
  std::ostringstream out;
  out << "t,k_star,upper_bound\n";
  for (const ThresholdRow& row : rows)
    out << row.t << ',' << row.k << ',' << fmt_double(row.upper) << '\n';
  return out.str();
}

std::string to_csv(const GroupInfoReport& report) {
  std::ostringstream out;
  out << "spec,order,elem_abelian_2,max_sqrt_ratio,axioms_ok\n"
      << csv_escape(report.spec) << ',' << report.order << ','
      << (report.elem_abelian_2 ? "true" : "false") << ',' << fraction(report.max_sqrt_ratio)
      << ',' << (report.axioms_ok ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace cayleylab
