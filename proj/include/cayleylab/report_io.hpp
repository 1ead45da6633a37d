#pragma once

#include "cayleylab/asymptotics.hpp"
#include "cayleylab/bounds.hpp"
#include "cayleylab/montecarlo.hpp"
#include "cayleylab/numeric.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace cayleylab {

// All JSON reports round-trip losslessly: big integers are emitted as
// decimal strings (they routinely exceed 64-bit range), floating-point
// fields as native JSON numbers, and CSV output uses fixed documented
// headers with RFC-4180-style quoting and LF line endings.

struct ExactReport {
  long n = 0;
  long k = 0;
  long t = 0;
  ExactRatio p;
};

struct SimulationReport {
  std::string group_spec;
  long n = 0;
  long k = 0;
  EstimateReport estimate;
};

struct ScanRow {
  std::string regime;
  long n_or_t = 0;
  long k = 0;
  double exact_value = 0.0;
  double rate_prediction = 0.0;
  double relative_error = 0.0;
};

struct GroupInfoReport {
  std::string spec;
  long order = 0;
  bool elem_abelian_2 = false;
  ExactRatio max_sqrt_ratio;
  bool axioms_ok = false;
};

const char* regime_name(BoundRegime regime);
BoundRegime regime_from_name(const std::string& name);

nlohmann::json to_json(const ExactReport& report);
nlohmann::json to_json(const DiameterBoundReport& report);
nlohmann::json to_json(const SimulationReport& report);
nlohmann::json to_json(const std::vector<ScanRow>& rows);
nlohmann::json to_json(const std::vector<ThresholdRow>& rows);
nlohmann::json to_json(const GroupInfoReport& report);

ExactReport exact_report_from_json(const nlohmann::json& j);
DiameterBoundReport bound_report_from_json(const nlohmann::json& j);
SimulationReport simulation_report_from_json(const nlohmann::json& j);
std::vector<ScanRow> scan_rows_from_json(const nlohmann::json& j);
std::vector<ThresholdRow> threshold_rows_from_json(const nlohmann::json& j);
GroupInfoReport group_info_from_json(const nlohmann::json& j);

// Header: n,k,t,p_num,p_den
std::string to_csv(const ExactReport& report);
// Header: n,k,t_used,p_num,p_den,lower,upper,regime (clamped bounds as
// exact num/den fractions)
std::string to_csv(const DiameterBoundReport& report);
// Header: group_spec,n,k,trials,hits,point,ci_low,ci_high,seed
std::string to_csv(const SimulationReport& report);
// Header: regime,n_or_t,k,exact_value,rate_prediction,relative_error
std::string to_csv(const std::vector<ScanRow>& rows);
// Header: t,k_star,upper_bound
std::string to_csv(const std::vector<ThresholdRow>& rows);
// Header: spec,order,elem_abelian_2,max_sqrt_ratio,axioms_ok
std::string to_csv(const GroupInfoReport& report);

}  // namespace cayleylab
