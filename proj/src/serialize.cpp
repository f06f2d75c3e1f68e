#include <cmath>
#include <stdexcept>

#include "hadfrac/positive_function.hpp"
#include "nlohmann/json.hpp"

namespace hadfrac {

using nlohmann::json;

std::string serialize_function(const PositiveFunction& f) {
  json j;
  switch (f.kind()) {
    case PositiveFunction::Kind::Constant:
      j["kind"] = "constant";
      j["log_value"] = f.lscale();
      j["logX"] = f.log_upper();
      break;
    case PositiveFunction::Kind::PowerForm:
      j["kind"] = "power";
      j["lscale"] = f.lscale();
      j["kappa"] = f.kappa();
      j["mu"] = f.mu();
      j["logX"] = f.log_upper();
      break;
    case PositiveFunction::Kind::SplineExp:
      j["kind"] = "spline-exponential";
      j["knots"] = f.knots();
      j["logvals"] = f.logvals();
      j["slopes"] = f.slopes();
      j["kinks"] = f.kinks();
      break;
  }
  return j.dump();
}

PositiveFunction deserialize_function(const std::string& text) {
  json j = json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    return PositiveFunction::constant(
        std::exp(j.at("log_value").get<double>()),
        std::exp(j.at("logX").get<double>()));
  }
  if (kind == "power") {
    return PositiveFunction::power_form_raw(
        j.at("lscale").get<double>(), j.at("kappa").get<double>(),
        j.at("mu").get<double>(), std::exp(j.at("logX").get<double>()));
  }
  if (kind == "spline-exponential") {
    PositiveFunction f;
    f.kind_ = PositiveFunction::Kind::SplineExp;
    f.knots_ = j.at("knots").get<std::vector<double>>();
    f.logvals_ = j.at("logvals").get<std::vector<double>>();
    f.slopes_ = j.at("slopes").get<std::vector<double>>();
    f.kinks_ = j.at("kinks").get<std::vector<double>>();
    if (f.knots_.size() < 2 || f.knots_.size() != f.logvals_.size() ||
        f.knots_.size() != f.slopes_.size())
      throw std::invalid_argument("deserialize_function: malformed spline");
    f.logX_ = f.knots_.back();
    return f;
  }
  throw std::invalid_argument("deserialize_function: unknown kind " + kind);
}

}  // namespace hadfrac
