#pragma once

#include <span>
#include <string>
#include <vector>

namespace hadfrac {

/// Endpoints of the shared evaluation domain [1, X].
struct DomainSpec {
  double X;
  void validate() const;  // requires X > 1
};

/// Value and first two derivatives of log f at a point of the log-domain
/// coordinate u = ln t.
struct LogJet {
  double y;
  double dy;
  double d2y;
};

/// A strictly positive function on [1, X].
///
/// Three representations share the type:
///  - spline-exponential: exp of a C^1 cubic Hermite interpolant of
///    (u, log f) with monotonicity-limited slopes, so exp of data corridors
///    is respected without overshoot;
///  - power: c * t^{-kappa} * (ln t)^{mu}, stored through logs
///    (covers the closed-form kernel inputs);
///  - constant.
///
/// Knots live in u = ln t and always start at 0 (t = 1).  `kinks` records the
/// interior abscissae where the log-curvature genuinely jumps; quadrature
/// uses them as panel breakpoints.
class PositiveFunction {
 public:
  enum class Kind { SplineExp, PowerForm, Constant };

  PositiveFunction() = default;

  static PositiveFunction constant(double c, double X);
  /// exp(lscale) * e^{-kappa u} * u^{mu} in u = ln t.
  static PositiveFunction power_form_raw(double lscale, double kappa, double mu,
                                         double X);
  /// The closed-form kernel input e^{((beta-1)/beta) ln t} (ln t)^{lambda-1}.
  static PositiveFunction power_input(double lambda, double beta, double X);

  Kind kind() const { return kind_; }
  double X() const;
  double log_upper() const { return logX_; }

  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& logvals() const { return logvals_; }
  const std::vector<double>& slopes() const { return slopes_; }
  const std::vector<double>& kinks() const { return kinks_; }

  double lscale() const { return lscale_; }
  double kappa() const { return kappa_; }
  double mu() const { return mu_; }

  /// f(t) for t in [1, X]; throws std::domain_error outside.
  double value(double t) const;

  /// log f at u = ln t, u in [0, ln X] (clamped at the ends).
  double log_value_u(double u) const;

  /// log f and its first two u-derivatives.  For power forms requires u > 0
  /// unless mu == 0.
  LogJet log_jet_u(double u) const;

  friend PositiveFunction make_function(std::span<const double> knots,
                                        std::span<const double> log_ordinates);
  friend PositiveFunction combine(const std::vector<PositiveFunction>& fs,
                                  const std::vector<double>& exponents);
  friend PositiveFunction combine_add(const PositiveFunction& f,
                                      const PositiveFunction& g, double tol);
  friend PositiveFunction deserialize_function(const std::string& text);

 private:
  Kind kind_ = Kind::Constant;
  double logX_ = 0.0;
  // spline state
  std::vector<double> knots_;
  std::vector<double> logvals_;
  std::vector<double> slopes_;
  std::vector<double> kinks_;
  // power/constant state
  double lscale_ = 0.0;
  double kappa_ = 0.0;
  double mu_ = 0.0;

  std::size_t locate(double u) const;
};

/// Builds a spline-exponential function from strictly increasing knots in
/// u = ln t (first knot 0) and the log-ordinates at those knots.  Slopes are
/// the Fritsch-Carlson/PCHIP monotonicity-limited choice; all interior knots
/// are recorded as kinks.
PositiveFunction make_function(std::span<const double> knots,
                               std::span<const double> log_ordinates);

/// Pointwise product prod f_i^{e_i}.  Spline factors are merged exactly on
/// the union grid (a cubic in log-space stays a cubic, so values and slopes
/// reproduce the product bit-for-bit up to rounding).  Mixing spline and
/// power factors is rejected; all-power/constant input yields a power form.
PositiveFunction combine(const std::vector<PositiveFunction>& fs,
                         const std::vector<double>& exponents);

/// f^e through combine.
PositiveFunction pow_fn(const PositiveFunction& f, double e);

/// Pointwise sum f + g for spline/constant operands.  log(f+g) is resampled
/// on the union grid with exact analytic slopes and refined adaptively until
/// the interpolation error in log-space is below tol.
PositiveFunction combine_add(const PositiveFunction& f,
                             const PositiveFunction& g, double tol = 1e-9);

/// f(t); same as f.value(t).
double evaluate(const PositiveFunction& f, double t);

/// JSON round-trip.  Serialization is canonical: equal functions produce
/// byte-identical text, which the harness embeds in reports for replay.
std::string serialize_function(const PositiveFunction& f);
PositiveFunction deserialize_function(const std::string& text);

}  // namespace hadfrac
