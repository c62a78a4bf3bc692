#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcp/scales.hpp"

namespace qcp {

enum class Model { mermin, lindhard, classical };

inline constexpr std::array<Model, 3> all_models{Model::mermin, Model::lindhard,
                                                 Model::classical};

std::string_view model_name(Model model);
std::optional<Model> model_from_name(std::string_view name);

// One model evaluated at one query point. epsilon is present iff the query
// carries xp. sigma_ratio is sigma_tr / sigma_0.
struct ResponseSample {
  Model model = Model::mermin;
  std::complex<double> sigma_ratio;
  std::optional<std::complex<double>> epsilon;
  DimensionlessQuery query;
};

// The one-dimensional reductions of the Fermi-sphere integrals:
// J_omega = (3/16) T1(q, z), J_nu = (3/8) T0(q).
std::complex<double> j_omega(double q, std::complex<double> z);
double j_nu(double q);

ResponseSample evaluate(Model model, const DimensionlessQuery& query);

ResponseSample sigma_mermin(const DimensionlessQuery& query);
ResponseSample eps_mermin(const DimensionlessQuery& query);  // requires xp
ResponseSample sigma_lindhard(const DimensionlessQuery& query);
ResponseSample eps_lindhard(const DimensionlessQuery& query);  // requires xp
ResponseSample sigma_classical(const DimensionlessQuery& query);

// Evaluates the model at the mirrored frequency -x (kernels take z = -x+iy).
// Exists for the reality-symmetry checks; the public API keeps x > 0.
ResponseSample eval_negative_x(Model model, const DimensionlessQuery& query);

struct EvalAllResult {
  std::vector<ResponseSample> samples;        // one per model, fixed order
  std::vector<std::string> errors;            // "<model>: <message>" entries
};

// Evaluates all three models in the order mermin, lindhard, classical. A
// model that throws contributes a NaN-filled sample and an error entry
// instead of aborting the remaining models.
EvalAllResult eval_all(const DimensionlessQuery& query);

}  // namespace qcp
