#pragma once

#include <chrono>
#include <string>

#include <json.hpp>

#include "biscount/engine.hpp"
#include "biscount/rational.hpp"

namespace biscount {

/// Machine-readable summary of a run. With `timing` false, wall_ms is 0.
inline nlohmann::ordered_json result_json(const ApproxResult& r, bool timing = true) {
  nlohmann::ordered_json j;
  j["estimate"] = to_decimal(r.estimate, 40);
  j["log2_estimate"] = r.log2_estimate;
  j["epsilon"] = r.epsilon;
  j["method"] = method_name(r.method);
  j["t0"] = r.t0;
  j["threshold_rank"] = r.threshold_rank;
  j["family_size"] = r.family_size;
  j["seed"] = r.seed;
  j["wall_ms"] = timing ? std::chrono::duration<double, std::milli>(r.wall_time).count() : 0.0;
  return j;
}

}  // namespace biscount
