#pragma once

#include <json.hpp>

#include "folres/job.hpp"

namespace folres::detail {

using Json = nlohmann::ordered_json;

Json job_to_json(const JobFile& job);
Json rational_json(const Rational& value);

}  // namespace folres::detail
