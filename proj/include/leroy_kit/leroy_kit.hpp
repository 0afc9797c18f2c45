#ifndef LEROY_KIT_LEROY_KIT_HPP
#define LEROY_KIT_LEROY_KIT_HPP

// Umbrella header. report_json.hpp is not included here since it pulls in
// nlohmann/json.

#include "leroy_kit/errors.hpp"
#include "leroy_kit/eval_result.hpp"
#include "leroy_kit/gamma.hpp"
#include "leroy_kit/series.hpp"
#include "leroy_kit/quadrature.hpp"
#include "leroy_kit/leroy.hpp"
#include "leroy_kit/lerch.hpp"
#include "leroy_kit/transforms.hpp"
#include "leroy_kit/harness.hpp"

#endif  // LEROY_KIT_LEROY_KIT_HPP
