#pragma once

#include <json.hpp>
#include <string>

#include "mm/period.hpp"
#include "mm/potential.hpp"

namespace mm {

using json = nlohmann::ordered_json;

json to_json(const LaurentPoly& p);
json to_json(const RootDatum& d);
json to_json(const ParabolicData& p);
json to_json(const CosetReps& reps);
json to_json(const ConnMatrix& m);
json to_json(const PeriodSeries& s);
json to_json(const ScalarOperator& L);
json to_json(const Potential& f);

// Comma-separated rows; only for q-free matrices.
std::string to_csv(const ConnMatrix& m);

}  // namespace mm
