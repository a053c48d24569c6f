#pragma once

#include <json.hpp>

#include "qident/ffpoly.hpp"
#include "qident/fqlinalg.hpp"
#include "qident/glnq.hpp"
#include "qident/hall_littlewood.hpp"
#include "qident/partition.hpp"
#include "qident/qseries.hpp"

namespace qident {

// Wire formats:
//   Partition        -> [2,1]                      (empty partition -> [])
//   TruncatedSeries  -> {"trunc": T, "coeffs": ["p/q", ...]}
//   FqPoly           -> {"q": p, "coeffs": [c0, c1, ...]}
//   ClassData        -> [{"phi": FqPoly, "lambda": [..]}], sorted
//   AbstractClassData-> [{"degree": d, "tag": i, "lambda": [..]}]
//   HLPolynomial     -> {"n_vars": n, "terms": [{"exponents": [..],
//                        "t_coeffs": ["c0", ...]}]}
//   RationalInterval -> {"lo": "p/q", "hi": "p/q"}

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FqPoly& f);
FqPoly fqpoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassData& c);
ClassData class_data_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AbstractClassData& c);

nlohmann::json to_json(const HLPolynomial& p);
HLPolynomial hl_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalInterval& iv);

}  // namespace qident
