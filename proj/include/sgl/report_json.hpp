#pragma once

#include "json.hpp"

#include "sgl/approximator.hpp"
#include "sgl/compression.hpp"
#include "sgl/constants.hpp"
#include "sgl/cut_embed.hpp"
#include "sgl/poincare.hpp"
#include "sgl/properties.hpp"
#include "sgl/spectral.hpp"

namespace sgl {

// JSON views of the report types. Non-finite numbers serialize as the strings
// "inf"/"-inf"/"nan" (JSON has no literal for them).
nlohmann::json json_num(double v);

nlohmann::json to_json(const PropertyReport& r);
nlohmann::json to_json(const ConstantsTable& t);
nlohmann::json to_json(const DecompositionReport& r);
nlohmann::json to_json(const DyadicReport& r);
nlohmann::json to_json(const CompressionTrace& t);
nlohmann::json to_json(const ApproximatorReport& r);
nlohmann::json to_json(const GammaEstimate& e);
nlohmann::json to_json(const CheegerSandwich& c);
nlohmann::json to_json(const MetricSummary& s);
nlohmann::json to_json(const ExpansionReport& r);
nlohmann::json to_json(const StrengthenedExpansionReport& r);
nlohmann::json to_json(const CutEmbedding& e);
nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const ImageBoundCheck& c);
nlohmann::json to_json(const QuotientIdentity& q);
nlohmann::json to_json(const TwoSidedCheck& c);
nlohmann::json to_json(const ExtrapolationBound& b);

} // namespace sgl
