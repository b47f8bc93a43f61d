#pragma once

#include <json.hpp>

#include "levym/harnack.hpp"
#include "levym/indices.hpp"
#include "levym/moments.hpp"
#include "levym/montecarlo.hpp"

namespace levym {

// Infinite values are encoded as the string "inf" (JSON has no infinity);
// every report type round-trips exactly otherwise.

nlohmann::json number_to_json(double x);
double number_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const IndexEstimate& e);
void from_json(const nlohmann::json& j, IndexEstimate& e);

void to_json(nlohmann::json& j, const IndexReport& r);
void from_json(const nlohmann::json& j, IndexReport& r);

void to_json(nlohmann::json& j, const HypothesisReport& r);
void from_json(const nlohmann::json& j, HypothesisReport& r);

void to_json(nlohmann::json& j, const MomentEstimate& m);
void from_json(const nlohmann::json& j, MomentEstimate& m);

void to_json(nlohmann::json& j, const EmpiricalMoment& m);
void from_json(const nlohmann::json& j, EmpiricalMoment& m);

void to_json(nlohmann::json& j, const LedgerEntry& e);
void from_json(const nlohmann::json& j, LedgerEntry& e);

void to_json(nlohmann::json& j, const SubordinateExponent& s);
void from_json(const nlohmann::json& j, SubordinateExponent& s);

/// Envelope for CLI emission: {"schema": 1, "type": <type>, "data": ...}.
nlohmann::json report_envelope(const std::string& type, nlohmann::json data);

}  // namespace levym
