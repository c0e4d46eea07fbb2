#pragma once

#include "fairdiv/analysis.hpp"
#include "fairdiv/class_check.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/incentives.hpp"
#include "fairdiv/instances.hpp"
#include "fairdiv/mechanisms.hpp"
#include "fairdiv/profile.hpp"

#include <json.hpp>

#include <string>

namespace fairdiv::io {

using json = nlohmann::ordered_json;

/// Rationals are written as "p/q" strings; integers and rational strings are
/// accepted on input. `path` and `field` only label errors.
Rational rational_from_json(const json& j, const std::string& path, const std::string& field);
json to_json(const Rational& r);
json to_json(const Value& v);

/// Table entries are keyed by comma-joined good indices ("" is the empty set).
Valuation valuation_from_json(const json& j, int goods, const std::string& path, const std::string& field);
json to_json(const Valuation& v);

/// `{"m": int, "agents": [valuation...]}`. Throws FormatError.
Profile profile_from_json(const json& j, const std::string& path);
json to_json(const Profile& p);

/// `{"bundles": [[good...]...]}` with one list per agent.
Allocation allocation_from_json(const json& j, int agents, int goods, const std::string& path);
json to_json(const Allocation& a);
json bundle_json(const Bundle& b);

json to_json(const EnvyGraph& g);
json to_json(const Trace& t);
json to_json(const FairnessReport& r);
json to_json(const Witness& w);
json to_json(const ClassCheckResult& r);
json to_json(const StageMapping& m);
json to_json(const FactorTwoResult& r);
json to_json(const ProfileChain& c);

/// Reads and parses a JSON file. Throws FormatError on I/O or syntax errors.
json read_json_file(const std::string& path);
Profile load_profile(const std::string& path);
/// Explicit misreport list: an array of valuation specs or {"reports": [...]}.
std::vector<Valuation> load_reports(const std::string& path, int goods);

}  // namespace fairdiv::io
