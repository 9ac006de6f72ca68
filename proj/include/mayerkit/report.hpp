#pragma once

#include "mayerkit/canonical.hpp"
#include "mayerkit/cluster.hpp"
#include "mayerkit/combinatorics.hpp"
#include "mayerkit/series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mayerkit::report {

inline constexpr int kSchema = 1;

// {"schema": 1, "command": ..., "timestamp": ...}; the timestamp is the only
// field allowed to differ between identical runs.
nlohmann::json envelope(const std::string& command, bool with_timestamp = true);

nlohmann::json rational(const Rational& q);  // {"exact": "p/q", "value": double}

nlohmann::json records(const cluster::ClusterTable& t);
nlohmann::json records(const series::VirialCoefficients& c);
nlohmann::json to_json(const series::FreeEnergySeries& f);
nlohmann::json to_json(const canonical::CanonicalResult& r);
nlohmann::json to_json(const canonical::CompareReport& r);

std::string format_double(double x);  // %.17g
// Like json::dump but every float is written with 17 significant digits.
std::string dump(const nlohmann::json& j, int indent = 2);
std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

}  // namespace mayerkit::report
