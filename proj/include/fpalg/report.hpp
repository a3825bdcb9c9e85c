#pragma once

#include "fpalg/homs.hpp"
#include "fpalg/repmat.hpp"
#include "fpalg/suite.hpp"

#include <json.hpp>

#include <string>

namespace fpalg {

/// JSON with insertion-ordered keys so structured reports are byte-stable.
using OrderedJson = nlohmann::ordered_json;

/// First line: "confluent; N critical pairs resolved" or
/// "not confluent; K of N critical pairs unresolved", then one line per pair.
std::string render_text(const ConfluenceReport& report, const Alphabet& alphabet);
OrderedJson render_json(const ConfluenceReport& report, const Alphabet& alphabet);

std::string render_text(const Report& report);
OrderedJson render_json(const Report& report);

std::string render_text(const RepReport& report);
OrderedJson render_json(const RepReport& report);

std::string render_text(const std::vector<CriterionResult>& results);
OrderedJson render_json(const std::vector<CriterionResult>& results);

} // namespace fpalg
