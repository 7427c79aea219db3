// JSON and CSV rendering. Every JSON document carries "schema": "sfl/1";
// big integers are emitted as decimal strings, rationals as "num/den".
#pragma once

#include "sfl/bounds.hpp"
#include "sfl/linkgraph.hpp"
#include "sfl/oracle.hpp"

#include "json.hpp"

#include <string>

namespace sfl::serialize {

using json = nlohmann::json;

std::string rat_string(const Rat& r);

json stats_json(const oracle::StatsRecord& rec);
std::string stats_csv(const oracle::StatsRecord& rec);

json triples_json(const PqEquation& eq, long long n,
                  const std::vector<LTriple>& triples);
std::string triples_csv(const std::vector<LTriple>& triples);

json link_graph_json(const linkgraph::LinkGraph& g);
json msf2_json(const linkgraph::Msf2Construction& c);
json msf6_json(const linkgraph::MatchingConstruction& c);

json bound_report_json(const bounds::BoundReport& rep);
std::string bound_report_csv_header();
std::string bound_report_csv_row(const bounds::BoundReport& rep);

}  // namespace sfl::serialize
