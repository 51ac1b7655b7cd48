#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "flagmono/catalog.hpp"
#include "flagmono/chains.hpp"
#include "flagmono/matroid.hpp"

namespace flagmono {

// Text format, one record per matroid:
//   n=<int> r=<int>
//   <basis as space-separated elements, one line per basis>
// A rank-0 record has no basis lines (its only basis is the empty set).
// Records are separated by the next "n=" header; blank lines are ignored.
// Bases are sorted lexicographically on serialization.
std::string to_text(const Matroid& m);
std::vector<Matroid> read_matroids_text(std::istream& in);

// JSON mirror: {"n": ..., "bases": [[...], ...]}, or an array of records
// (optionally {"name": ..., "n": ..., "bases": ...}).
nlohmann::json to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);
nlohmann::json catalog_to_json(const Catalog& cat);

// Reads either format, by sniffing the first non-space character.
std::vector<Matroid> read_matroids_file(const std::string& path);
void write_matroids_file(const std::string& path, const Catalog& cat, bool json);

// Flag vectors as [{"S": [ranks], "value": v}, ...], subsets ordered by
// (size, lexicographic); CSV encodes S as a bitmask integer.
nlohmann::json flag_vector_to_json(const FlagVector& fv);
std::string flag_vector_to_csv(const FlagVector& f, const FlagVector& h);

std::vector<RankSet> ordered_rank_sets(int r);  // (size, lex) order
nlohmann::json rank_set_to_json(RankSet s);

}  // namespace flagmono
