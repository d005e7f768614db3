#pragma once

#include <string>

#include <kneser/chen.hpp>
#include <kneser/fan.hpp>
#include <kneser/product_labeling.hpp>
#include <kneser/witness_search.hpp>

namespace kneser {

// JSON round-trips for the witness types. Vertices are 1-based in the JSON,
// matching the graph format; sign vectors appear as strings like "+-0+".

std::string to_json_string(const BipartiteState& s);
BipartiteState bipartite_state_from_json(const std::string& text);

std::string to_json_string(const PathWitness& w);
PathWitness path_witness_from_json(const std::string& text);

std::string to_json_string(const KttStarWitness& w);
KttStarWitness ktt_star_from_json(const std::string& text);

std::string to_json_string(const ChainPair& cp, int n);
// Returns the pair along with the dimension recorded in the JSON.
std::pair<ChainPair, int> chain_pair_from_json(const std::string& text);

std::string to_json_string(const FanLabeling& l);
FanLabeling fan_labeling_from_json(const std::string& text);

std::string to_json_string(const VerifyReport& r);

} // namespace kneser
