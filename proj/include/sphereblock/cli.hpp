#pragma once

#include "sphereblock/verify.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>

namespace sphereblock {

// A pair specification as given on the command line: either a builtin
// family instance or a custom document, optionally carrying orbit data.
struct PairSpec {
  PairDatum pair;
  std::optional<BuiltinFamily> builtin_family;
  std::optional<int> builtin_n;
  std::optional<nlohmann::ordered_json> orbits;
};

// Accepts "builtin:<family>:<n>" or a path to a JSON document
//   { "builtin": { "family": ..., "n": ... } }      (exactly one of the
//   { "custom":  { "cartan_type", "rank", "lattice_mode", "theta_star",
//                  "orbits": <document or null>, "label"?,
//                  "parabolic_subset"? } }            two keys)
PairSpec parse_pair_arg(const std::string& arg);

// Builtin pairs generate their orbit graph; custom pairs must supply one.
OrbitGraph acquire_graph(const PairSpec& spec, const PairInvariants& inv);

std::string dump_json(const nlohmann::ordered_json& doc, int indent);

int cmd_describe(const PairSpec& spec, std::ostream& out, int indent);
int cmd_classes(const PairSpec& spec, std::ostream& out, int indent);
int cmd_blocks(const PairSpec& spec, std::ostream& out, int indent,
               const std::string& dot_path);
int cmd_verify(std::ostream& out, int max_n);

}  // namespace sphereblock
