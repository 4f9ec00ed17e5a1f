#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gaintrail/graph.hpp"
#include "gaintrail/oracle.hpp"

namespace gaintrail {

/// A parsed graph file: the oracle built from the group header, the labeled
/// graph, and the header suffix itself (kept verbatim for round-trips).
struct ParsedInput {
  std::shared_ptr<GroupOracle> oracle;
  LabeledGraph graph;
  std::string group_header;
};

/// Line-oriented format:
///   line 1:            group <backend spec>
///   optional lines:    vertex <id>
///   edge lines:        edge <id> <u> <v> [ <word tokens> ]
/// '#' starts a comment; the bracketed word is optional and empty brackets
/// mean the identity. Errors carry 1-based line numbers. Table-backend
/// paths resolve relative to base_dir.
ParsedInput parse_input(const std::string& text, const std::string& base_dir = ".");

/// Reads and parses `path`, resolving table paths next to it.
ParsedInput parse_input_file(const std::string& path);

/// Canonical file text: header, every vertex, every edge, all sorted.
/// parse_input(serialize_input(p)) reproduces p.
std::string serialize_input(const ParsedInput& p);

/// Word rendering with backend token names, e.g. "+r -t" or "+1 -2".
std::string word_tokens(const Word& w, const GroupOracle& oracle);

/// Inverse of word_tokens; throws input_error on unknown tokens.
Word word_from_tokens(const std::vector<std::string>& tokens, const GroupOracle& oracle);

}  // namespace gaintrail
