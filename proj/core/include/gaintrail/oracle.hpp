#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "gaintrail/word.hpp"

namespace gaintrail {

/// Running cost counters for identity queries. Counters only grow (until an
/// explicit reset); lengths are measured in symbols of the queried word.
struct OracleStats {
  std::uint64_t query_count = 0;
  std::uint64_t max_query_length = 0;
  std::uint64_t total_query_length = 0;
};

/// Answers "does this word evaluate to the identity?" for one fixed group
/// presentation. All higher-level predicates funnel through is_identity, so
/// the stats counters account for every group-theoretic question asked.
///
/// Queries are pure apart from the counters; keep an oracle on one thread or
/// shard the counters externally.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  std::uint32_t generator_count() const { return generator_count_; }
  const OracleStats& stats() const { return stats_; }
  void reset_stats() { stats_ = OracleStats{}; }

  /// True iff w evaluates to the identity. Throws input_error when w uses a
  /// generator id beyond generator_count(). Counts as one query of length
  /// |w|.
  bool is_identity(const Word& w);

  /// is_identity(w1 . w2^-1).
  bool equals(const Word& w1, const Word& w2);

  /// is_identity(w . w).
  bool has_order_at_most_2(const Word& w);

  /// is_identity of the commutator w1 . w2 . w1^-1 . w2^-1.
  bool commutes(const Word& w1, const Word& w2);

  /// Printable token for a generator id ("1", "2", ... or a declared name).
  virtual std::string token_name(std::uint32_t gen) const;

  /// Resolves a token back to a generator id, if it denotes one.
  virtual std::optional<std::uint32_t> find_generator(const std::string& token) const;

  /// The header suffix that reconstructs this oracle, e.g. "z2 3" or
  /// "sym 3 gens r=(1 2 3);t=(1 2)".
  virtual std::string header() const = 0;

 protected:
  explicit GroupOracle(std::uint32_t gens) : generator_count_(gens) {}
  virtual bool evaluates_to_identity(const Word& w) const = 0;

 private:
  std::uint32_t generator_count_ = 0;
  OracleStats stats_;
};

/// Builds an oracle from a group header suffix (the part after "group"):
///   z2 <k> | z <k> | cyclic <n> | sym <n> gens <name>=<cycles>;... |
///   free <r> | table <path>
/// Table paths are resolved relative to base_dir. Throws input_error on
/// malformed specs.
std::unique_ptr<GroupOracle> make_oracle(const std::string& header_spec,
                                         const std::string& base_dir = ".");

}  // namespace gaintrail
