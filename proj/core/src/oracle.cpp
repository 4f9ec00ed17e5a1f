#include "gaintrail/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "gaintrail/errors.hpp"

namespace gaintrail {

bool GroupOracle::is_identity(const Word& w) {
  for (const Symbol& s : w.symbols()) {
    if (s.gen == 0 || s.gen > generator_count_) {
      throw input_error("unknown generator id " + std::to_string(s.gen) + " (backend has " +
                        std::to_string(generator_count_) + " generators)");
    }
  }
  stats_.query_count += 1;
  stats_.total_query_length += w.size();
  stats_.max_query_length = std::max<std::uint64_t>(stats_.max_query_length, w.size());
  return evaluates_to_identity(w);
}

bool GroupOracle::equals(const Word& w1, const Word& w2) {
  return is_identity(concat(w1, invert(w2)));
}

bool GroupOracle::has_order_at_most_2(const Word& w) { return is_identity(concat(w, w)); }

bool GroupOracle::commutes(const Word& w1, const Word& w2) {
  return is_identity(concat(concat(w1, w2), concat(invert(w1), invert(w2))));
}

std::string GroupOracle::token_name(std::uint32_t gen) const { return std::to_string(gen); }

std::optional<std::uint32_t> GroupOracle::find_generator(const std::string& token) const {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  unsigned long id = std::strtoul(token.c_str(), nullptr, 10);
  if (id == 0 || id > generator_count()) return std::nullopt;
  return static_cast<std::uint32_t>(id);
}

namespace {

class Z2kOracle final : public GroupOracle {
 public:
  explicit Z2kOracle(std::uint32_t k) : GroupOracle(k) {}
  std::string header() const override { return "z2 " + std::to_string(generator_count()); }

 protected:
  bool evaluates_to_identity(const Word& w) const override {
    std::vector<char> parity(generator_count(), 0);
    for (const Symbol& s : w.symbols()) parity[s.gen - 1] ^= 1;
    return std::all_of(parity.begin(), parity.end(), [](char p) { return p == 0; });
  }
};

class ZkOracle final : public GroupOracle {
 public:
  explicit ZkOracle(std::uint32_t k) : GroupOracle(k) {}
  std::string header() const override { return "z " + std::to_string(generator_count()); }

 protected:
  bool evaluates_to_identity(const Word& w) const override {
    std::vector<long long> sum(generator_count(), 0);
    for (const Symbol& s : w.symbols()) sum[s.gen - 1] += s.inverse ? -1 : 1;
    return std::all_of(sum.begin(), sum.end(), [](long long v) { return v == 0; });
  }
};

class CyclicOracle final : public GroupOracle {
 public:
  explicit CyclicOracle(std::uint64_t n) : GroupOracle(1), order_(n) {}
  std::string header() const override { return "cyclic " + std::to_string(order_); }

 protected:
  bool evaluates_to_identity(const Word& w) const override {
    long long exponent = 0;
    for (const Symbol& s : w.symbols()) exponent += s.inverse ? -1 : 1;
    long long m = exponent % static_cast<long long>(order_);
    return m == 0;
  }

 private:
  std::uint64_t order_;
};

class FreeOracle final : public GroupOracle {
 public:
  explicit FreeOracle(std::uint32_t rank) : GroupOracle(rank) {}
  std::string header() const override { return "free " + std::to_string(generator_count()); }

 protected:
  bool evaluates_to_identity(const Word& w) const override { return free_reduce(w).empty(); }
};

// Permutations are stored as 0-based image tables. A word acts on points in
// reading order: the first symbol is applied first.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::uint32_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm invert_perm(const Perm& p) {
  Perm q(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

class SymmetricOracle final : public GroupOracle {
 public:
  SymmetricOracle(std::uint32_t points, std::vector<std::string> names, std::vector<Perm> perms)
      : GroupOracle(static_cast<std::uint32_t>(perms.size())),
        points_(points),
        names_(std::move(names)),
        perms_(std::move(perms)) {
    for (const Perm& p : perms_) inverses_.push_back(invert_perm(p));
  }

  std::string token_name(std::uint32_t gen) const override { return names_.at(gen - 1); }

  std::optional<std::uint32_t> find_generator(const std::string& token) const override {
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == token) return i + 1;
    }
    return std::nullopt;
  }

  std::string header() const override {
    std::string out = "sym " + std::to_string(points_) + " gens ";
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
      if (i > 0) out += ';';
      out += names_[i] + "=" + cycles_of(perms_[i]);
    }
    return out;
  }

 protected:
  bool evaluates_to_identity(const Word& w) const override {
    Perm acc = identity_perm(points_);
    for (const Symbol& s : w.symbols()) {
      const Perm& p = s.inverse ? inverses_[s.gen - 1] : perms_[s.gen - 1];
      for (std::uint32_t x = 0; x < points_; ++x) acc[x] = p[acc[x]];
    }
    for (std::uint32_t x = 0; x < points_; ++x) {
      if (acc[x] != x) return false;
    }
    return true;
  }

 private:
  static std::string cycles_of(const Perm& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (std::uint32_t i = 0; i < p.size(); ++i) {
      if (seen[i] || p[i] == i) continue;
      out += '(';
      std::uint32_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = 1;
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        first = false;
        j = p[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::uint32_t points_;
  std::vector<std::string> names_;
  std::vector<Perm> perms_;
  std::vector<Perm> inverses_;
};

class TableOracle final : public GroupOracle {
 public:
  TableOracle(std::string path, std::uint32_t identity, std::vector<std::uint32_t> gens,
              std::vector<std::vector<std::uint32_t>> table)
      : GroupOracle(static_cast<std::uint32_t>(gens.size())),
        path_(std::move(path)),
        identity_(identity),
        gens_(std::move(gens)),
        table_(std::move(table)) {
    inverse_.resize(table_.size());
    for (std::uint32_t g = 0; g < table_.size(); ++g) {
      for (std::uint32_t x = 0; x < table_.size(); ++x) {
        if (table_[g][x] == identity_) inverse_[g] = x;
      }
    }
  }

  std::string header() const override { return "table " + path_; }

 protected:
  bool evaluates_to_identity(const Word& w) const override {
    std::uint32_t acc = identity_;
    for (const Symbol& s : w.symbols()) {
      std::uint32_t g = gens_[s.gen - 1];
      acc = table_[acc][s.inverse ? inverse_[g] : g];
    }
    return acc == identity_;
  }

 private:
  std::string path_;
  std::uint32_t identity_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverse_;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_count(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw input_error(std::string("expected a non-negative integer for ") + what + ", got '" +
                      tok + "'");
  }
  return std::strtoull(tok.c_str(), nullptr, 10);
}

Perm parse_cycles(const std::string& text, std::uint32_t points, const std::string& name) {
  Perm p = identity_perm(points);
  std::vector<char> moved(points, 0);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw input_error("bad cycle notation for generator '" + name + "': " + why);
  };
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) fail("missing ')'");
    std::string inner = text.substr(i + 1, close - i - 1);
    for (char& c : inner) {
      if (c == ',') c = ' ';
    }
    std::vector<std::uint32_t> cycle;
    for (const std::string& tok : split_ws(inner)) {
      std::uint64_t v = parse_count(tok, "cycle entry");
      if (v == 0 || v > points) fail("point " + tok + " out of range 1.." + std::to_string(points));
      if (moved[v - 1]) fail("point " + tok + " appears twice");
      moved[v - 1] = 1;
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    i = close + 1;
    while (i < text.size() && text[i] == ' ') ++i;
  }
  return p;
}

std::unique_ptr<GroupOracle> make_symmetric(const std::string& spec) {
  // spec looks like: "<n> gens <name>=<cycles>;<name>=<cycles>..."
  std::istringstream in(spec);
  std::string n_tok, gens_kw;
  in >> n_tok >> gens_kw;
  std::uint64_t n = parse_count(n_tok, "symmetric group degree");
  if (n == 0) throw input_error("symmetric group degree must be at least 1");
  if (gens_kw != "gens") throw input_error("expected 'gens' after 'sym <n>'");
  std::string rest;
  std::getline(in, rest);
  while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
  if (rest.empty()) throw input_error("symmetric backend needs at least one generator");

  std::vector<std::string> names;
  std::vector<Perm> perms;
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t end = rest.find(';', start);
    std::string item = rest.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!item.empty()) {
      std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw input_error("expected <name>=<cycles> in '" + item + "'");
      std::string name = item.substr(0, eq);
      while (!name.empty() && name.back() == ' ') name.pop_back();
      std::string cycles = item.substr(eq + 1);
      while (!cycles.empty() && cycles.front() == ' ') cycles.erase(cycles.begin());
      if (name.empty()) throw input_error("generator name must be non-empty");
      if (std::find(names.begin(), names.end(), name) != names.end()) {
        throw input_error("duplicate generator name '" + name + "'");
      }
      names.push_back(name);
      perms.push_back(parse_cycles(cycles, static_cast<std::uint32_t>(n), name));
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (names.empty()) throw input_error("symmetric backend needs at least one generator");
  return std::make_unique<SymmetricOracle>(static_cast<std::uint32_t>(n), std::move(names),
                                           std::move(perms));
}

std::unique_ptr<GroupOracle> load_table(const std::string& path_spec, const std::string& base_dir) {
  std::string path = path_spec;
  if (!path.empty() && path.front() != '/') path = base_dir + "/" + path;
  std::ifstream in(path);
  if (!in) throw input_error("cannot open group table file '" + path + "'");

  auto next_tokens = [&in]() -> std::vector<std::string> {
    std::string line;
    while (std::getline(in, line)) {
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::vector<std::string> toks = split_ws(line);
      if (!toks.empty()) return toks;
    }
    return {};
  };

  auto expect_keyword = [&](const char* kw) -> std::vector<std::string> {
    std::vector<std::string> toks = next_tokens();
    if (toks.empty() || toks[0] != kw) {
      throw input_error(std::string("group table file: expected '") + kw + "' line");
    }
    return toks;
  };

  std::vector<std::string> toks = expect_keyword("elements");
  if (toks.size() != 2) throw input_error("group table file: 'elements <n>' expected");
  std::uint64_t n = parse_count(toks[1], "element count");
  if (n == 0) throw input_error("group table file: need at least one element");

  toks = expect_keyword("identity");
  if (toks.size() != 2) throw input_error("group table file: 'identity <index>' expected");
  std::uint64_t identity = parse_count(toks[1], "identity index");
  if (identity >= n) throw input_error("group table file: identity index out of range");

  toks = expect_keyword("generators");
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    std::uint64_t g = parse_count(toks[i], "generator index");
    if (g >= n) throw input_error("group table file: generator index out of range");
    gens.push_back(static_cast<std::uint32_t>(g));
  }
  if (gens.empty()) throw input_error("group table file: need at least one generator");

  expect_keyword("table");
  std::vector<std::vector<std::uint32_t>> table;
  while (table.size() < n) {
    std::vector<std::string> row = next_tokens();
    if (row.size() != n) throw input_error("group table file: table row with " +
                                           std::to_string(row.size()) + " entries, expected " +
                                           std::to_string(n));
    std::vector<std::uint32_t> r;
    for (const std::string& t : row) {
      std::uint64_t v = parse_count(t, "table entry");
      if (v >= n) throw input_error("group table file: table entry out of range");
      r.push_back(static_cast<std::uint32_t>(v));
    }
    table.push_back(std::move(r));
  }

  // Structural checks: identity behaves, rows/columns are permutations, and
  // (for small tables) associativity.
  for (std::uint32_t x = 0; x < n; ++x) {
    if (table[identity][x] != x || table[x][identity] != x) {
      throw input_error("group table file: identity row/column mismatch");
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (std::uint32_t y = 0; y < n; ++y) {
      if (seen_row[table[x][y]]++) throw input_error("group table file: row is not a permutation");
      if (seen_col[table[y][x]]++) {
        throw input_error("group table file: column is not a permutation");
      }
    }
  }
  if (n <= 256) {
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        for (std::uint32_t z = 0; z < n; ++z) {
          if (table[table[x][y]][z] != table[x][table[y][z]]) {
            throw input_error("group table file: multiplication is not associative");
          }
        }
      }
    }
  }

  return std::make_unique<TableOracle>(path_spec, static_cast<std::uint32_t>(identity),
                                       std::move(gens), std::move(table));
}

}  // namespace

std::unique_ptr<GroupOracle> make_oracle(const std::string& header_spec,
                                         const std::string& base_dir) {
  std::istringstream in(header_spec);
  std::string kind;
  in >> kind;
  std::string rest;
  std::getline(in, rest);
  while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());

  if (kind == "z2") {
    return std::make_unique<Z2kOracle>(
        static_cast<std::uint32_t>(parse_count(rest, "z2 rank")));
  }
  if (kind == "z") {
    return std::make_unique<ZkOracle>(static_cast<std::uint32_t>(parse_count(rest, "z rank")));
  }
  if (kind == "cyclic") {
    std::uint64_t order = parse_count(rest, "cyclic order");
    if (order == 0) throw input_error("cyclic order must be at least 1");
    return std::make_unique<CyclicOracle>(order);
  }
  if (kind == "free") {
    return std::make_unique<FreeOracle>(
        static_cast<std::uint32_t>(parse_count(rest, "free rank")));
  }
  if (kind == "sym") {
    return make_symmetric(rest);
  }
  if (kind == "table") {
    if (rest.empty()) throw input_error("table backend needs a file path");
    return load_table(rest, base_dir);
  }
  throw input_error("unknown group backend '" + kind + "'");
}

}  // namespace gaintrail
