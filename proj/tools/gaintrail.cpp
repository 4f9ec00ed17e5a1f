// Command-line front end: decide / witness / cores / enumerate / normalize
// over the line-oriented graph file format.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "gaintrail/brute.hpp"
#include "gaintrail/cores.hpp"
#include "gaintrail/decide.hpp"
#include "gaintrail/errors.hpp"
#include "gaintrail/io.hpp"
#include "gaintrail/witness.hpp"

using json = nlohmann::json;
using namespace gaintrail;

namespace {

std::string bracketed(const Word& w, const GroupOracle& oracle) {
  std::string tokens = word_tokens(w, oracle);
  return tokens.empty() ? "[ ]" : "[ " + tokens + " ]";
}

json shifting_json(const Shifting& s, const GroupOracle& oracle) {
  json out = json::object();
  for (const auto& [vertex, w] : s.words()) out[vertex] = word_tokens(w, oracle);
  return out;
}

json stats_json(const GroupOracle& oracle, const LabeledGraph& g) {
  const OracleStats& st = oracle.stats();
  return json{{"queries", st.query_count},
              {"max_query_length", st.max_query_length},
              {"total_query_length", st.total_query_length},
              {"length_budget", 12 * g.total_label_length()}};
}

void print_stats(const GroupOracle& oracle, const LabeledGraph& g) {
  const OracleStats& st = oracle.stats();
  std::cout << "oracle-queries " << st.query_count << "\n";
  std::cout << "max-query-length " << st.max_query_length << "\n";
  std::cout << "length-budget " << 12 * g.total_label_length() << "\n";
}

void print_core_line(const std::vector<std::string>& block) {
  std::cout << "core {";
  for (const std::string& v : block) std::cout << " " << v;
  std::cout << " }";
}

// Endpoint convention when a command takes none: the two odd-degree
// vertices if they exist, else the smallest edge-incident vertex twice.
// Empty result means no Eulerian endpoints can be named.
std::pair<std::string, std::string> default_endpoints(const LabeledGraph& g) {
  std::vector<std::string> odd;
  for (const std::string& v : g.vertex_ids()) {
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  }
  if (odd.size() == 2) return {odd.front(), odd.back()};
  if (!odd.empty()) return {"", ""};
  if (g.edge_count() == 0) {
    auto vs = g.vertex_ids();
    if (vs.empty()) return {"", ""};
    return {vs.front(), vs.front()};
  }
  std::string best;
  for (const auto& [id, e] : g.edges()) {
    for (const std::string& v : {e.u, e.v}) {
      if (best.empty() || v < best) best = v;
    }
  }
  return {best, best};
}

int run_decide(const std::string& file, const std::string& from, const std::string& to,
               bool as_json, bool with_stats) {
  ParsedInput in = parse_input_file(file);
  Verdict v = decide(in.graph, *in.oracle, from, to);

  if (as_json) {
    json out{{"schema", 1}, {"command", "decide"}};
    out["verdict"] = v.kind == VerdictKind::vacuous_yes ? "vacuous-yes"
                     : v.kind == VerdictKind::yes       ? "yes"
                                                        : "no";
    if (v.kind != VerdictKind::vacuous_yes) {
      Trail C = find_trail(in.graph, from, to);
      json cores = json::array();
      for (const auto& block : core_partition(in.graph).blocks) {
        ValidInstance inst = extract_valid_instance(in.graph, C, block);
        cores.push_back(json{{"block", block},
                             {"vertices", inst.graph.vertex_count()},
                             {"edges", inst.graph.edge_count()},
                             {"a_prime", inst.a_prime},
                             {"b_prime", inst.b_prime}});
      }
      out["cores"] = cores;
    }
    if (v.kind == VerdictKind::yes) out["shifting"] = shifting_json(v.shifting, *in.oracle);
    if (v.kind == VerdictKind::no) {
      out["core"] = v.offending_core;
      const Violation& viol = *v.violation;
      out["violation"] = json{
          {"kind", viol.kind == Violation::Kind::involution ? "involution" : "commutation"},
          {"edges", {viol.edge_a, viol.edge_b}},
          {"labels", {word_tokens(viol.label_a, *in.oracle), word_tokens(viol.label_b, *in.oracle)}}};
    }
    out["stats"] = stats_json(*in.oracle, in.graph);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  switch (v.kind) {
    case VerdictKind::vacuous_yes:
      std::cout << "vacuous-yes\n";
      break;
    case VerdictKind::yes:
      std::cout << "yes\n";
      for (const auto& [vertex, w] : v.shifting.words()) {
        std::cout << "shift " << vertex << " " << bracketed(w, *in.oracle) << "\n";
      }
      break;
    case VerdictKind::no: {
      std::cout << "no\n";
      print_core_line(v.offending_core);
      std::cout << "\n";
      const Violation& viol = *v.violation;
      if (viol.kind == Violation::Kind::involution) {
        std::cout << "involution " << viol.edge_a << " " << bracketed(viol.label_a, *in.oracle)
                  << "\n";
      } else {
        std::cout << "commutation " << viol.edge_a << " " << bracketed(viol.label_a, *in.oracle)
                  << " " << viol.edge_b << " " << bracketed(viol.label_b, *in.oracle) << "\n";
      }
      break;
    }
  }
  if (with_stats) print_stats(*in.oracle, in.graph);
  return 0;
}

int run_witness(const std::string& file, const std::string& from, const std::string& to,
                bool as_json) {
  ParsedInput in = parse_input_file(file);
  Witness w = find_witness(in.graph, *in.oracle, from, to);

  Word label1 = trail_label(in.graph, w.trail_with_circuit);
  Word label2 = trail_label(in.graph, w.trail_with_inverse);
  if (as_json) {
    json out{{"schema", 1},
             {"command", "witness"},
             {"L", trail_tokens(w.circuit)},
             {"T1", trail_tokens(w.prefix)},
             {"T2", trail_tokens(w.suffix)},
             {"trail1", trail_tokens(w.trail_with_circuit)},
             {"trail2", trail_tokens(w.trail_with_inverse)},
             {"label1", word_tokens(label1, *in.oracle)},
             {"label2", word_tokens(label2, *in.oracle)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "L " << trail_tokens(w.circuit) << "\n";
  std::cout << "T1 " << trail_tokens(w.prefix) << "\n";
  std::cout << "T2 " << trail_tokens(w.suffix) << "\n";
  std::cout << "trail1 " << trail_tokens(w.trail_with_circuit) << "\n";
  std::cout << "trail2 " << trail_tokens(w.trail_with_inverse) << "\n";
  std::cout << "label1 " << bracketed(label1, *in.oracle) << "\n";
  std::cout << "label2 " << bracketed(label2, *in.oracle) << "\n";
  return 0;
}

int run_cores(const std::string& file, std::string from, std::string to, bool as_json) {
  ParsedInput in = parse_input_file(file);
  CorePartition partition = core_partition(in.graph);

  if (from.empty() != to.empty()) {
    throw input_error("--from and --to must be given together");
  }
  if (from.empty()) std::tie(from, to) = default_endpoints(in.graph);
  bool have_trail = !from.empty() && trail_exists(in.graph, from, to);

  std::vector<ValidInstance> instances;
  if (have_trail) {
    Trail C = find_trail(in.graph, from, to);
    for (const auto& block : partition.blocks) {
      instances.push_back(extract_valid_instance(in.graph, C, block));
    }
  }

  if (as_json) {
    json out{{"schema", 1}, {"command", "cores"}};
    out["blocks"] = partition.blocks;
    if (have_trail) {
      out["from"] = from;
      out["to"] = to;
      json insts = json::array();
      for (std::size_t i = 0; i < instances.size(); ++i) {
        insts.push_back(json{{"block", partition.blocks[i]},
                             {"vertices", instances[i].graph.vertex_count()},
                             {"edges", instances[i].graph.edge_count()},
                             {"a_prime", instances[i].a_prime},
                             {"b_prime", instances[i].b_prime}});
      }
      out["instances"] = insts;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
    print_core_line(partition.blocks[i]);
    if (have_trail) {
      std::cout << " |V|=" << instances[i].graph.vertex_count()
                << " |E|=" << instances[i].graph.edge_count() << " a'=" << instances[i].a_prime
                << " b'=" << instances[i].b_prime;
    }
    std::cout << "\n";
  }
  if (!have_trail) std::cout << "no-eulerian-trail\n";
  return 0;
}

int run_enumerate(const std::string& file, const std::string& from, const std::string& to,
                  std::size_t cap, bool as_json) {
  ParsedInput in = parse_input_file(file);
  std::vector<Trail> trails = enumerate_trails(in.graph, from, to, cap);

  // Distinct labels under oracle equality, first representative kept.
  std::vector<Word> labels;
  for (const Trail& t : trails) {
    Word w = trail_label(in.graph, t);
    bool fresh = true;
    for (const Word& seen : labels) {
      if (in.oracle->equals(w, seen)) {
        fresh = false;
        break;
      }
    }
    if (fresh) labels.push_back(w);
  }

  if (as_json) {
    json out{{"schema", 1}, {"command", "enumerate"}, {"trails", trails.size()}};
    json ls = json::array();
    for (const Word& w : labels) ls.push_back(word_tokens(w, *in.oracle));
    out["labels"] = ls;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "trails " << trails.size() << "\n";
  std::cout << "labels " << labels.size() << "\n";
  for (const Word& w : labels) std::cout << "label " << bracketed(w, *in.oracle) << "\n";
  return 0;
}

int run_normalize(const std::string& file, const std::string& root, bool as_json) {
  ParsedInput in = parse_input_file(file);
  NormalizedLabeling n = normalized_shifting(in.graph, root);

  if (as_json) {
    json out{{"schema", 1},
             {"command", "normalize"},
             {"difference", n.shifting.difference()},
             {"shifting", shifting_json(n.shifting, *in.oracle)},
             {"tree_edges", n.tree_edges}};
    json edges = json::array();
    for (const std::string& id : n.graph.edge_ids()) {
      const EdgeRecord& e = n.graph.edge(id);
      edges.push_back(json{{"id", id},
                           {"u", e.u},
                           {"v", e.v},
                           {"label", word_tokens(e.label, *in.oracle)}});
    }
    out["edges"] = edges;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  ParsedInput shifted{in.oracle, n.graph, in.group_header};
  std::cout << serialize_input(shifted);
  std::cout << "difference " << n.shifting.difference() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Label uniqueness of Eulerian trails in group-labeled multigraphs"};
  app.require_subcommand(1);

  std::string file, from, to, root;
  bool as_json = false, with_stats = false;
  std::size_t cap = 100000;

  CLI::App* cmd_decide = app.add_subcommand("decide", "Decide label uniqueness");
  cmd_decide->add_option("file", file)->required();
  cmd_decide->add_option("--from", from)->required();
  cmd_decide->add_option("--to", to)->required();
  cmd_decide->add_flag("--json", as_json);
  cmd_decide->add_flag("--stats", with_stats);

  CLI::App* cmd_witness = app.add_subcommand("witness", "Exhibit two differing Eulerian trails");
  cmd_witness->add_option("file", file)->required();
  cmd_witness->add_option("--from", from)->required();
  cmd_witness->add_option("--to", to)->required();
  cmd_witness->add_flag("--json", as_json);

  CLI::App* cmd_cores = app.add_subcommand("cores", "3-edge-connected vertex blocks");
  cmd_cores->add_option("file", file)->required();
  cmd_cores->add_option("--from", from);
  cmd_cores->add_option("--to", to);
  cmd_cores->add_flag("--json", as_json);

  CLI::App* cmd_enum = app.add_subcommand("enumerate", "Exhaustive Eulerian trail listing");
  cmd_enum->add_option("file", file)->required();
  cmd_enum->add_option("--from", from)->required();
  cmd_enum->add_option("--to", to)->required();
  cmd_enum->add_option("--cap", cap);
  cmd_enum->add_flag("--json", as_json);

  CLI::App* cmd_norm = app.add_subcommand("normalize", "Rebase labels on a spanning tree");
  cmd_norm->add_option("file", file)->required();
  cmd_norm->add_option("--root", root)->required();
  cmd_norm->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_decide->parsed()) return run_decide(file, from, to, as_json, with_stats);
    if (cmd_witness->parsed()) return run_witness(file, from, to, as_json);
    if (cmd_cores->parsed()) return run_cores(file, from, to, as_json);
    if (cmd_enum->parsed()) return run_enumerate(file, from, to, cap, as_json);
    if (cmd_norm->parsed()) return run_normalize(file, root, as_json);
  } catch (const enumeration_overflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
