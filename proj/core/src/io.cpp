#include "gaintrail/io.hpp"

#include <fstream>
#include <sstream>

#include "gaintrail/errors.hpp"

namespace gaintrail {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& why) {
  throw input_error("line " + std::to_string(line_no) + ": " + why);
}

void check_id(std::size_t line_no, const std::string& kind, const std::string& id) {
  if (id.empty()) fail(line_no, kind + " id must be non-empty");
  if (id.find_first_of("[]#'*") != std::string::npos) {
    fail(line_no, kind + " id '" + id + "' uses a reserved character ([]#'*)");
  }
}

}  // namespace

ParsedInput parse_input(const std::string& text, const std::string& base_dir) {
  ParsedInput out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool have_group = false;

  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> toks = tokenize(raw);
    if (toks.empty()) continue;

    if (!have_group) {
      if (toks[0] != "group") fail(line_no, "expected 'group <backend>' as the first directive");
      std::string spec;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (i > 1) spec += ' ';
        spec += toks[i];
      }
      try {
        out.oracle = make_oracle(spec, base_dir);
      } catch (const input_error& e) {
        fail(line_no, e.what());
      }
      out.group_header = spec;
      have_group = true;
      continue;
    }

    if (toks[0] == "vertex") {
      if (toks.size() != 2) fail(line_no, "expected 'vertex <id>'");
      check_id(line_no, "vertex", toks[1]);
      out.graph.add_vertex(toks[1]);
      continue;
    }

    if (toks[0] == "edge") {
      if (toks.size() < 4) fail(line_no, "expected 'edge <id> <u> <v> [ <word> ]'");
      check_id(line_no, "edge", toks[1]);
      check_id(line_no, "vertex", toks[2]);
      check_id(line_no, "vertex", toks[3]);
      if (out.graph.has_edge(toks[1])) fail(line_no, "duplicate edge id '" + toks[1] + "'");

      Word label;
      if (toks.size() > 4) {
        if (toks[4] != "[" || toks.back() != "]") {
          fail(line_no, "edge word must be bracketed: [ <tokens> ]");
        }
        std::vector<std::string> word_toks(toks.begin() + 5, toks.end() - 1);
        try {
          label = word_from_tokens(word_toks, *out.oracle);
        } catch (const input_error& e) {
          fail(line_no, e.what());
        }
      }
      out.graph.add_edge(toks[1], toks[2], toks[3], std::move(label));
      continue;
    }

    fail(line_no, "unknown directive '" + toks[0] + "'");
  }

  if (!have_group) throw input_error("missing 'group' header line");
  return out;
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  std::string dir = ".";
  std::size_t slash = path.find_last_of('/');
  if (slash != std::string::npos) dir = path.substr(0, slash);
  return parse_input(text.str(), dir);
}

std::string serialize_input(const ParsedInput& p) {
  std::ostringstream out;
  out << "group " << p.group_header << "\n";
  for (const std::string& v : p.graph.vertex_ids()) out << "vertex " << v << "\n";
  for (const std::string& id : p.graph.edge_ids()) {
    const EdgeRecord& e = p.graph.edge(id);
    out << "edge " << id << " " << e.u << " " << e.v << " [";
    std::string w = word_tokens(e.label, *p.oracle);
    if (!w.empty()) out << " " << w;
    out << " ]\n";
  }
  return out.str();
}

std::string word_tokens(const Word& w, const GroupOracle& oracle) {
  std::string out;
  for (const Symbol& s : w.symbols()) {
    if (!out.empty()) out += ' ';
    out += s.inverse ? '-' : '+';
    out += oracle.token_name(s.gen);
  }
  return out;
}

Word word_from_tokens(const std::vector<std::string>& tokens, const GroupOracle& oracle) {
  Word w;
  for (const std::string& tok : tokens) {
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
      throw input_error("word token '" + tok + "' must look like +<gen> or -<gen>");
    }
    std::string name = tok.substr(1);
    std::optional<std::uint32_t> gen = oracle.find_generator(name);
    if (!gen) throw input_error("unknown generator '" + name + "'");
    w.push(Symbol{*gen, tok[0] == '-'});
  }
  return w;
}

}  // namespace gaintrail
