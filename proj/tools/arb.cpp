// Command-line front end. Talks to the library only through arrowribbon.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "arrowribbon.h"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct Failure {
  arb_status status;
  std::string message;
};

void check(arb_status s) {
  if (s != ARB_OK) throw Failure{s, arb_last_error()};
}

struct GraphFree {
  void operator()(arb_graph* g) const { arb_graph_free(g); }
};
struct PolyFree {
  void operator()(arb_poly* p) const { arb_poly_free(p); }
};
struct LinkFree {
  void operator()(arb_link* l) const { arb_link_free(l); }
};
using Graph = std::unique_ptr<arb_graph, GraphFree>;
using Poly = std::unique_ptr<arb_poly, PolyFree>;
using Link = std::unique_ptr<arb_link, LinkFree>;

std::string take(char* s) {
  std::string out(s);
  arb_string_free(s);
  return out;
}

struct Common {
  std::string input = "-";
  std::string format = "text";
  unsigned threads = 1;
  bool json() const { return format == "json"; }
};

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Failure{ARB_ERR_INVALID_ARGUMENT, "cannot open " + path};
    ss << in.rdbuf();
  }
  return ss.str();
}

// Gauss codes may span lines; line breaks separate nothing.
std::string gauss_text(const std::string& raw) {
  std::string out;
  for (char ch : raw) out.push_back(ch == '\n' || ch == '\r' ? ' ' : ch);
  return out;
}

Graph load_graph(const Common& c) {
  arb_graph* g = nullptr;
  check(arb_graph_from_json(read_input(c.input).c_str(), &g));
  return Graph(g);
}

Link load_link(const Common& c) {
  arb_link* l = nullptr;
  check(arb_link_parse(gauss_text(read_input(c.input)).c_str(), &l));
  return Link(l);
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string poly_text(const arb_poly* p) {
  char* s = nullptr;
  check(arb_poly_to_string(p, &s));
  return take(s);
}

std::string poly_json(const arb_poly* p) {
  char* s = nullptr;
  check(arb_poly_to_json(p, &s));
  return take(s);
}

void print_poly(const Common& c, const arb_poly* p) {
  std::cout << (c.json() ? poly_json(p) : poly_text(p)) << "\n";
}

void print_graph(const Common& c, const arb_graph* g) {
  char* s = nullptr;
  check(arb_graph_to_json(g, &s));
  const std::string graph = take(s);
  if (!c.json()) {
    std::cout << graph << "\n";
    return;
  }
  check(arb_graph_canonical_form(g, 1, 0, &s));
  std::cout << "{\"canonical_form\":" << quoted(take(s)) << ",\"graph\":" << graph << "}\n";
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) out.push_back(id);
    }
  }
  return out;
}

std::string state_at(const arb_link* l, unsigned long long index) {
  char* s = nullptr;
  check(arb_link_state_from_index(l, index, &s));
  return take(s);
}

struct IdentityResult {
  bool equal = false;
  std::string lhs;
  std::string rhs;
};

IdentityResult identity(const arb_link* l, arb_link_identity which, const std::string& state, unsigned threads) {
  arb_poly* lhs = nullptr;
  arb_poly* rhs = nullptr;
  int equal = 0;
  check(arb_link_verify_identity(l, which, state.c_str(), threads, &lhs, &rhs, &equal));
  Poly pl(lhs);
  Poly pr(rhs);
  return {equal != 0, poly_text(pl.get()), poly_text(pr.get())};
}

int verify_thistlethwaite(const Common& c, bool all_states, const std::string& state) {
  Link l = load_link(c);
  std::vector<std::string> states;
  if (all_states || state.empty()) {
    size_t n = 0;
    check(arb_link_num_crossings(l.get(), &n));
    if (n >= 63) throw Failure{ARB_ERR_SIZE_LIMIT, "too many crossings"};
    for (unsigned long long i = 0; i < (1ULL << n); ++i) states.push_back(state_at(l.get(), i));
  } else {
    states.push_back(state);
  }
  std::size_t passed = 0;
  std::string json_rows;
  for (const auto& s : states) {
    const IdentityResult r = identity(l.get(), ARB_IDENTITY_THISTLETHWAITE, s, c.threads);
    passed += r.equal ? 1 : 0;
    if (c.json()) {
      if (!json_rows.empty()) json_rows += ",";
      json_rows += "{\"state\":" + quoted(s) + ",\"equal\":" + (r.equal ? "true" : "false") + ",\"lhs\":" + quoted(r.lhs) +
                   ",\"rhs\":" + quoted(r.rhs) + "}";
    } else {
      std::cout << "state " << (s.empty() ? "(none)" : s) << ": " << (r.equal ? "PASS" : "FAIL") << "\n";
      if (!r.equal) std::cout << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << "\n";
    }
  }
  const bool ok = passed == states.size();
  if (c.json()) {
    std::cout << "{\"passed\":" << passed << ",\"total\":" << states.size() << ",\"ok\":" << (ok ? "true" : "false")
              << ",\"states\":[" << json_rows << "]}\n";
  } else {
    std::cout << passed << "/" << states.size() << " states " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

int verify_graph_properties(const Common& c, const std::string& text) {
  arb_graph* raw = nullptr;
  check(arb_graph_from_json(text.c_str(), &raw));
  Graph g(raw);
  char* report = nullptr;
  int ok = 0;
  check(arb_graph_verify_properties(g.get(), c.threads, &report, &ok));
  const std::string json = take(report);
  if (c.json()) {
    std::cout << json << "\n";
  } else {
    for (const auto& check : nlohmann::json::parse(json)["checks"]) {
      const auto passed = check["passed"].get<std::size_t>();
      const auto total = check["total"].get<std::size_t>();
      std::cout << (passed == total ? "PASS " : "FAIL ") << check["name"].get<std::string>() << " (" << passed << "/"
                << total << ")\n";
    }
    std::cout << (ok != 0 ? "all properties PASS" : "some properties FAIL") << "\n";
  }
  return ok != 0 ? kOk : kVerifyFailed;
}

int verify_link_properties(const Common& c, const std::string& text) {
  arb_link* raw = nullptr;
  check(arb_link_parse(gauss_text(text).c_str(), &raw));
  Link l(raw);
  size_t n = 0;
  check(arb_link_num_crossings(l.get(), &n));
  if (n > 10) throw Failure{ARB_ERR_SIZE_LIMIT, "verify-properties handles at most 10 crossings"};
  const unsigned long long total = 1ULL << n;
  struct Row {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
  };
  std::vector<Row> rows(4);
  rows[0].name = "Thistlethwaite identity for every state";
  rows[1].name = "state graphs are partial duals";
  rows[2].name = "all-A specialization";
  rows[3].name = "Seifert specialization";
  for (unsigned long long i = 0; i < total; ++i) {
    const std::string s = state_at(l.get(), i);
    rows[0].total += 1;
    rows[0].passed += identity(l.get(), ARB_IDENTITY_THISTLETHWAITE, s, c.threads).equal ? 1 : 0;
    if (n <= 4) {
      for (unsigned long long j = 0; j < total; ++j) {
        int eq = 0;
        check(arb_link_verify_state_duality(l.get(), s.c_str(), state_at(l.get(), j).c_str(), &eq));
        rows[1].total += 1;
        rows[1].passed += eq != 0 ? 1 : 0;
      }
    }
  }
  rows[2].total = rows[3].total = 1;
  rows[2].passed = identity(l.get(), ARB_IDENTITY_ALL_A, "", c.threads).equal ? 1 : 0;
  rows[3].passed = identity(l.get(), ARB_IDENTITY_SEIFERT, "", c.threads).equal ? 1 : 0;
  bool ok = true;
  std::string json_rows;
  for (const auto& r : rows) {
    ok = ok && r.passed == r.total;
    if (c.json()) {
      if (!json_rows.empty()) json_rows += ",";
      json_rows += "{\"name\":" + quoted(r.name) + ",\"passed\":" + std::to_string(r.passed) +
                   ",\"total\":" + std::to_string(r.total) + "}";
    } else {
      std::cout << (r.passed == r.total ? "PASS " : "FAIL ") << r.name << " (" << r.passed << "/" << r.total << ")\n";
    }
  }
  if (c.json()) {
    std::cout << "{\"ok\":" << (ok ? "true" : "false") << ",\"checks\":[" << json_rows << "]}\n";
  } else {
    std::cout << (ok ? "all properties PASS" : "some properties FAIL") << "\n";
  }
  return ok ? kOk : kVerifyFailed;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "input file, '-' for stdin")->capture_default_str();
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker threads for state sums, 0 = all cores")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arrow ribbon graphs and virtual link invariants"};
  app.require_subcommand(1);
  Common c;

  auto* graph_poly = app.add_subcommand("graph-poly", "state-sum polynomial of a graph");
  add_common(graph_poly, c);
  auto* kinds = graph_poly->add_option_group("kind");
  bool arrow = false, dichromatic = false, tutte = false, abr = false, sbr = false, sdich = false;
  kinds->add_flag("--arrow", arrow, "arrow dichromatic polynomial A_G (default)");
  kinds->add_flag("--dichromatic", dichromatic, "dichromatic polynomial Z_G");
  kinds->add_flag("--tutte", tutte, "Tutte polynomial");
  kinds->add_flag("--abr", abr, "arrow Bollobas-Riordan polynomial with weights x[e], y[e]");
  kinds->add_flag("--sbr", sbr, "signed Bollobas-Riordan polynomial");
  kinds->add_flag("--signed-dichromatic", sdich, "signed dichromatic substitution");
  kinds->require_option(0, 1);

  auto* graph_dual = app.add_subcommand("graph-dual", "partial dual (all edges without -D)");
  add_common(graph_dual, c);
  std::vector<std::string> dual_edges;
  graph_dual->add_option("-D,--edges", dual_edges, "edge ids, comma separated or repeated")->allow_extra_args(false);

  std::string edge_id;
  auto* graph_delete = app.add_subcommand("graph-delete", "delete an edge");
  add_common(graph_delete, c);
  graph_delete->add_option("-e,--edge", edge_id, "edge id")->required();
  auto* graph_contract = app.add_subcommand("graph-contract", "contract an edge");
  add_common(graph_contract, c);
  graph_contract->add_option("-e,--edge", edge_id, "edge id")->required();

  auto* link_bracket = app.add_subcommand("link-bracket", "Kauffman bracket <L>(A, B, d)");
  add_common(link_bracket, c);
  auto* link_arrow = app.add_subcommand("link-arrow", "arrow bracket <L>_A(A, B, d, K)");
  add_common(link_arrow, c);
  auto* link_jones = app.add_subcommand("link-jones", "Jones polynomial");
  add_common(link_jones, c);
  auto* link_normalized = app.add_subcommand("link-normalized", "normalized arrow polynomial");
  add_common(link_normalized, c);

  std::string state;
  auto* link_graph = app.add_subcommand("link-graph", "signed arrow ribbon graph of a state");
  add_common(link_graph, c);
  link_graph->add_option("-s,--state", state, "A/B list in crossing order, or allA, allB, seifert, disoriented")
      ->required();

  bool all_states = false;
  auto* verify_th = app.add_subcommand("verify-thistlethwaite", "check the arrow Thistlethwaite identity");
  add_common(verify_th, c);
  auto* th_group = verify_th->add_option_group("states");
  th_group->add_flag("--all-states", all_states, "every state (default)");
  th_group->add_option("-s,--state", state, "a single state");
  th_group->require_option(0, 1);

  auto* verify_props = app.add_subcommand("verify-properties", "check the identities on a graph or a link diagram");
  add_common(verify_props, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (graph_poly->parsed()) {
      Graph g = load_graph(c);
      arb_graph_poly_kind kind = ARB_POLY_ARROW_DICHROMATIC;
      if (dichromatic) kind = ARB_POLY_DICHROMATIC;
      if (tutte) kind = ARB_POLY_TUTTE;
      if (abr) kind = ARB_POLY_ARROW_BR;
      if (sbr) kind = ARB_POLY_SIGNED_BR;
      if (sdich) kind = ARB_POLY_SIGNED_DICHROMATIC;
      arb_poly* p = nullptr;
      check(arb_graph_polynomial(g.get(), kind, c.threads, &p));
      Poly poly(p);
      print_poly(c, poly.get());
    } else if (graph_dual->parsed()) {
      Graph g = load_graph(c);
      arb_graph* out = nullptr;
      if (graph_dual->count("-D") == 0) {
        check(arb_graph_natural_dual(g.get(), &out));
      } else {
        const auto ids = split_ids(dual_edges);
        std::vector<const char*> ptrs;
        for (const auto& id : ids) ptrs.push_back(id.c_str());
        check(arb_graph_partial_dual(g.get(), ptrs.data(), ptrs.size(), &out));
      }
      Graph result(out);
      print_graph(c, result.get());
    } else if (graph_delete->parsed() || graph_contract->parsed()) {
      Graph g = load_graph(c);
      arb_graph* out = nullptr;
      check(graph_delete->parsed() ? arb_graph_delete_edge(g.get(), edge_id.c_str(), &out)
                                   : arb_graph_contract_edge(g.get(), edge_id.c_str(), &out));
      Graph result(out);
      print_graph(c, result.get());
    } else if (link_bracket->parsed() || link_arrow->parsed() || link_jones->parsed() || link_normalized->parsed()) {
      Link l = load_link(c);
      arb_link_poly_kind kind = ARB_LINK_KAUFFMAN_BRACKET;
      if (link_arrow->parsed()) kind = ARB_LINK_ARROW_BRACKET;
      if (link_jones->parsed()) kind = ARB_LINK_JONES;
      if (link_normalized->parsed()) kind = ARB_LINK_NORMALIZED_ARROW;
      arb_poly* p = nullptr;
      check(arb_link_polynomial(l.get(), kind, &p));
      Poly poly(p);
      print_poly(c, poly.get());
    } else if (link_graph->parsed()) {
      Link l = load_link(c);
      arb_graph* out = nullptr;
      check(arb_link_state_graph(l.get(), state.c_str(), &out));
      Graph g(out);
      print_graph(c, g.get());
    } else if (verify_th->parsed()) {
      return verify_thistlethwaite(c, all_states, state);
    } else if (verify_props->parsed()) {
      const std::string text = read_input(c.input);
      const auto first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && text[first] == '{') return verify_graph_properties(c, text);
      return verify_link_properties(c, text);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << arb_status_name(f.status) << ": " << f.message << "\n";
    return kInputError;
  }
  return kOk;
}
