#include "arrowribbon.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "arrowribbon/duality.hpp"
#include "arrowribbon/graphpoly.hpp"
#include "arrowribbon/json_io.hpp"
#include "arrowribbon/transfer.hpp"
#include "arrowribbon/verify.hpp"
#include "arrowribbon/vlink.hpp"

struct arb_graph {
  arrowribbon::ArrowRibbonGraph value;
};

struct arb_poly {
  arrowribbon::LaurentPoly value;
};

struct arb_link {
  arrowribbon::VirtualLinkDiagram value;
};

namespace {

using namespace arrowribbon;

thread_local std::string last_error;

arb_status status_of(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return ARB_ERR_INVALID_ARGUMENT;
    case Errc::Parse: return ARB_ERR_PARSE;
    case Errc::InvalidGraph: return ARB_ERR_INVALID_GRAPH;
    case Errc::UnknownEdge: return ARB_ERR_UNKNOWN_EDGE;
    case Errc::MissingSigns: return ARB_ERR_MISSING_SIGNS;
    case Errc::NonInvertibleSubstitution: return ARB_ERR_NON_INVERTIBLE;
    case Errc::SizeLimit: return ARB_ERR_SIZE_LIMIT;
    case Errc::InvalidLink: return ARB_ERR_INVALID_LINK;
    case Errc::MoveMismatch: return ARB_ERR_MOVE_MISMATCH;
  }
  return ARB_ERR_INTERNAL;
}

arb_status fail(arb_status s, const std::string& message) {
  last_error = message;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
arb_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return ARB_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ARB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ARB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ARB_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(Errc::InvalidArgument, std::string(what) + " is null");
}

StateSumOptions sums(unsigned threads) {
  StateSumOptions o;
  o.threads = threads;
  return o;
}

}  // namespace

extern "C" {

const char* arb_version(void) { return "1.0.0"; }

const char* arb_last_error(void) { return last_error.c_str(); }

const char* arb_status_name(arb_status status) {
  switch (status) {
    case ARB_OK: return "ok";
    case ARB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ARB_ERR_PARSE: return "parse error";
    case ARB_ERR_INVALID_GRAPH: return "invalid graph";
    case ARB_ERR_UNKNOWN_EDGE: return "unknown edge";
    case ARB_ERR_MISSING_SIGNS: return "missing signs";
    case ARB_ERR_NON_INVERTIBLE: return "non-invertible substitution";
    case ARB_ERR_SIZE_LIMIT: return "size limit";
    case ARB_ERR_INVALID_LINK: return "invalid link";
    case ARB_ERR_MOVE_MISMATCH: return "move mismatch";
    case ARB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void arb_string_free(char* s) { std::free(s); }

// ---------------------------------------------------------------- graphs

arb_status arb_graph_from_json(const char* json, arb_graph** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new arb_graph{graph_from_json(json)};
  });
}

arb_status arb_graph_to_json(const arb_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_string(graph_to_json(g->value));
  });
}

void arb_graph_free(arb_graph* g) { delete g; }

arb_status arb_graph_num_vertices(const arb_graph* g, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = g->value.num_vertices();
  });
}

arb_status arb_graph_num_edges(const arb_graph* g, size_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = g->value.num_edges();
  });
}

arb_status arb_graph_delete_edge(const arb_graph* g, const char* edge, arb_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(edge, "edge");
    require(out, "out");
    *out = new arb_graph{delete_edge(g->value, edge)};
  });
}

arb_status arb_graph_contract_edge(const arb_graph* g, const char* edge, arb_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(edge, "edge");
    require(out, "out");
    *out = new arb_graph{contract(g->value, edge)};
  });
}

arb_status arb_graph_partial_dual(const arb_graph* g, const char* const* edges, size_t count, arb_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (count > 0) require(edges, "edges");
    std::vector<std::string> ids;
    for (size_t i = 0; i < count; ++i) {
      require(edges[i], "edge id");
      ids.emplace_back(edges[i]);
    }
    *out = new arb_graph{partial_dual(g->value, ids)};
  });
}

arb_status arb_graph_natural_dual(const arb_graph* g, arb_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new arb_graph{natural_dual(g->value)};
  });
}

arb_status arb_graph_canonical_form(const arb_graph* g, int include_reflection, size_t max_edges, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    CanonicalOptions opt;
    opt.include_reflection = include_reflection != 0;
    opt.max_edges = max_edges;
    *out = copy_string(canonical_form(g->value, opt));
  });
}

arb_status arb_graph_polynomial(const arb_graph* g, arb_graph_poly_kind kind, unsigned threads, arb_poly** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const StateSumOptions o = sums(threads);
    LaurentPoly p;
    switch (kind) {
      case ARB_POLY_ARROW_DICHROMATIC: p = arrow_dichromatic(g->value, o); break;
      case ARB_POLY_DICHROMATIC: p = dichromatic(g->value, o); break;
      case ARB_POLY_TUTTE: p = tutte(g->value, o); break;
      case ARB_POLY_ARROW_BR: p = arrow_bollobas_riordan(g->value, {}, o); break;
      case ARB_POLY_SIGNED_BR: p = signed_bollobas_riordan(g->value, o); break;
      case ARB_POLY_SIGNED_DICHROMATIC: p = signed_dichromatic_substitution(g->value, {}, o); break;
      default: throw Error(Errc::InvalidArgument, "unknown polynomial kind");
    }
    *out = new arb_poly{std::move(p)};
  });
}

arb_status arb_graph_verify_properties(const arb_graph* g, unsigned threads, char** report, int* all_ok) {
  return guarded([&] {
    require(g, "graph");
    VerifyOptions opt;
    opt.state_sums = sums(threads);
    const PropertyReport r = verify_properties(g->value, opt);
    nlohmann::json j;
    j["ok"] = r.ok();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"total", c.total}});
    if (report != nullptr) *report = copy_string(j.dump());
    if (all_ok != nullptr) *all_ok = r.ok() ? 1 : 0;
  });
}

// ---------------------------------------------------------------- polynomials

arb_status arb_poly_parse(const char* text, arb_poly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new arb_poly{parse_poly(text)};
  });
}

arb_status arb_poly_to_string(const arb_poly* p, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    require(out, "out");
    *out = copy_string(format(p->value));
  });
}

arb_status arb_poly_to_json(const arb_poly* p, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    require(out, "out");
    *out = copy_string(poly_to_json(p->value));
  });
}

int arb_poly_equal(const arb_poly* p, const arb_poly* q) {
  if (p == nullptr || q == nullptr) return p == q ? 1 : 0;
  return p->value == q->value ? 1 : 0;
}

void arb_poly_free(arb_poly* p) { delete p; }

// ---------------------------------------------------------------- links

arb_status arb_link_parse(const char* gauss_code, arb_link** out) {
  return guarded([&] {
    require(gauss_code, "gauss code");
    require(out, "out");
    *out = new arb_link{parse_gauss(gauss_code)};
  });
}

arb_status arb_link_to_string(const arb_link* l, char** out) {
  return guarded([&] {
    require(l, "link");
    require(out, "out");
    *out = copy_string(l->value.to_string());
  });
}

void arb_link_free(arb_link* l) { delete l; }

arb_status arb_link_num_crossings(const arb_link* l, size_t* out) {
  return guarded([&] {
    require(l, "link");
    require(out, "out");
    *out = l->value.num_crossings();
  });
}

arb_status arb_link_writhe(const arb_link* l, int* out) {
  return guarded([&] {
    require(l, "link");
    require(out, "out");
    *out = l->value.writhe();
  });
}

arb_status arb_link_polynomial(const arb_link* l, arb_link_poly_kind kind, arb_poly** out) {
  return guarded([&] {
    require(l, "link");
    require(out, "out");
    LaurentPoly p;
    switch (kind) {
      case ARB_LINK_KAUFFMAN_BRACKET: p = kauffman_bracket(l->value); break;
      case ARB_LINK_ARROW_BRACKET: p = arrow_bracket(l->value); break;
      case ARB_LINK_NORMALIZED_ARROW: p = normalized_arrow(l->value); break;
      case ARB_LINK_JONES: p = jones(l->value); break;
      default: throw Error(Errc::InvalidArgument, "unknown link polynomial kind");
    }
    *out = new arb_poly{std::move(p)};
  });
}

arb_status arb_link_state_from_index(const arb_link* l, unsigned long long index, char** out) {
  return guarded([&] {
    require(l, "link");
    require(out, "out");
    const std::size_t n = l->value.num_crossings();
    if (n < 64 && index >= (1ULL << n)) throw Error(Errc::InvalidArgument, "state index out of range");
    *out = copy_string(state_to_string(l->value, state_from_mask(l->value, index)));
  });
}

arb_status arb_link_state_graph(const arb_link* l, const char* state, arb_graph** out) {
  return guarded([&] {
    require(l, "link");
    require(state, "state");
    require(out, "out");
    *out = new arb_graph{state_graph(l->value, parse_state(l->value, state))};
  });
}

arb_status arb_link_verify_state_duality(const arb_link* l, const char* state1, const char* state2, int* equal) {
  return guarded([&] {
    require(l, "link");
    require(state1, "state1");
    require(state2, "state2");
    require(equal, "equal");
    *equal = verify_state_duality(l->value, parse_state(l->value, state1), parse_state(l->value, state2)) ? 1 : 0;
  });
}

arb_status arb_link_verify_identity(const arb_link* l, arb_link_identity identity, const char* state, unsigned threads,
                                    arb_poly** lhs, arb_poly** rhs, int* equal) {
  return guarded([&] {
    require(l, "link");
    IdentityReport r;
    switch (identity) {
      case ARB_IDENTITY_THISTLETHWAITE:
        require(state, "state");
        r = thistlethwaite_verify(l->value, parse_state(l->value, state), sums(threads));
        break;
      case ARB_IDENTITY_ALL_A: r = specialization_all_A(l->value, sums(threads)); break;
      case ARB_IDENTITY_SEIFERT: r = specialization_seifert(l->value, sums(threads)); break;
      default: throw Error(Errc::InvalidArgument, "unknown identity");
    }
    if (equal != nullptr) *equal = r.equal ? 1 : 0;
    if (lhs != nullptr) *lhs = new arb_poly{std::move(r.lhs)};
    if (rhs != nullptr) *rhs = new arb_poly{std::move(r.rhs)};
  });
}

}  // extern "C"
