#include "states.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

namespace arrowribbon::detail {

StateEnumerator::StateEnumerator(const ArrowRibbonGraph& g) : g_(g), surface_(Surface::from_graph(g)) {
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    ends_.emplace_back(g.vertex_index_of_end(e, 0), g.vertex_index_of_end(e, 1));
  }
}

void StateEnumerator::evaluate(std::uint64_t mask, StateInfo& out) const {
  const std::size_t ne = g_.num_edges();
  const std::size_t nv = g_.num_vertices();
  out.mask = mask;
  out.f.assign(ne, false);
  out.size = 0;
  out.minus_in = 0;
  out.minus_out = 0;
  for (std::size_t e = 0; e < ne; ++e) {
    out.f[e] = ((mask >> e) & 1U) != 0;
    const bool minus = g_.edges()[e].sign == Sign::Minus;
    if (out.f[e]) {
      ++out.size;
      out.minus_in += minus ? 1 : 0;
    } else {
      out.minus_out += minus ? 1 : 0;
    }
  }

  // Components and orientability with a parity union-find.
  std::vector<std::size_t> parent(nv);
  std::vector<int> parity(nv, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return std::make_pair(x, p);
  };
  out.k = static_cast<int>(nv);
  out.orientable = true;
  for (std::size_t e = 0; e < ne; ++e) {
    if (!out.f[e]) continue;
    auto [ru, pu] = find(ends_[e].first);
    auto [rv, pv] = find(ends_[e].second);
    const int twist = g_.edges()[e].twist ? 1 : 0;
    if (ru == rv) {
      if ((pu ^ pv ^ twist) != 0) out.orientable = false;
    } else {
      parent[rv] = ru;
      parity[rv] = pu ^ pv ^ twist;
      --out.k;
    }
  }

  out.reduced.clear();
  for (const auto& cycle : surface_.cycles(out.f)) {
    const ArrowList w = surface_.word(cycle);
    out.reduced.push_back(reduced_arrow_count(w));
  }
  for (const auto& lone : surface_.lone_vertices()) out.reduced.push_back(reduced_arrow_count(lone.arrows));
  out.bc = static_cast<int>(out.reduced.size());
  out.r = static_cast<int>(nv) - out.k;
  out.n = out.size - out.r;
}

Monomial k_monomial(const std::vector<int>& reduced) {
  std::vector<Monomial::Factor> fs;
  for (int m : reduced) {
    if (m > 0) fs.emplace_back(VarSymbol::k(m), kWhole);
  }
  return Monomial(std::move(fs));
}

LaurentPoly sum_over_states(const ArrowRibbonGraph& g, const StateSumOptions& options, const StateTerm& term) {
  const std::size_t ne = g.num_edges();
  if (ne > options.max_edges || ne >= 63) {
    throw Error(Errc::SizeLimit, "state sum limited to " + std::to_string(options.max_edges) + " edges, graph has " +
                                     std::to_string(ne));
  }
  const std::uint64_t total = std::uint64_t{1} << ne;
  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  const StateEnumerator states(g);

  std::vector<LaurentPoly> partial(threads);
  std::vector<std::exception_ptr> failure(threads);
  auto work = [&](unsigned t) {
    try {
      StateInfo info;
      for (std::uint64_t mask = t; mask < total; mask += threads) {
        states.evaluate(mask, info);
        term(info, partial[t]);
      }
    } catch (...) {
      failure[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failure) {
    if (f) std::rethrow_exception(f);
  }
  LaurentPoly out;
  for (const auto& p : partial) out += p;
  return out;
}

}  // namespace arrowribbon::detail
