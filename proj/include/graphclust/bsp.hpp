#pragma once

#include <algorithm>
#include <barrier>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "graphclust/error.hpp"
#include "graphclust/graph.hpp"

namespace graphclust {

/// Vertex program executed in synchronous supersteps.
///
/// update() sees only the state array of the previous superstep; the runtime never exposes the
/// buffer being written. Randomness inside update() must be derived from (seed, vertex,
/// superstep) so results do not depend on the worker count.
template <typename State>
struct SuperstepProgram {
  std::function<State(VertexId)> init;
  std::function<State(VertexId, std::span<const State>, const UndirectedGraph&, std::uint32_t)> update;
  /// Defaults to operator!= when empty.
  std::function<bool(const State&, const State&)> changed;
  /// Optional single-threaded hook run before each superstep on the previous state
  /// (global aggregates such as label counts).
  std::function<void(std::span<const State>, std::uint32_t)> prepare;
};

struct RunStats {
  std::uint32_t supersteps_executed = 0;
  bool converged = false;
  double elapsed_seconds = 0.0;
};

template <typename State>
struct SuperstepResult {
  std::vector<State> state;
  RunStats stats;
};

/// Runs prog until a superstep changes no vertex or max_iterations supersteps have run.
/// Vertices are split into `workers` contiguous ranges; a barrier separates supersteps.
/// Superstep indices start at 1. Throws ParameterError when workers < 1.
template <typename State>
SuperstepResult<State> run_supersteps(const UndirectedGraph& g, const SuperstepProgram<State>& prog,
                                      std::uint32_t max_iterations, unsigned workers) {
  if (workers < 1) throw ParameterError("worker count must be at least 1");
  if (!prog.init || !prog.update) throw ParameterError("superstep program needs init and update");

  const std::size_t n = g.vertex_count();
  std::vector<State> a(n);
  std::vector<State> b(n);
  for (std::size_t v = 0; v < n; ++v) a[v] = prog.init(static_cast<VertexId>(v));
  std::vector<State>* prev = &a;
  std::vector<State>* next = &b;

  const auto changed = [&prog](const State& x, const State& y) { return prog.changed ? prog.changed(x, y) : !(x == y); };

  RunStats stats;
  const auto start = std::chrono::steady_clock::now();
  if (max_iterations == 0) {
    stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(a), stats};
  }

  const unsigned w_count = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, std::max<std::size_t>(n, 1))));
  std::vector<char> worker_changed(w_count, 0);
  std::vector<std::exception_ptr> worker_error(w_count);
  std::exception_ptr hook_error;
  std::uint32_t step = 1;
  bool done = false;

  if (prog.prepare) prog.prepare(std::span<const State>(*prev), step);

  auto compute = [&](unsigned w) {
    const std::size_t lo = n * w / w_count;
    const std::size_t hi = n * (w + 1) / w_count;
    bool any = false;
    try {
      const std::span<const State> view(*prev);
      auto& out = *next;
      for (std::size_t v = lo; v < hi; ++v) {
        out[v] = prog.update(static_cast<VertexId>(v), view, g, step);
        any = any || changed(view[v], out[v]);
      }
    } catch (...) {
      worker_error[w] = std::current_exception();
    }
    worker_changed[w] = any ? 1 : 0;
  };

  auto end_superstep = [&]() noexcept {
    ++stats.supersteps_executed;
    std::swap(prev, next);
    const bool errored = std::any_of(worker_error.begin(), worker_error.end(), [](const auto& e) { return bool(e); });
    const bool any = std::any_of(worker_changed.begin(), worker_changed.end(), [](char c) { return c != 0; });
    if (errored) {
      done = true;
    } else if (!any) {
      stats.converged = true;
      done = true;
    } else if (stats.supersteps_executed >= max_iterations) {
      done = true;
    } else {
      ++step;
      if (prog.prepare) {
        try {
          prog.prepare(std::span<const State>(*prev), step);
        } catch (...) {
          hook_error = std::current_exception();
          done = true;
        }
      }
    }
  };

  if (w_count == 1) {
    while (!done) {
      compute(0);
      end_superstep();
    }
  } else {
    std::barrier sync(static_cast<std::ptrdiff_t>(w_count), end_superstep);
    auto worker = [&](unsigned w) {
      while (!done) {
        compute(w);
        sync.arrive_and_wait();
      }
    };
    std::vector<std::jthread> threads;
    threads.reserve(w_count - 1);
    for (unsigned w = 1; w < w_count; ++w) threads.emplace_back(worker, w);
    worker(0);
  }

  stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& e : worker_error) {
    if (e) std::rethrow_exception(e);
  }
  if (hook_error) std::rethrow_exception(hook_error);
  return {std::move(*prev), stats};
}

}  // namespace graphclust
