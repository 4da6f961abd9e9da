#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cise/bottomup.hpp"
#include "cise/connectivity.hpp"
#include "cise/graph.hpp"
#include "cise/oracle.hpp"
#include "cise/sink.hpp"
#include "cise/topdown.hpp"

namespace cise {

enum class Algorithm { simple, simple_forward, vsimple, topdown, oracle };

inline const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::simple: return "simple";
        case Algorithm::simple_forward: return "simple-forward";
        case Algorithm::vsimple: return "vsimple";
        case Algorithm::topdown: return "topdown";
        case Algorithm::oracle: return "oracle";
    }
    return "?";
}

inline Algorithm parse_algorithm(const std::string& s) {
    if (s == "simple") return Algorithm::simple;
    if (s == "simple-forward") return Algorithm::simple_forward;
    if (s == "vsimple") return Algorithm::vsimple;
    if (s == "topdown") return Algorithm::topdown;
    if (s == "oracle") return Algorithm::oracle;
    throw std::invalid_argument("unknown algorithm '" + s + "'");
}

enum class SinkMode { count, write, collect };

struct RunConfig {
    std::string input_path;
    InputFormat format = InputFormat::matrix_market;
    Algorithm algo = Algorithm::vsimple;
    Backend backend = Backend::list;
    int k = 1;
    SinkMode mode = SinkMode::count;
    double timeout_seconds = 600.0;
    std::string output_path;  // write mode; empty = stdout
    EnumOptions enum_options;
};

struct RunReport {
    std::string algorithm;
    int k = 0;
    std::uint64_t count = 0;
    double seconds = 0.0;
    std::uint64_t nodes_visited = 0;
    bool timed_out = false;  // count is then a lower bound (partial)
    std::string backend;

    std::string line() const {
        char buf[192];
        std::snprintf(buf, sizeof(buf),
                      "algo=%s k=%d count=%llu nodes=%llu seconds=%.3f timeout=%s",
                      algorithm.c_str(), k, static_cast<unsigned long long>(count),
                      static_cast<unsigned long long>(nodes_visited), seconds,
                      timed_out ? "true" : "false");
        return buf;
    }
};

/// Vertex sets of the connected components, each ascending.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<char> seen(g.n, 0);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        std::size_t head = 0;
        while (head < queue.size()) {
            Vertex v = queue[head++];
            comp.push_back(v);
            for (Vertex u : g.adjacency[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Induced subgraph on `comp` (ascending global ids). Local id i maps back
/// to comp[i]; labels are carried over.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& comp) {
    std::vector<Vertex> local(g.n, -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<Vertex>(i);
    Graph sub;
    sub.n = static_cast<int>(comp.size());
    sub.adjacency.assign(sub.n, {});
    sub.labels.resize(sub.n);
    for (std::size_t i = 0; i < comp.size(); ++i) {
        Vertex v = comp[i];
        sub.labels[i] = g.labels[v];
        for (Vertex u : g.adjacency[v])
            if (local[u] >= 0) sub.adjacency[i].push_back(local[u]);
        std::sort(sub.adjacency[i].begin(), sub.adjacency[i].end());
        sub.m += static_cast<long long>(sub.adjacency[i].size());
        sub.max_degree = std::max<int>(sub.max_degree, static_cast<int>(sub.adjacency[i].size()));
    }
    sub.m /= 2;
    if (g.has_bitrows()) sub.build_bitrows();
    return sub;
}

namespace detail {

inline RunStats dispatch(const Graph& g, Algorithm algo, Backend backend, int k,
                         SubgraphSink& sink, const EnumOptions& opt) {
    switch (algo) {
        case Algorithm::simple:
            return enumerate_simple(g, k, sink, PickSide::back, opt);
        case Algorithm::simple_forward:
            return enumerate_simple(g, k, sink, PickSide::front, opt);
        case Algorithm::vsimple:
            return enumerate_vsimple(g, k, sink, opt);
        case Algorithm::topdown:
            return enumerate_topdown(g, k, sink, backend, opt);
        case Algorithm::oracle: {
            OracleResult res = brute_force_cise(g, k);
            for (auto& s : res.sets) sink.emit(s);
            RunStats st;
            st.count = res.count;
            st.nodes_visited = 0;
            return st;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

/// Runs the selected algorithm on every connected component with >= k
/// vertices and aggregates the results. Timing wraps the enumeration only.
inline RunReport run_on_graph(const Graph& g, Algorithm algo, Backend backend, int k,
                              SubgraphSink& sink, EnumOptions opt = {},
                              double timeout_seconds = 0.0) {
    if (k < 1) throw std::invalid_argument("order k must be >= 1");
    RunReport rep;
    rep.algorithm = to_string(algo);
    rep.k = k;
    rep.backend = to_string(backend);

    std::optional<CancelToken> cancel;
    if (timeout_seconds > 0.0) {
        cancel.emplace(timeout_seconds);
        opt.cancel = &*cancel;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto comps = connected_components(g);
    for (const auto& comp : comps) {
        if (static_cast<int>(comp.size()) < k) continue;
        if (rep.timed_out) break;
        RunStats st;
        if (comps.size() == 1) {
            st = detail::dispatch(g, algo, backend, k, sink, opt);
        } else {
            Graph sub = induced_subgraph(g, comp);
            TranslateSink tsink(sink, comp);
            st = detail::dispatch(sub, algo, backend, k, tsink, opt);
        }
        rep.nodes_visited += st.nodes_visited;
        rep.timed_out = rep.timed_out || st.timed_out;
    }
    rep.count = sink.emitted();
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline Graph load_graph_file(const std::string& path, InputFormat format,
                             bool with_bitrows = false) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return load_graph(in, format, with_bitrows);
}

/// Full config-driven run: load, split, enumerate, report.
inline RunReport run(const RunConfig& cfg) {
    Graph g = load_graph_file(cfg.input_path, cfg.format,
                              cfg.backend == Backend::bit_matrix);

    std::unique_ptr<SubgraphSink> sink;
    std::ofstream out_file;
    switch (cfg.mode) {
        case SinkMode::count:
            sink = std::make_unique<CountSink>();
            break;
        case SinkMode::collect:
            sink = std::make_unique<CollectSink>();
            break;
        case SinkMode::write: {
            if (!cfg.output_path.empty()) {
                out_file.open(cfg.output_path, std::ios::binary);
                if (!out_file)
                    throw std::runtime_error("cannot open output file: " + cfg.output_path);
            }
            sink = std::make_unique<WriteSink>(out_file.is_open() ? out_file : std::cout, g);
            break;
        }
    }

    RunReport rep = run_on_graph(g, cfg.algo, cfg.backend, cfg.k, *sink,
                                 cfg.enum_options, cfg.timeout_seconds);
    if (cfg.mode == SinkMode::write && out_file.is_open()) out_file.flush();
    return rep;
}

struct CompareResult {
    bool equal = false;
    std::vector<RunReport> reports;
    std::vector<std::uint64_t> counts;
};

/// Runs every config (shared input and k) in collect mode and reports
/// whether the canonicalized outputs agree.
inline CompareResult compare_runs(const std::vector<RunConfig>& cfgs) {
    CompareResult res;
    if (cfgs.empty()) return res;
    Graph g = load_graph_file(cfgs.front().input_path, cfgs.front().format, true);

    std::vector<std::vector<std::vector<Vertex>>> canon;
    for (const auto& cfg : cfgs) {
        if (cfg.input_path != cfgs.front().input_path || cfg.k != cfgs.front().k)
            throw std::invalid_argument("compare_runs: configs must share input and k");
        CollectSink sink;
        RunReport rep = run_on_graph(g, cfg.algo, cfg.backend, cfg.k, sink,
                                     cfg.enum_options, cfg.timeout_seconds);
        res.reports.push_back(rep);
        res.counts.push_back(rep.count);
        canon.push_back(sink.canonical());
    }
    res.equal = true;
    for (std::size_t i = 1; i < canon.size(); ++i)
        if (canon[i] != canon[0]) res.equal = false;
    return res;
}

}  // namespace cise
