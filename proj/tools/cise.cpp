// cise - enumerate all connected induced subgraphs of a given order.
//
// Exit codes: 0 success, 2 parse/config error, 3 timeout.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "cise/harness.hpp"

namespace {

cise::InputFormat parse_format(const std::string& s) {
    if (s == "mtx") return cise::InputFormat::matrix_market;
    if (s == "edges") return cise::InputFormat::edge_list;
    throw CLI::ValidationError("--format", "expected 'mtx' or 'edges'");
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate all connected induced subgraphs of order k"};

    std::string input, format_str, algo_str = "vsimple", backend_str = "list";
    std::string output, compare_str;
    int k = 0;
    double timeout = 600.0;
    bool count_only = false;

    app.add_option("--input", input, "input graph file")->required();
    app.add_option("--format", format_str, "input format")
        ->required()
        ->check(CLI::IsMember({"mtx", "edges"}));
    app.add_option("--algo", algo_str, "algorithm")
        ->check(CLI::IsMember({"simple", "simple-forward", "vsimple", "topdown", "oracle"}));
    app.add_option("--backend", backend_str, "topdown storage backend")
        ->check(CLI::IsMember({"list", "bitmatrix"}));
    app.add_option("-k", k, "subgraph order")->required();
    app.add_flag("--count-only", count_only, "count without writing sets");
    app.add_option("--output", output, "write enumerated sets to this file");
    app.add_option("--timeout", timeout, "time budget in seconds");
    app.add_option("--compare", compare_str,
                   "comma-separated algorithms to run and compare on the same input");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        cise::RunConfig base;
        base.input_path = input;
        base.format = parse_format(format_str);
        base.backend = backend_str == "bitmatrix" ? cise::Backend::bit_matrix
                                                  : cise::Backend::list;
        base.k = k;
        base.timeout_seconds = timeout;

        if (!compare_str.empty()) {
            std::vector<cise::RunConfig> cfgs;
            for (const auto& name : split_csv(compare_str)) {
                cise::RunConfig c = base;
                c.algo = cise::parse_algorithm(name);
                c.mode = cise::SinkMode::collect;
                cfgs.push_back(c);
            }
            cise::CompareResult res = cise::compare_runs(cfgs);
            bool timed_out = false;
            for (const auto& rep : res.reports) {
                std::cout << rep.line() << '\n';
                timed_out = timed_out || rep.timed_out;
            }
            std::cout << "compare=" << (res.equal ? "equal" : "DIFFERENT") << '\n';
            if (timed_out) return 3;
            return res.equal ? 0 : 1;
        }

        base.algo = cise::parse_algorithm(algo_str);
        base.mode = count_only ? cise::SinkMode::count : cise::SinkMode::write;
        base.output_path = output;
        cise::RunReport rep = cise::run(base);
        std::cout << rep.line() << '\n';
        std::cerr << rep.algorithm << ": " << rep.count
                  << (rep.timed_out ? " sets (partial, timed out)" : " sets") << " of order "
                  << rep.k << " in " << rep.seconds << " s\n";
        return rep.timed_out ? 3 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
