#pragma once

#include <iosfwd>
#include <string>

namespace nearhex::cli {

struct RunConfig {
    std::string command;          // build|hyperplanes|classify|veldkamp|dot|check
    std::string geometry;         // line3|grid|doily|hexagon|subhex
    int grid_index = 0;           // subhex host grid
    bool grid_set = false;
    std::string method = "both";  // hyperplanes: code|search|both
    std::string format = "md";    // md|csv|json
    std::string out_path;         // empty = write to the data stream
    bool lines = false;           // veldkamp: emit the full line list
    bool bipartite = false;       // dot: point-line graph instead of collinearity
    bool quick = false;           // check: skip the heavy battery tail
    std::string expect_path;      // check: replacement expected-table JSON
    int threads = 1;
};

// Parses argv and dispatches. Exit codes: 0 success, 1 failed checks or
// comparisons, 2 usage errors.
int run(int argc, const char* const* argv);

// Dispatches an already-parsed config. The payload goes to data_out unless
// out_path is set; notes and timings go to err. Payload bytes are identical
// for identical configs, regardless of threads.
int execute(const RunConfig& cfg, std::ostream& data_out, std::ostream& err);

}  // namespace nearhex::cli
