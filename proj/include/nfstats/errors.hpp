#ifndef NFSTATS_ERRORS_HPP
#define NFSTATS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nf {

// Error taxonomy used across the library.  CLI maps these to exit codes.
struct parse_error : std::runtime_error {
    long line = 0;
    parse_error(const std::string& msg, long line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct transport_error : std::runtime_error {
    bool retryable = true;
    explicit transport_error(const std::string& msg, bool retry = true)
        : std::runtime_error(msg), retryable(retry) {}
};

struct configuration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct compute_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nf

#endif
