#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dn::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;      // verification or extraction failed
inline constexpr int kInputError = 2;  // bad flags, unreadable or malformed inputs

inline constexpr const char* kBenchCsvHeader =
    "n,m,t,r,seed,outcome,certificate_order,certificate_min_or_avg_degree,certificate_radius,"
    "wall_time_ms";

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dn::cli
