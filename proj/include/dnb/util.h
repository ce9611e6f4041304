#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace dnb {

// Shortest decimal form that parses back to the same double ("0.9963", not
// "0.99630000000000002"). Used by every text format the project emits.
std::string fmt_double(double v);

double parse_double(const std::string& s);

// Runs fn(0..n-1) on a small worker pool. Work items must be independent;
// callers that need determinism write results by index.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dnb
