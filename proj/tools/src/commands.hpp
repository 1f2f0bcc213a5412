#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

namespace singraph::cli {

struct Output {
  bool json = false;
  bool dot = false;
};

// Each command writes to `out` and returns the process exit code; domain
// errors propagate as singraph::Error.
int run_classify(const std::string& path, const Output& o, std::ostream& out);
int run_zcycle(const std::string& path, const Output& o, std::ostream& out);
int run_roots(const std::string& path, const Output& o, std::ostream& out);
int run_adjacencies(const std::string& path, std::size_t max_m, const Output& o, std::ostream& out);
int run_star(const std::string& path, const Output& o, std::ostream& out);
int run_blowup_profile(const std::string& path, const Output& o, std::ostream& out);

int run_sandwich_build(const std::string& path, const std::optional<std::string>& e0, const Output& o,
                       std::ostream& out);
int run_sandwich_graph(const std::string& path, const Output& o, std::ostream& out);
int run_sandwich_deform(const std::string& path, std::size_t depth, const Output& o, std::ostream& out);
int run_sandwich_check(const std::string& path, long budget, const Output& o, std::ostream& out);

/// Runs the manifest in `dir`; 0 when every golden value matches.
int run_corpus_verify(const std::string& dir, const Output& o, std::ostream& out);

}  // namespace singraph::cli
