#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "detconv/io.hpp"
#include "detconv/signed_permutation.hpp"

namespace detconv {

struct RunConfig {
  std::uint64_t seed = 7;
  std::uint64_t exhaustive_cap = kDefaultExhaustiveCap;
  std::uint64_t sample_count = 10'000;
  unsigned worker_count = 1;
  std::string output_format = "json";  // json | text
};

void validate(const RunConfig& config);

// Deliberate corruption used to check that the suites catch a broken formula.
enum class Fault { None, LocalL2 };
Fault parse_fault(const std::string& name);

struct VerifyItem {
  std::string suite;
  std::string anchor;  // name of the identity being checked
  std::string label;   // instance description, e.g. "d=2 m=2"
  bool pass = false;
  io::json detail;     // never contains timings, so reports are reproducible
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerifyItem> items;

  bool pass() const;
  // Null when everything passed.
  const VerifyItem* first_failure() const;
};

const std::vector<std::string>& verify_suites();  // without "all"

// Throws CapExceeded when a requested exhaustive check is above the cap.
VerifyReport run_verify(const std::string& suite, const RunConfig& config, Fault fault = Fault::None);

io::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

}  // namespace detconv
