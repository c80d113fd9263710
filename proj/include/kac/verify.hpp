#pragma once

#include <string>

#include "kac/report.hpp"

namespace kac {

enum class VerifySuite { kTables, kGraphs, kQbinom, kMahler, kTheorems, kAll };
enum class VerifySize { kQuick, kFull };

VerifySuite parse_verify_suite(const std::string& name);
VerifySize parse_verify_size(const std::string& name);

/// Appends one check per verified item to `report`.
void run_verify(VerifySuite suite, VerifySize size, unsigned threads, RunReport& report);

}  // namespace kac
