#pragma once

#include <cstdint>
#include <ostream>

namespace swfam {

/// Runs family_index_oracle against index_character on `trials` seeded random
/// Spin^c classes of the t4 preset; throws CrossCheckError on any mismatch.
void run_oracle_check(int trials, std::uint64_t seed, std::ostream& out);

/// Runs the whole internal invariant suite, printing one "ok <name>" line per
/// check; throws CrossCheckError on the first failure. Returns the number of
/// checks run.
int run_selftest(std::ostream& out);

} // namespace swfam
