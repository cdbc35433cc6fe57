#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yf {

/// Invariant suites mirroring the library modules. Each function runs
/// its module's invariants up to min(bound, the invariant's own limit),
/// logs one line per invariant, stops at the first counterexample, and
/// returns whether everything held.
bool verify_snakeshape(int bound, std::ostream& out);
bool verify_tableau(int bound, std::ostream& out);
bool verify_insertion(int bound, std::ostream& out);
bool verify_chains(int bound, std::ostream& out);
bool verify_poset(int bound, std::ostream& out);
bool verify_kostka(int bound, std::ostream& out);
bool verify_young(int bound, std::ostream& out);
bool verify_all(int bound, std::ostream& out);

std::vector<std::string> verify_suite_names();
bool run_verify_suite(const std::string& name, int bound, std::ostream& out);

}  // namespace yf
