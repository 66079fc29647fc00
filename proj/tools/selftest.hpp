#pragma once

#include <iosfwd>

/// Runs the worked examples of every module; prints one line per example.
bool run_selftest(std::ostream& os);
