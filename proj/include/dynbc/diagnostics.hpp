#ifndef DYNBC_DIAGNOSTICS_HPP_
#define DYNBC_DIAGNOSTICS_HPP_

#include <string>

namespace dynbc::diag {

/// Verbosity from the DYNBC_LOG environment variable: 0 silent (default),
/// 1 warnings and summaries, 2 per-event detail.
int level();

/// Writes one structured line to stderr when `level()` >= minLevel.
void log(int minLevel, const std::string &line);

} // namespace dynbc::diag

#endif // DYNBC_DIAGNOSTICS_HPP_
