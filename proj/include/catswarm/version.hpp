#ifndef CATSWARM_VERSION_HPP
#define CATSWARM_VERSION_HPP

#include <string_view>

namespace catswarm {

inline constexpr std::string_view kVersion = "0.1.0";

/// Stamped into every results file; loading a file with a different stamp
/// produces a warning, not an error.
inline constexpr std::string_view kSuiteVersion = "1";

/// Identifies the seed-derivation scheme so results files stay reproducible
/// across releases.
inline constexpr std::string_view kSeedScheme = "fnv1a64/splitmix64 v1";

}  // namespace catswarm

#endif
