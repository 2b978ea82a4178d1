#pragma once

#include <string>
#include <vector>

#include "prym/cover.hpp"
#include "prym/volumes.hpp"

namespace prym {

/// thm-a, thm-b, main, cd, free-volume, pushpull, ogod-classify, moves.
const std::vector<std::string>& identity_names();

/// Runs one identity, or every identity for "all". Throws ParseError for
/// unknown names.
Report verify_identity(const DoubleCover& c, const std::string& identity);

}  // namespace prym
