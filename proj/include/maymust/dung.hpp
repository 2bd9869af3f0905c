#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maymust/framework.hpp"
#include "maymust/semantics.hpp"

namespace maymust {

struct DungFramework {
    std::vector<std::string> arguments;
    std::vector<std::pair<ArgIndex, ArgIndex>> attacks;
};

/// Every argument gets ((indeg, indeg), (1, 1)).
Framework dung_to_maymust(const DungFramework& d);
DungFramework underlying_dung(const Framework& f);
/// True when every tuple equals ((indeg, indeg), (1, 1)).
bool is_dung_instance(const Framework& f);

struct DungSemantics {
    SemanticsResult complete;
    SemanticsResult preferred;
    SemanticsResult stable;
    SemanticsResult grounded;
};

/// Classical complete labellings by direct clause checking over all 3^n
/// labellings, with preferred, stable and grounded derived from them.
DungSemantics dung_complete_oracle(const DungFramework& d);

}  // namespace maymust
