#pragma once

#include <string>
#include <vector>

#include "nn/term.hpp"

namespace nn {

// Prints a core term, reconstructing binder names from hints. tnames/inames
// are the in-scope binder names (outermost first).
std::string pretty_term(const TPtr& t, std::vector<std::string> tnames = {},
                        std::vector<std::string> inames = {});

}  // namespace nn
