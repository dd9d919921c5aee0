#pragma once

#include <iosfwd>

namespace apvdw {

// Exit codes: 0 found / true / value computed, 1 not found / false /
// lower bound only, 2 usage or runtime error.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace apvdw
