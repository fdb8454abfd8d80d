#pragma once

#include <iosfwd>

namespace nlr::cli {

/// Exit statuses: 0 success, 1 assertion failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nlr::cli
