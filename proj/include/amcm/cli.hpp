#pragma once

#include <iosfwd>

#include "amcm/domains.hpp"

namespace amcm::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_type_mismatch = 1,
    exit_unbound = 2,
    exit_parse = 3,
    exit_input_exhausted = 4,
    exit_io = 5,
};

int exit_code_for(const ErrorKind& e);

// Entry point behind the `amcm` executable. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace amcm::cli
