#pragma once

#include "output_record.hpp"

#include "hankelkit/function_class.hpp"

#include <cstdint>
#include <string>

namespace hktool {

struct Options {
    hankelkit::FunctionClass cls = hankelkit::FunctionClass::BoundedTurning;
    hankelkit::Functional fn = hankelkit::Functional::T_a2a3_a4;
    std::string model;        // "lz" | "herglotz" | "" = pick by functional
    bool full_phases = true;  // --phases full|real (lz only)
    std::string variant = "paper";
    int atoms = 4;
    int order = 12;
    int grid = 0;  // 0 = command default (2001 for the reduced scan, auto for searches)
    int restarts = 8;
    std::uint64_t seed = 0;
    double tol = 1e-6;
};

struct CommandResult {
    int exit_code = 0;
    OutputRecord record;
};

CommandResult cmd_verify(const Options& o);
CommandResult cmd_search(const Options& o);
CommandResult cmd_extremal(const Options& o);
CommandResult cmd_report(const Options& o);

}  // namespace hktool
