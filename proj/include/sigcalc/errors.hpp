#pragma once

#include <stdexcept>
#include <string>

namespace sigcalc {

/**
 * Base class for every engine error.  Each concrete error carries a stable
 * name (used in CLI diagnostics) and the process exit code its class maps to:
 *
 *   2  schema / value errors in input documents
 *   3  scope errors (input outside the supported regime)
 *   4  genericity errors (a degenerate circle was supplied)
 *   5  freeness / dimension / structural errors
 */
class EngineError : public std::runtime_error {
public:
    EngineError(std::string name, int exit_code, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)), exit_code_(exit_code) {}

    const std::string& name() const { return name_; }
    int exit_code() const { return exit_code_; }

private:
    std::string name_;
    int exit_code_;
};

#define SIGCALC_DEFINE_ERROR(ClassName, ExitCode)                            \
    class ClassName : public EngineError {                                   \
    public:                                                                  \
        explicit ClassName(const std::string& msg)                           \
            : EngineError(#ClassName, ExitCode, msg) {}                      \
    }

// -- exit code 2: malformed input documents ---------------------------------
SIGCALC_DEFINE_ERROR(SchemaError, 2);
SIGCALC_DEFINE_ERROR(ValueError, 2);

// -- exit code 3: input outside the supported scope --------------------------
SIGCALC_DEFINE_ERROR(NonSplitHorizontal, 3);
SIGCALC_DEFINE_ERROR(NotSolvable, 3);
SIGCALC_DEFINE_ERROR(NotInMaxTorus, 3);

// -- exit code 4: non-generic circle -----------------------------------------
SIGCALC_DEFINE_ERROR(ZeroWeight, 4);

// -- exit code 5: freeness / dimension / structural failures -----------------
SIGCALC_DEFINE_ERROR(DimensionCollapse, 5);
SIGCALC_DEFINE_ERROR(IncompleteEnumeration, 5);
SIGCALC_DEFINE_ERROR(GroupTooLarge, 5);
SIGCALC_DEFINE_ERROR(NotASubgroup, 5);
SIGCALC_DEFINE_ERROR(NotAHomomorphism, 5);
SIGCALC_DEFINE_ERROR(NotSameSpan, 5);
SIGCALC_DEFINE_ERROR(NotASubsystem, 5);
SIGCALC_DEFINE_ERROR(NotARoot, 5);
SIGCALC_DEFINE_ERROR(InvalidType, 5);

#undef SIGCALC_DEFINE_ERROR

} // namespace sigcalc
