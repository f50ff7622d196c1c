#pragma once

#include <stdexcept>
#include <string>

namespace omegac {

/* Single error type for the whole kernel.  `kind` is a stable machine-readable
 * tag (e.g. "DifferentialNotSquareZero"), `witness` names the offending
 * generator / row / cycle when there is one. */
struct Error : std::runtime_error {
    std::string kind;
    std::string witness;

    Error(std::string kind_, const std::string& message, std::string witness_ = "")
        : std::runtime_error(kind_ + ": " + message + (witness_.empty() ? "" : " [witness: " + witness_ + "]")),
          kind(std::move(kind_)),
          witness(std::move(witness_)) {}
};

} // namespace omegac
