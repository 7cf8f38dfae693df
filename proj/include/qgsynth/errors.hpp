// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <stdexcept>
#include <string>

namespace qgsynth {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QGSYNTH_ERROR(Name)                                   \
    class Name : public Error {                               \
    public:                                                   \
        explicit Name(const std::string& what)                \
            : Error(std::string(#Name ": ") + what) {}        \
    }

QGSYNTH_ERROR(DisconnectedGraph);
QGSYNTH_ERROR(InvalidParameters);
QGSYNTH_ERROR(TooLargeForExactExpansion);
QGSYNTH_ERROR(GrowthStalled);
QGSYNTH_ERROR(ParseError);
QGSYNTH_ERROR(NotAPath);
QGSYNTH_ERROR(SingularMatrix);
QGSYNTH_ERROR(OverlappingRegisters);
QGSYNTH_ERROR(InsufficientScratch);
QGSYNTH_ERROR(StrategyGraphMismatch);
QGSYNTH_ERROR(ExpansionUnknown);
QGSYNTH_ERROR(InsufficientAncilla);
QGSYNTH_ERROR(BridgeInvalid);
QGSYNTH_ERROR(TooLarge);
QGSYNTH_ERROR(DecompositionFailure);

#undef QGSYNTH_ERROR

}  // namespace qgsynth
