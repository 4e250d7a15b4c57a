// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <stdexcept>
#include <string>

namespace triage {

/// Base class for all library errors. `module()` names the component that
/// raised it so that the CLI can report provenance.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& message)
        : std::runtime_error("[" + module + "] " + message), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

/// Bad input data or configuration supplied by the user (CLI exit status 2).
class InputError : public Error {
public:
    using Error::Error;
};

/// Features were built by a different fitted pipeline than the model expects.
class FingerprintMismatch : public InputError {
public:
    using InputError::InputError;
};

}  // namespace triage
