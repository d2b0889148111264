/*
   Copyright 2026 The sdrkms authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef SDRKMS_RESULT_HPP
#define SDRKMS_RESULT_HPP

#include <cstdlib>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>

namespace sdrkms {

// Domain error codes. The string form (errc_name) is the machine-parsable
// reason printed by the CLI and written to audit logs; treat it as a wire
// format and do not rename values casually.
enum class Errc {
    parse_error,
    parameter_error,
    capacity_exhausted,
    rekey_required,
    decapsulation_reject,
    signature_invalid,
    header_signature_invalid,
    nesting_error,
    format_error,
    not_found,
    conflict,
    capability_denied,
    precondition_failed,
    certificate_invalid,
    clearance_violation,
    routing_mismatch,
    topology_error,
    length_mismatch,
    suite_mismatch,
    state_error,
    dongle_locked,
    dongle_absent,
    auth_failed,
    unrecoverable_compromise,
    channel_busy,
    config_error,
    io_error,
};

const char* errc_name(Errc code);

struct Error {
    Errc code;
    std::string detail;

    std::string to_string() const {
        std::string s = errc_name(code);
        if (!detail.empty()) {
            s += ": ";
            s += detail;
        }
        return s;
    }
};

inline Error make_error(Errc code, std::string detail = {}) {
    return Error{code, std::move(detail)};
}

/// Minimal expected-style result. Domain rejections travel as values;
/// only programming errors throw.
template <typename T>
class [[nodiscard]] Result {
public:
    Result(T value) : v_(std::move(value)) {}
    Result(Error err) : v_(std::move(err)) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    const T& value() const& {
        require(ok(), "Result::value() on error");
        return std::get<T>(v_);
    }
    T& value() & {
        require(ok(), "Result::value() on error");
        return std::get<T>(v_);
    }
    T&& take() && {
        require(ok(), "Result::take() on error");
        return std::get<T>(std::move(v_));
    }

    const Error& error() const {
        require(!ok(), "Result::error() on success");
        return std::get<Error>(v_);
    }
    Errc code() const { return error().code; }

private:
    static void require(bool cond, const char* what) {
        if (!cond) {
            std::fprintf(stderr, "fatal: %s\n", what);
            std::abort();
        }
    }
    std::variant<T, Error> v_;
};

/// Result with no payload.
class [[nodiscard]] Status {
public:
    Status() = default;
    Status(Error err) : err_(std::move(err)), failed_(true) {}

    bool ok() const { return !failed_; }
    explicit operator bool() const { return ok(); }
    const Error& error() const { return err_; }
    Errc code() const { return err_.code; }

    static Status success() { return Status{}; }

private:
    Error err_{};
    bool failed_ = false;
};

// Propagate errors without exceptions; usable in functions returning
// Result<U> or Status.
#define SDRKMS_TRY(var, expr)                              \
    auto var##_result = (expr);                            \
    if (!var##_result.ok()) return var##_result.error();   \
    auto& var = var##_result.value()

#define SDRKMS_CHECK(expr)                                 \
    do {                                                   \
        auto status_ = (expr);                             \
        if (!status_.ok()) return status_.error();         \
    } while (0)

} // namespace sdrkms

#endif
