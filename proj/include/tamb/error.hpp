#pragma once

#include <stdexcept>
#include <string>

namespace tamb {

// Every invariant failure in the library throws one of these codes.
// Tests match on the code, messages are for humans.
enum class errc {
    non_associative,
    no_identity,
    no_inverse,
    malformed_table,
    group_too_large,
    not_a_subgroup,
    not_contained,
    base_mismatch,
    group_mismatch,
    not_a_mackey_morphism,
    not_a_tambara_morphism,
    nontrivial_q_unsupported,
    lemma_violated,
    malformed_input,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void require(bool ok, errc c, const std::string& msg) {
    if (!ok) fail(c, msg);
}

} // namespace tamb
