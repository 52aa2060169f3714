#pragma once

#include <stdexcept>
#include <string>

namespace grpext {

enum class Errc {
    NotAssociative,
    NoIdentity,
    NoInverse,
    NotNormal,
    NotHomomorphism,
    NotOuterHomomorphism,
    NotTransitive,
    NotCompatible,
    NotLocallySplit,
    SizeLimitExceeded,
    Parse,
    Validation,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Hard caps for the enumeration cores. Searches that would exceed them
// throw SizeLimitExceeded instead of stalling.
struct Limits {
    std::size_t max_group_order = 2048;
    std::size_t max_search_nodes = 10'000'000;
    std::size_t max_table_cells = 20'000'000;
    std::size_t max_cochain_space = 10'000'000;  // enumeration-path cap
};

inline const Limits& default_limits() {
    static const Limits l{};
    return l;
}

}  // namespace grpext
