#pragma once

#include <filesystem>
#include <string>

#include "grpext/homogeneous.hpp"
#include "grpext/local_global.hpp"

namespace grpext {

// JSON description files. Wherever a group is expected, the value may be an
// inline object or a string path relative to the referencing file:
//   group:     {"table": [[..]]} or
//              {"permutations": {"degree": n, "generators": [[..], ..]}},
//              optional "labels": [".."]
//   kernel:    {"G": group, "Q": group, "kappa": [automorphism table per
//              element of Q]}
//   extension: {"E": group, "G": group, "Q": group, "iota": [..], "pi": [..]}
//              or {"from_cocycle": {"kernel": kernel, "f": [[..], ..],
//              "g": [[..], ..]}}
//   gspace:    {"G": group, "Q": group, "form": [[..], ..], "points": n,
//              "gact": [[..], ..], "qact": [[..], ..]}
//   module:    {"Q": group, "M": group, "action": [[..], ..]} (action
//              omitted = trivial)
//   complex:   {"A": module, "B": module, "rho": [..]}
// All indices 0-based. Parse and shape problems throw Errc::Parse; semantic
// problems propagate the library's validation errors.

GroupPtr load_group(const std::filesystem::path& file, const Limits& lim = default_limits());
Kernel load_kernel(const std::filesystem::path& file, const Limits& lim = default_limits());
Extension load_extension(const std::filesystem::path& file, const Limits& lim = default_limits());
GSpace load_gspace(const std::filesystem::path& file, const Limits& lim = default_limits());
QModule load_module(const std::filesystem::path& file, const Limits& lim = default_limits());
TwoTermComplex load_complex(const std::filesystem::path& file,
                            const Limits& lim = default_limits());

// Top-level kind of a description file, inferred from its keys:
// "group" | "kernel" | "extension" | "gspace" | "module" | "complex".
std::string file_kind(const std::filesystem::path& file);

}  // namespace grpext
