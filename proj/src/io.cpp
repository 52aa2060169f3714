#include "grpext/io.hpp"

#include <fstream>

#include "json.hpp"

namespace grpext {

namespace {

using nlohmann::json;

json read_json(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail(Errc::Parse, "cannot open " + file.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(Errc::Parse, file.string() + ": " + e.what());
    }
    if (!j.is_object()) fail(Errc::Parse, file.string() + ": top level must be an object");
    return j;
}

std::vector<std::vector<int>> int_table(const json& j, const std::string& what) {
    if (!j.is_array()) fail(Errc::Parse, what + " must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) {
        if (!row.is_array()) fail(Errc::Parse, what + " must be an array of arrays");
        out.push_back(row.get<std::vector<int>>());
    }
    return out;
}

std::vector<int> int_list(const json& j, const std::string& what) {
    if (!j.is_array()) fail(Errc::Parse, what + " must be an array of integers");
    return j.get<std::vector<int>>();
}

GroupPtr group_from_json(const json& j, const std::filesystem::path& dir, const Limits& lim);

// A value that is either inline JSON or a relative path to another file.
json resolve(const json& j, std::filesystem::path& dir) {
    if (j.is_string()) {
        std::filesystem::path p = dir / j.get<std::string>();
        dir = p.parent_path();
        return read_json(p);
    }
    if (!j.is_object()) fail(Errc::Parse, "expected an object or a file path");
    return j;
}

GroupPtr group_from_json(const json& jin, const std::filesystem::path& dir_in, const Limits& lim) {
    std::filesystem::path dir = dir_in;
    json j = resolve(jin, dir);
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("table"))
        return std::make_shared<const FiniteGroup>(
            build_group(int_table(j["table"], "table"), std::move(labels)));
    if (j.contains("permutations")) {
        const json& p = j["permutations"];
        if (!p.is_object() || !p.contains("degree") || !p.contains("generators"))
            fail(Errc::Parse, "permutations needs degree and generators");
        return std::make_shared<const FiniteGroup>(group_from_permutations(
            p["degree"].get<int>(), int_table(p["generators"], "generators"), lim));
    }
    fail(Errc::Parse, "group needs table or permutations");
}

Kernel kernel_from_json(const json& jin, const std::filesystem::path& dir_in, const Limits& lim) {
    std::filesystem::path dir = dir_in;
    json j = resolve(jin, dir);
    if (!j.contains("G") || !j.contains("Q") || !j.contains("kappa"))
        fail(Errc::Parse, "kernel needs G, Q and kappa");
    auto G = group_from_json(j["G"], dir, lim);
    auto Q = group_from_json(j["Q"], dir, lim);
    auto kappa = int_table(j["kappa"], "kappa");
    if (static_cast<int>(kappa.size()) != Q->n)
        fail(Errc::Parse, "kappa must have one automorphism table per element of Q");
    return make_kernel(std::move(G), std::move(Q), std::move(kappa), lim);
}

QModule module_from_json(const json& jin, const std::filesystem::path& dir_in, const Limits& lim) {
    std::filesystem::path dir = dir_in;
    json j = resolve(jin, dir);
    if (!j.contains("Q") || !j.contains("M")) fail(Errc::Parse, "module needs Q and M");
    auto Q = group_from_json(j["Q"], dir, lim);
    auto M = group_from_json(j["M"], dir, lim);
    if (!j.contains("action")) return trivial_qmodule(std::move(Q), std::move(M));
    auto action = int_table(j["action"], "action");
    if (static_cast<int>(action.size()) != Q->n)
        fail(Errc::Parse, "action must have one table per element of Q");
    return make_qmodule(std::move(Q), std::move(M), std::move(action));
}

}  // namespace

GroupPtr load_group(const std::filesystem::path& file, const Limits& lim) {
    return group_from_json(read_json(file), file.parent_path(), lim);
}

Kernel load_kernel(const std::filesystem::path& file, const Limits& lim) {
    return kernel_from_json(read_json(file), file.parent_path(), lim);
}

Extension load_extension(const std::filesystem::path& file, const Limits& lim) {
    json j = read_json(file);
    std::filesystem::path dir = file.parent_path();
    if (j.contains("from_cocycle")) {
        std::filesystem::path cdir = dir;
        json c = resolve(j["from_cocycle"], cdir);
        if (!c.contains("kernel") || !c.contains("f") || !c.contains("g"))
            fail(Errc::Parse, "from_cocycle needs kernel, f and g");
        Kernel k = kernel_from_json(c["kernel"], cdir, lim);
        TwoCocycle co;
        co.f = int_table(c["f"], "f");
        co.g = int_table(c["g"], "g");
        validate_cocycle(k, co);
        return cocycle_to_extension(k, co, lim);
    }
    if (!j.contains("E") || !j.contains("G") || !j.contains("Q") || !j.contains("iota") ||
        !j.contains("pi"))
        fail(Errc::Parse, "extension needs E, G, Q, iota and pi (or from_cocycle)");
    auto E = group_from_json(j["E"], dir, lim);
    auto G = group_from_json(j["G"], dir, lim);
    auto Q = group_from_json(j["Q"], dir, lim);
    return make_extension(std::move(E), std::move(G), std::move(Q),
                          int_list(j["iota"], "iota"), int_list(j["pi"], "pi"));
}

GSpace load_gspace(const std::filesystem::path& file, const Limits& lim) {
    json j = read_json(file);
    std::filesystem::path dir = file.parent_path();
    for (const char* key : {"G", "Q", "form", "points", "gact", "qact"})
        if (!j.contains(key)) fail(Errc::Parse, std::string("gspace needs ") + key);
    auto G = group_from_json(j["G"], dir, lim);
    auto Q = group_from_json(j["Q"], dir, lim);
    return make_gspace(std::move(G), std::move(Q), int_table(j["form"], "form"),
                       j["points"].get<int>(), int_table(j["gact"], "gact"),
                       int_table(j["qact"], "qact"));
}

QModule load_module(const std::filesystem::path& file, const Limits& lim) {
    return module_from_json(read_json(file), file.parent_path(), lim);
}

TwoTermComplex load_complex(const std::filesystem::path& file, const Limits& lim) {
    json j = read_json(file);
    std::filesystem::path dir = file.parent_path();
    if (!j.contains("A") || !j.contains("B") || !j.contains("rho"))
        fail(Errc::Parse, "complex needs A, B and rho");
    auto A = module_from_json(j["A"], dir, lim);
    auto B = module_from_json(j["B"], dir, lim);
    return make_two_term(std::move(A), std::move(B), int_list(j["rho"], "rho"));
}

std::string file_kind(const std::filesystem::path& file) {
    json j = read_json(file);
    if (j.contains("rho")) return "complex";
    if (j.contains("gact")) return "gspace";
    if (j.contains("kappa")) return "kernel";
    if (j.contains("iota") || j.contains("from_cocycle")) return "extension";
    if (j.contains("M")) return "module";
    if (j.contains("table") || j.contains("permutations")) return "group";
    fail(Errc::Parse, file.string() + ": unrecognized description file");
}

}  // namespace grpext
