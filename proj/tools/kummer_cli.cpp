// kummer_cli: curve files in, exact reports out.
//
// exit status: 0 all checks passed, 1 a check failed or the computation hit a domain error,
// 2 bad usage or unreadable input.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "kummer.hpp"

namespace {

using namespace kummer;

nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["curve"] = r.curve;
    j["field"] = r.field;
    if (r.seed) j["seed"] = *r.seed;
    j["data"] = nlohmann::ordered_json::array();
    for (const auto& [k, v] : r.data) j["data"].push_back({{"key", k}, {"value", v}});
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"witness", c.witness}});
    j["result"] = r.ok() ? "PASS" : "FAIL";
    return j;
}

bool usage_error(Errc e) {
    return e == Errc::ParseError || e == Errc::InvalidArgument || e == Errc::InvalidField;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kummer surfaces of genus 2 curves and their desingularization"};
    app.require_subcommand(1);

    std::string curve_path;
    std::optional<std::string> field;
    bool json = false;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::string suite = "all";
    MapRequest mq;
    std::string beta;
    long bound = 2;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--curve", curve_path, "curve file")->required();
        sub->add_option("--field", field, "override the field of the file: QQ or GF(p)");
        sub->add_flag("--json", json, "structured output");
    };
    auto* kummer_cmd = app.add_subcommand("kummer", "quartic K, nodes and tropes");
    common(kummer_cmd);

    auto* map_cmd = app.add_subcommand("map", "evaluate kappa, kappa1, kappa_star or theta");
    common(map_cmd);
    map_cmd->add_option("--which", mq.which, "kappa | kappa1 | kappa_star | theta")
        ->check(CLI::IsMember({"kappa", "kappa1", "kappa_star", "theta"}));
    map_cmd->add_option("--point", mq.point, "comma separated coordinates");
    map_cmd->add_option("--divisor", mq.divisor, "x,y,u,v");
    map_cmd->add_option("--index", mq.index, "W_i used by kappa_star")->check(CLI::Range(1, 6));

    auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
    common(verify_cmd);
    verify_cmd->add_option("--suite", suite, "all | kappa | lines | diagrams | twists | autos")
        ->check(CLI::IsMember({"all", "kappa", "lines", "diagrams", "twists", "autos"}));
    verify_cmd->add_option("--samples", samples, "random points per suite")->check(CLI::Range(1, 100000));
    verify_cmd->add_option("--seed", seed, "64-bit seed");

    auto* twist_cmd = app.add_subcommand("twist", "the twist S^(beta^2) and the map to S");
    common(twist_cmd);
    twist_cmd->add_option("--beta", beta, "coefficients b0,b1,... of beta")->required();
    twist_cmd->add_option("--bound", bound, "height bound for point search over QQ");

    auto* autos_cmd = app.add_subcommand("autos", "GL0, GL and the involution criterion");
    common(autos_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const auto curve = load_curve(read_curve_file(curve_path), field);
        const Report rep = std::visit(
            [&](const auto& C) -> Report {
                if (kummer_cmd->parsed()) return cmd_kummer(C);
                if (map_cmd->parsed()) return cmd_map(C, mq);
                if (verify_cmd->parsed()) return cmd_verify(C, suite, samples, seed);
                if (twist_cmd->parsed()) return cmd_twist(C, beta, bound);
                return cmd_autos(C);
            },
            curve);
        if (json)
            std::cout << to_json(rep).dump(2) << "\n";
        else
            std::cout << rep.text();
        return rep.ok() ? 0 : 1;
    } catch (const Error& e) {
        if (json) {
            nlohmann::ordered_json j{{"error", std::string(errc_name(e.code()))}, {"message", e.message()}};
            std::cout << j.dump(2) << "\n";
        }
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.message() << "\n";
        return usage_error(e.code()) ? 2 : 1;
    }
}
