#ifndef TORIC_CLI_HPP
#define TORIC_CLI_HPP

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric/json_io.hpp"
#include "toric/render.hpp"

namespace toric::cli {

namespace detail {

inline MomentCone parse_cone_arg(const std::string& text)
{
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ToricError(ErrorCode::BadInput, "cone argument is not valid JSON");
    return cone_from_json(j);
}

/// Chains are accepted as comma-separated integers, e.g. "0,0,-2,1".
inline Plumbing parse_chain_arg(const std::string& text)
{
    std::vector<Int> chain;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
                ++pos;
            if (pos != item.size())
                throw std::invalid_argument(item);
            chain.push_back(Int(v));
        } catch (const std::exception&) {
            throw ToricError(ErrorCode::BadInput,
                             "chain entry '" + item + "' is not an integer");
        }
    }
    return validate(chain);
}

} // namespace detail

/**
 * Run one CLI invocation. Exit codes: 0 success, 1 validation error,
 * 2 usage error. All errors go to `err` as a single JSON line
 * {"error":code,"detail":...}.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err)
{
    CLI::App app{"Contact toric 3-manifolds: classification, plumbings and "
                 "invariants"};
    app.require_subcommand(1);

    std::string cone_text, chain_text, cone_a_text, cone_b_text;
    std::string lutz_kind, out_path;
    int canvas_size = 480;

    auto* cmd_classify = app.add_subcommand(
        "classify", "Classify a moment cone up to contactomorphism");
    cmd_classify->add_option("--cone", cone_text, "cone JSON")->required();

    auto* cmd_to = app.add_subcommand(
        "to-plumbing", "Linear plumbing realizing the cone's boundary");
    cmd_to->add_option("--cone", cone_text, "cone JSON")->required();

    auto* cmd_from = app.add_subcommand(
        "from-plumbing", "Moment cone and classification of a plumbing boundary");
    cmd_from->add_option("--chain", chain_text, "comma-separated chain")->required();

    auto* cmd_inv = app.add_subcommand(
        "invariants", "chi, sigma, c1^2 and theta of the plumbing 4-manifold");
    cmd_inv->add_option("--chain", chain_text, "comma-separated chain")->required();

    auto* cmd_lutz = app.add_subcommand("lutz", "Apply a Lutz twist to a cone");
    cmd_lutz->add_option("--cone", cone_text, "cone JSON")->required();
    cmd_lutz->add_option("--kind", lutz_kind, "half or full")
        ->required()
        ->check(CLI::IsMember({"half", "full"}));

    auto* cmd_equiv = app.add_subcommand(
        "equiv", "Toric equivalence and contactomorphism of two cones");
    cmd_equiv->add_option("--a", cone_a_text, "cone JSON")->required();
    cmd_equiv->add_option("--b", cone_b_text, "cone JSON")->required();

    auto* cmd_render = app.add_subcommand("render", "Write an SVG figure");
    auto* render_cone_opt =
        cmd_render->add_option("--cone", cone_text, "cone JSON");
    auto* render_chain_opt =
        cmd_render->add_option("--chain", chain_text, "comma-separated chain");
    render_cone_opt->excludes(render_chain_opt);
    cmd_render->add_option("--out", out_path, "output path, '-' for stdout")
        ->required();
    cmd_render->add_option("--size", canvas_size, "canvas size in pixels");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help() << std::flush;
        return 0;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (*cmd_classify) {
            MomentCone c = detail::parse_cone_arg(cone_text);
            out << to_json(classify(c)).dump() << "\n";
        } else if (*cmd_to) {
            MomentCone c = detail::parse_cone_arg(cone_text);
            out << to_json(plumbing_of_cone(c)).dump() << "\n";
        } else if (*cmd_from) {
            Plumbing p = detail::parse_chain_arg(chain_text);
            MomentCone c = cone_of_plumbing(p);
            out << Json{{"cone", to_json(c)},
                        {"classification", to_json(classify(c))}}
                       .dump()
                << "\n";
        } else if (*cmd_inv) {
            Plumbing p = detail::parse_chain_arg(chain_text);
            out << invariants_report(p).dump() << "\n";
        } else if (*cmd_lutz) {
            MomentCone c = detail::parse_cone_arg(cone_text);
            MomentCone twisted = lutz_kind == "half" ? half_lutz(c) : full_lutz(c);
            out << to_json(twisted).dump() << "\n";
        } else if (*cmd_equiv) {
            MomentCone a = detail::parse_cone_arg(cone_a_text);
            MomentCone b = detail::parse_cone_arg(cone_b_text);
            out << Json{{"toric_equivalent", toric_equivalent(a, b)},
                        {"contactomorphic", classify(a) == classify(b)}}
                       .dump()
                << "\n";
        } else if (*cmd_render) {
            RenderOptions o;
            o.canvas_size = canvas_size;
            std::string svg;
            if (render_cone_opt->count())
                svg = render_cone_svg(detail::parse_cone_arg(cone_text), o);
            else if (render_chain_opt->count())
                svg = render_plumbing_svg(detail::parse_chain_arg(chain_text), o);
            else
                throw ToricError(ErrorCode::BadInput,
                                 "render needs --cone or --chain");
            if (out_path == "-") {
                out << svg;
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file)
                    throw ToricError(ErrorCode::BadInput,
                                     "cannot open output file " + out_path);
                file << svg;
            }
        }
    } catch (const ToricError& e) {
        err << Json{{"error", error_code_name(e.code())}, {"detail", e.detail()}}
                   .dump()
            << "\n";
        return 1;
    }
    return 0;
}

} // namespace toric::cli

#endif // TORIC_CLI_HPP
