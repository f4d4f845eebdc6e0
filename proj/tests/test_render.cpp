#include <doctest.h>

#include <string>
#include <vector>

#include "toric/render.hpp"

using namespace toric;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle)
{
    std::size_t count = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++count;
    return count;
}

/// Minimal well-formedness check: every opened tag is closed in order.
bool tags_balanced(const std::string& svg)
{
    std::vector<std::string> stack;
    std::size_t pos = 0;
    while ((pos = svg.find('<', pos)) != std::string::npos) {
        std::size_t end = svg.find('>', pos);
        if (end == std::string::npos)
            return false;
        std::string tag = svg.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        if (tag.empty() || tag[0] == '?' || tag[0] == '!')
            continue;
        if (tag.back() == '/')
            continue; // self-closing
        if (tag[0] == '/') {
            std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name)
                return false;
            stack.pop_back();
        } else {
            stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
        }
    }
    return stack.empty();
}

} // namespace

TEST_CASE("render_cone_svg: shapes, rays and winding annotation")
{
    RenderOptions o;
    MomentCone sphere{Direction{1, 0}, Direction{0, 1}, 0};
    std::string svg = render_cone_svg(sphere, o);
    CHECK(tags_balanced(svg));
    CHECK(count_occurrences(svg, "class=\"ray\"") == 2);
    CHECK(count_occurrences(svg, "class=\"sector\"") == 1);
    CHECK(count_occurrences(svg, "winding-arc") == 0);

    std::string twisted =
        render_cone_svg(MomentCone{Direction{1, 0}, Direction{0, 1}, 1}, o);
    CHECK(tags_balanced(twisted));
    CHECK(count_occurrences(twisted, "class=\"ray\"") == 2);
    CHECK(count_occurrences(twisted, "class=\"sector\"") == 0);
    CHECK(count_occurrences(twisted, "+1 turn") == 1);

    std::string half =
        render_cone_svg(MomentCone{Direction{1, 0}, Direction{-1, 0}, 0}, o);
    CHECK(count_occurrences(half, "class=\"sector\"") == 1);

    CHECK_THROWS_AS(
        render_cone_svg(MomentCone{Direction{1, 0}, Direction{1, 0}, 0}, o),
        ToricError);
}

TEST_CASE("render_plumbing_svg: one ray per fan direction")
{
    RenderOptions o;
    std::string two = render_plumbing_svg(validate({Int(0), Int(0)}), o);
    CHECK(tags_balanced(two));
    CHECK(count_occurrences(two, "class=\"ray\"") == 2);

    std::string four =
        render_plumbing_svg(validate({Int(0), Int(0), Int(0), Int(0)}), o);
    CHECK(count_occurrences(four, "class=\"ray\"") == 4);

    std::string pair = render_plumbing_svg(validate({Int(1), Int(-2)}), o);
    CHECK(count_occurrences(pair, "class=\"ray\"") == 2);
    CHECK(pair.find("(-1,1)") != std::string::npos);
    CHECK(pair.find("(-2,-1)") != std::string::npos);
}

TEST_CASE("rendering is deterministic")
{
    RenderOptions o;
    MomentCone c{Direction{1, 0}, Direction{2, 3}, 1};
    CHECK(render_cone_svg(c, o) == render_cone_svg(c, o));
    Plumbing p = validate({Int(1), Int(-2), Int(-3)});
    CHECK(render_plumbing_svg(p, o) == render_plumbing_svg(p, o));
}

TEST_CASE("render options are validated")
{
    RenderOptions o;
    o.canvas_size = 32;
    CHECK_THROWS_AS(render_cone_svg(MomentCone{Direction{1, 0}, Direction{0, 1}, 0}, o),
                    ToricError);
}
