#ifndef TORIC_JSON_IO_HPP
#define TORIC_JSON_IO_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/classify.hpp"
#include "toric/cone.hpp"
#include "toric/fourmanifold.hpp"
#include "toric/plumbing.hpp"

namespace toric {

using Json = nlohmann::json;

namespace detail {

inline Json int_to_json(const Int& v)
{
    // wire format uses plain JSON integers; reject anything wider
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw ToricError(ErrorCode::BadInput,
                         "integer too large for the JSON wire format");
    return Json(v.convert_to<std::int64_t>());
}

inline Int int_from_json(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw ToricError(ErrorCode::BadInput,
                         std::string(what) + " must be an integer");
    return Int(j.get<std::int64_t>());
}

inline Json rational_to_json(const Rational& r)
{
    return Json{{"num", int_to_json(boost::multiprecision::numerator(r))},
                {"den", int_to_json(boost::multiprecision::denominator(r))}};
}

inline Direction direction_from_json(const Json& j, const char* what)
{
    if (!j.is_array() || j.size() != 2)
        throw ToricError(ErrorCode::BadInput,
                         std::string(what) + " must be a pair [x,y]");
    Int x = int_from_json(j[0], what);
    Int y = int_from_json(j[1], what);
    Direction d = direction_reduce(x, y);
    if (d.x != x || d.y != y)
        throw ToricError(ErrorCode::BadInput,
                         std::string(what) + " must be a primitive vector");
    return d;
}

} // namespace detail

inline Json to_json(const MomentCone& c)
{
    return Json{{"r1", Json::array({detail::int_to_json(c.r1.x),
                                    detail::int_to_json(c.r1.y)})},
                {"r2", Json::array({detail::int_to_json(c.r2.x),
                                    detail::int_to_json(c.r2.y)})},
                {"winding", detail::int_to_json(c.winding)}};
}

inline MomentCone cone_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("r1") || !j.contains("r2") ||
        !j.contains("winding"))
        throw ToricError(ErrorCode::BadInput,
                         "cone JSON needs r1, r2 and winding");
    MomentCone c{detail::direction_from_json(j["r1"], "r1"),
                 detail::direction_from_json(j["r2"], "r2"),
                 detail::int_from_json(j["winding"], "winding")};
    if (c.winding < 0)
        throw ToricError(ErrorCode::BadInput, "winding must be >= 0");
    check_cone(c);
    return c;
}

inline Json to_json(const Plumbing& p)
{
    Json chain = Json::array();
    for (const Int& s : p.chain)
        chain.push_back(detail::int_to_json(s));
    return Json{{"chain", chain}};
}

inline Plumbing plumbing_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("chain") || !j["chain"].is_array())
        throw ToricError(ErrorCode::BadInput, "plumbing JSON needs a chain array");
    std::vector<Int> chain;
    for (const auto& e : j["chain"])
        chain.push_back(detail::int_from_json(e, "chain entry"));
    return validate(chain);
}

inline const char* contact_tag(ContactClass c)
{
    switch (c) {
        case ContactClass::Tight: return "tight";
        case ContactClass::OvertwistedFull: return "ot_full";
        case ContactClass::OvertwistedHalf: return "ot_half";
    }
    return "unknown";
}

inline Json to_json(const ClassificationResult& r)
{
    Json h1 = Json::array();
    for (const Int& f : r.h1)
        h1.push_back(detail::int_to_json(f));
    return Json{{"lens", Json{{"k", detail::int_to_json(r.lens.k)},
                              {"l", detail::int_to_json(r.lens.l)}}},
                {"contact", contact_tag(r.contact)},
                {"h1", h1}};
}

/// Invariants report of the plumbing 4-manifold: chi, sigma, c1^2, theta.
inline Json invariants_report(const Plumbing& p)
{
    return Json{{"chi", detail::int_to_json(euler_characteristic(p))},
                {"sigma", detail::int_to_json(signature(intersection_form(p)))},
                {"c1_sq", detail::rational_to_json(c1_square(p))},
                {"theta", detail::rational_to_json(theta(p))}};
}

} // namespace toric

#endif // TORIC_JSON_IO_HPP
