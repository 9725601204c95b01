#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "divcancel/curve.hpp"
#include "divcancel/parse.hpp"

namespace testsupport {

using namespace divcancel;

inline FieldElement qt(const std::string& s) { return parse_element(s, FieldKind::function_field); }
inline FieldElement q(const std::string& s) { return parse_element(s, FieldKind::rationals); }

inline WeierstrassModel model(FieldKind k, const std::array<const char*, 5>& a) {
    return WeierstrassModel({parse_element(a[0], k), parse_element(a[1], k), parse_element(a[2], k),
                             parse_element(a[3], k), parse_element(a[4], k)});
}

// y^2 = x(x - f^2)(x - g^2), f = t^2 - 1, g = 2t.
inline WeierstrassModel example_curve() {
    return model(FieldKind::function_field, {"0", "-(t^2+1)^2", "0", "4*t^2*(t^2-1)^2", "0"});
}

// ((f - h)(g - h), (f + g)(f - h)(g - h)), h = t^2 + 1.
inline CurvePoint example_point() {
    const FieldElement f = qt("t^2-1"), g = qt("2*t"), h = qt("t^2+1");
    return {(f - h) * (g - h), (f + g) * (f - h) * (g - h)};
}

inline nlohmann::json load_fixture(const std::string& name) {
    std::ifstream in(std::string(DIVCANCEL_TEST_DATA) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    return nlohmann::json::parse(in);
}

inline WeierstrassModel model_from_json(FieldKind k, const nlohmann::json& a) {
    std::array<FieldElement, 5> c;
    for (int i = 0; i < 5; ++i) c[i] = parse_element(a.at(i).get<std::string>(), k);
    return WeierstrassModel(c);
}

}  // namespace testsupport
