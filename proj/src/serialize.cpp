/**************************************************************************
 * serialize.cpp
 *
 * Copyright 2026 The rsrepair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "rsrepair/serialize.hpp"

#include "rsrepair/error.hpp"

#include <fstream>

namespace rsrepair {

namespace {

template <class T>
T get(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("field '") + key + "': " + e.what());
    }
}

const Json& child(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<Element> elements_from_json(const FieldTower& f, const Json& j)
{
    if (!j.is_array())
        throw Error(ErrorCode::Parse, "expected an array of elements");
    std::vector<Element> out;
    for (const auto& e : j)
        out.push_back(element_from_json(f, e));
    return out;
}

Json elements_to_json(const FieldTower& f, std::span<const Element> xs)
{
    Json arr = Json::array();
    for (Element x : xs)
        arr.push_back(element_to_json(f, x));
    return arr;
}

} // namespace

Json field_to_json(const FieldTower& f)
{
    return Json{{"p", f.p()}, {"a", f.a()}, {"ell", f.ell()}, {"modulus", f.modulus()}};
}

FieldTower field_from_json(const Json& j)
{
    return FieldTower::with_modulus(get<unsigned>(j, "p"), get<unsigned>(j, "a"), get<unsigned>(j, "ell"),
                                    get<std::vector<unsigned>>(j, "modulus"));
}

Json element_to_json(const FieldTower& f, Element x) { return Json(f.coords(x)); }

Element element_from_json(const FieldTower& f, const Json& j)
{
    std::vector<unsigned> c;
    try {
        c = j.get<std::vector<unsigned>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("element: ") + e.what());
    }
    if (c.size() != f.degree())
        throw Error(ErrorCode::Parse, "element has " + std::to_string(c.size()) + " coordinates, expected " +
                                          std::to_string(f.degree()));
    for (unsigned v : c)
        if (v >= f.p())
            throw Error(ErrorCode::Parse, "element coordinate out of range");
    return f.from_coords(c);
}

Json basis_to_json(const BasisPair& bp)
{
    return Json{{"beta", elements_to_json(bp.tower(), bp.beta())},
                {"gamma", elements_to_json(bp.tower(), bp.gamma())}};
}

BasisPair basis_from_json(const FieldTower& f, const Json& j)
{
    BasisPair bp = BasisPair::dual_basis(f, elements_from_json(f, child(j, "beta")));
    if (j.contains("gamma") && elements_from_json(f, j.at("gamma")) != bp.gamma())
        throw Error(ErrorCode::Parse, "stored gamma is not the dual basis of beta");
    return bp;
}

Json subspace_to_json(const Subspace& s) { return elements_to_json(s.tower(), s.basis()); }

Subspace subspace_from_json(const FieldTower& f, const Json& j) { return Subspace::span(f, elements_from_json(f, j)); }

Json scheme_to_json(const RepairScheme& s, const Json& meta)
{
    const FieldTower& f = s.tower();
    const std::size_t r = s.code().r();
    Json polys = Json::array();
    for (const Polynomial& g : s.polys()) {
        Json coeffs = Json::array();
        for (std::size_t e = 0; e < r; ++e)
            coeffs.push_back(element_to_json(f, g.coeff(e)));
        polys.push_back(std::move(coeffs));
    }
    Json j{{"field", field_to_json(f)},
           {"basis", basis_to_json(s.basis())},
           {"evaluation_set", subspace_to_json(s.code().evaluation_set())},
           {"n", s.code().n()},
           {"r", r},
           {"target", s.target() + 1},
           {"polys", std::move(polys)}};
    if (!meta.empty())
        j["meta"] = meta;
    return j;
}

RepairScheme scheme_from_json(const Json& j)
{
    const FieldTower f = field_from_json(child(j, "field"));
    BasisPair bp = basis_from_json(f, child(j, "basis"));
    Subspace a = subspace_from_json(f, child(j, "evaluation_set"));
    const auto r = get<std::size_t>(j, "r");
    const auto target = j.contains("target") ? get<std::size_t>(j, "target") : std::size_t{1};
    if (target < 1)
        throw Error(ErrorCode::Parse, "target is 1-based");
    const Json& pj = child(j, "polys");
    if (!pj.is_array())
        throw Error(ErrorCode::Parse, "'polys' must be an array");
    std::vector<Polynomial> polys;
    for (const auto& p : pj)
        polys.emplace_back(elements_from_json(f, p));
    const std::uint64_t n = a.size();
    if (r < 1 || r >= n)
        throw Error(ErrorCode::Parse, "r must satisfy 1 <= r < n");
    RSCode code(std::move(a), n - r);
    return RepairScheme(std::move(code), std::move(bp), std::move(polys), target - 1);
}

RepairScheme load_scheme(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Parse, "cannot open " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
    }
    return scheme_from_json(j);
}

void save_json(const std::filesystem::path& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::Parse, "cannot write " + path.string());
    out << j.dump(2) << '\n';
}

} // namespace rsrepair
