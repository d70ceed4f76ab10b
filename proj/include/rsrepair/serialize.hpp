/**************************************************************************
 * serialize.hpp
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

#pragma once

// JSON forms of the core types. Elements are coordinate arrays over GF(p)
// (constant term first); node indices are 1-based in files.

#include "rsrepair/basis.hpp"
#include "rsrepair/scheme.hpp"
#include "rsrepair/subspace.hpp"

#include "json.hpp"

#include <filesystem>

namespace rsrepair {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldTower& f);
FieldTower field_from_json(const Json& j);

Json element_to_json(const FieldTower& f, Element x);
Element element_from_json(const FieldTower& f, const Json& j);

Json basis_to_json(const BasisPair& bp);
/// Recomputes the dual of beta and checks it against the stored gamma.
BasisPair basis_from_json(const FieldTower& f, const Json& j);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const FieldTower& f, const Json& j);

/**
 * Scheme file: {field, basis, evaluation_set, r, target, polys, meta?}.
 * Polynomials are arrays of r coefficient arrays, low degree first.
 * Loading validates the scheme (InvalidScheme names the violated condition).
 */
Json scheme_to_json(const RepairScheme& s, const Json& meta = Json::object());
RepairScheme scheme_from_json(const Json& j);

RepairScheme load_scheme(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const Json& j);

} // namespace rsrepair
