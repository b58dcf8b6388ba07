// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Everything except report.hpp, which needs nlohmann/json.

#ifndef GEODETIC_GEODETIC_HPP_
#define GEODETIC_GEODETIC_HPP_

#include "geodetic/biconnected.hpp"
#include "geodetic/bitset.hpp"
#include "geodetic/distance.hpp"
#include "geodetic/error.hpp"
#include "geodetic/exact.hpp"
#include "geodetic/gadgets.hpp"
#include "geodetic/generators.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/grid.hpp"
#include "geodetic/io.hpp"
#include "geodetic/line_graph.hpp"
#include "geodetic/mrsm.hpp"
#include "geodetic/properties.hpp"

#endif  // GEODETIC_GEODETIC_HPP_
