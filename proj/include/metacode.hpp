// Copyright 2026 The metacode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef METACODE_HPP
#define METACODE_HPP

#include "metacode/additive_code.hpp"
#include "metacode/distance.hpp"
#include "metacode/fixtures.hpp"
#include "metacode/gf4.hpp"
#include "metacode/graph.hpp"
#include "metacode/graph_metrics.hpp"
#include "metacode/io.hpp"
#include "metacode/metacirculant.hpp"
#include "metacode/search.hpp"
#include "metacode/verify.hpp"
#include "metacode/weight_profile.hpp"

#endif  // METACODE_HPP
