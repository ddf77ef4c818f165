// Copyright 2026 The Kakeya Authors.
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

#pragma once

// Umbrella header.

#include "kakeya/ball.hpp"
#include "kakeya/error.hpp"
#include "kakeya/experiments.hpp"
#include "kakeya/fit.hpp"
#include "kakeya/hpolytope.hpp"
#include "kakeya/inball.hpp"
#include "kakeya/lp.hpp"
#include "kakeya/minkowski.hpp"
#include "kakeya/mu_polygon.hpp"
#include "kakeya/polygon.hpp"
#include "kakeya/polytope3.hpp"
#include "kakeya/rng.hpp"
#include "kakeya/rotation.hpp"
#include "kakeya/shape.hpp"
#include "kakeya/shape_io.hpp"
#include "kakeya/tolerances.hpp"
#include "kakeya/vec.hpp"
