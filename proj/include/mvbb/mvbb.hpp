// Copyright 2026 The mvbb Authors
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

#ifndef MVBB_MVBB_HPP
#define MVBB_MVBB_HPP

#include "mvbb/bench.hpp"
#include "mvbb/diameter.hpp"
#include "mvbb/fitter.hpp"
#include "mvbb/generators.hpp"
#include "mvbb/geom_core.hpp"
#include "mvbb/hull.hpp"
#include "mvbb/io.hpp"
#include "mvbb/oracle.hpp"
#include "mvbb/rect2d.hpp"
#include "mvbb/search.hpp"

#endif  // MVBB_MVBB_HPP
