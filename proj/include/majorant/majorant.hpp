// Copyright 2026 The Majorant Authors
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

#include "majorant/bounds.hpp"
#include "majorant/detector.hpp"
#include "majorant/error.hpp"
#include "majorant/majorization.hpp"
#include "majorant/numerics.hpp"
#include "majorant/observables.hpp"
#include "majorant/oracle.hpp"
#include "majorant/random.hpp"
#include "majorant/states.hpp"
