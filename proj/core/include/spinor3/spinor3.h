// Copyright 2026 The spinor3 Authors
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

// Umbrella header for the spinor3 core library.

#include "spinor3/angle.h"
#include "spinor3/errors.h"
#include "spinor3/gauge_fixing.h"
#include "spinor3/ks_covariance.h"
#include "spinor3/matrix.h"
#include "spinor3/pauli.h"
#include "spinor3/rotation.h"
#include "spinor3/rotation_algebra.h"
#include "spinor3/sampling.h"
#include "spinor3/spinor.h"
#include "spinor3/spinor_maps.h"
#include "spinor3/tolerance.h"
#include "spinor3/vector3.h"
