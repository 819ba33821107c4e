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

#ifndef ORDMAT_ORDMAT_HPP
#define ORDMAT_ORDMAT_HPP

#include "ordmat/element_set.hpp"
#include "ordmat/errors.hpp"
#include "ordmat/experiment.hpp"
#include "ordmat/generators.hpp"
#include "ordmat/greedy.hpp"
#include "ordmat/instance.hpp"
#include "ordmat/instance_io.hpp"
#include "ordmat/intersection.hpp"
#include "ordmat/matroid.hpp"
#include "ordmat/mioc.hpp"
#include "ordmat/oracle.hpp"
#include "ordmat/ordinal.hpp"

#endif  // ORDMAT_ORDMAT_HPP
