/* Copyright 2026 The knpoly Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef KNPOLY_KNPOLY_HPP_
#define KNPOLY_KNPOLY_HPP_

#include "knpoly/construct.hpp"
#include "knpoly/cyclotomic.hpp"
#include "knpoly/errors.hpp"
#include "knpoly/ext.hpp"
#include "knpoly/fq.hpp"
#include "knpoly/intmath.hpp"
#include "knpoly/knormal.hpp"
#include "knpoly/parse.hpp"
#include "knpoly/poly.hpp"
#include "knpoly/search.hpp"

#endif  // KNPOLY_KNPOLY_HPP_
