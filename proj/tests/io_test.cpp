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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ordmat/instance_io.hpp"

namespace {

using namespace ordmat;

TEST(InstanceJson, RoundTripEveryKind) {
  std::vector<Instance> all{
      fixtures::all_bases_instance(),
      make_instance(MatroidDesc::partition({{0, 2}, {1}}, {1, 1}), {3, 0, 2}, {{1, 2, 2}, {2, 1, 1}}, {2, 2}),
      make_instance(MatroidDesc::uniform(3, 2), {0, 0, 7}, {{1, 1, 1}}, {1}),
  };
  for (const auto& inst : all) {
    const auto text = dump_instance(inst);
    EXPECT_EQ(dump_instance(parse_instance(text)), text);
  }
}

TEST(InstanceJson, ReadsDocumentedLayout) {
  const auto inst = parse_instance(R"({"matroid": {"kind":"graphic","nodes":3,"edges":[[0,2],[1,2]]},
      "weights":[4,5], "ordinal":[[1,2]], "num_categories":[2]})");
  EXPECT_EQ(inst.ground_size(), 2);
  EXPECT_EQ(rank(inst.matroid), 2);
  const auto uni = parse_instance(R"({"matroid":{"kind":"uniform","k":1},"weights":[1,2,3],
      "ordinal":[[1,1,1]],"num_categories":[1]})");
  EXPECT_EQ(uni.ground_size(), 3);
}

TEST(InstanceJson, RejectsBadDocuments) {
  EXPECT_THROW(parse_instance("{"), InputError);
  EXPECT_THROW(parse_instance(R"({"matroid":{"kind":"cycle"},"weights":[],"ordinal":[[]],"num_categories":[1]})"),
               InputError);
  EXPECT_THROW(parse_instance(R"({"matroid":{"kind":"uniform","k":1},"weights":[-1],"ordinal":[[1]],"num_categories":[1]})"),
               InputError);
  EXPECT_THROW(parse_instance(R"({"matroid":{"kind":"uniform","k":1},"weights":[1.5],"ordinal":[[1]],"num_categories":[1]})"),
               InputError);
  EXPECT_THROW(parse_instance(R"({"matroid":{"kind":"uniform","k":1},"weights":[1],"ordinal":[[3]],"num_categories":[2]})"),
               InputError);
  EXPECT_THROW(parse_instance(R"({"matroid":{"kind":"graphic","nodes":2,"edges":[[0,0]]},"weights":[1],"ordinal":[[1]],"num_categories":[1]})"),
               InputError);
  EXPECT_THROW(parse_instance(R"({"weights":[1]})"), InputError);
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), InputError);
}

}  // namespace
