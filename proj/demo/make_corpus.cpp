// Copyright 2026 The Stylopsy Authors.
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


// Writes the seeded toy corpus as CSV (or JSONL) on stdout.
//
//   make_corpus [HUMANS AIS SEED [csv|jsonl]]

#include <cstdint>
#include <iostream>
#include <string>

#include "stylopsy/synthetic.hpp"

int main(int argc, char** argv) {
  std::size_t humans = 40;
  std::size_t ais = 40;
  std::uint64_t seed = 7;
  std::string format = "csv";
  if (argc >= 4) {
    humans = std::stoul(argv[1]);
    ais = std::stoul(argv[2]);
    seed = std::stoull(argv[3]);
  }
  if (argc >= 5) format = argv[4];
  const auto corpus = stylopsy::synthetic_corpus(humans, ais, seed);
  std::cout << (format == "jsonl" ? stylopsy::to_jsonl(corpus) : stylopsy::to_csv(corpus));
  return 0;
}
