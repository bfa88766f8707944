// Copyright 2026 The Sonotex Authors.
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

#ifndef SONOTEX_WAV_HPP_
#define SONOTEX_WAV_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "sonotex/signal.hpp"

namespace sonotex {

// Reads a 16-bit signed PCM WAV file. Integer sample values are preserved
// exactly (no scaling to [-1, 1]). Multi-channel files contribute channel 0
// only, with a note appended to `warnings` when given.
Signal read_wav(const std::filesystem::path& path,
                std::vector<std::string>* warnings = nullptr);

// Writes 16-bit signed little-endian mono PCM. Samples are rounded to the
// nearest integer and must land inside [-32768, 32767]; anything outside is
// an error rather than a silent clip.
void write_wav(const Signal& signal, const std::filesystem::path& path);

}  // namespace sonotex

#endif  // SONOTEX_WAV_HPP_
