// Copyright 2026 The nswcat Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "nswcat/classifiers.hpp"

// Binary model container; the byte layout is described in docs/model_format.md.
namespace nswcat {

inline constexpr std::string_view kModelMagic = "NSWM";
inline constexpr std::uint16_t kModelVersion = 1;

std::string serialize_model(const Model& m);
// Throws DecodeError (with the byte offset) on malformed input.
Model deserialize_model(std::string_view bytes);

void save_model(const std::filesystem::path& path, const Model& m);
Model load_model(const std::filesystem::path& path);

}  // namespace nswcat
