// Copyright 2026 The qht authors
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

#pragma once

namespace qht {

inline constexpr const char* kToolVersion = "0.1.0";

// Public output contracts are versioned; bump on any incompatible change.
inline constexpr const char* kRecordsSchemaVersion = "qht-records/1";
inline constexpr const char* kChannelSchemaVersion = "qht-channel/1";
inline constexpr const char* kCheckSchemaVersion = "qht-check/1";

}  // namespace qht
