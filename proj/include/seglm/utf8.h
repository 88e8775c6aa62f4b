// Copyright 2026 The seglm Authors.
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

#ifndef SEGLM_UTF8_H_
#define SEGLM_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace seglm {

// Decodes UTF-8 into Unicode scalar values. Rejects overlong forms,
// surrogates and values above U+10FFFF. `base_offset` is added to the
// reported byte offset on error.
std::u32string DecodeUtf8(std::string_view bytes, std::size_t base_offset = 0);

std::string EncodeUtf8(std::u32string_view chars);
void AppendUtf8(char32_t c, std::string* out);

// True for ASCII/Unicode whitespace and C0/C1 control characters.
bool IsSeparatorOrControl(char32_t c);

}  // namespace seglm

#endif  // SEGLM_UTF8_H_
