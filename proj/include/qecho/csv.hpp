// Copyright 2026 The qecho Authors
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

#ifndef QECHO_CSV_HPP
#define QECHO_CSV_HPP

#include <iosfwd>
#include <string>

#include "qecho/timeline.hpp"

namespace qecho {

// Lower-case scientific notation with 12 significant digits; the fixed
// width keeps equal configurations byte-identical across runs.
std::string format_sci(double value);

// Emits the CSV contract: line 1 "# header-json:<resolved config>", line 2
// column names, then one comma-separated row per sample, LF endings.
// Columns: t, re_cph, im_cph, abs2_cph, p_atoms, norm [, p_0..p_k].
void write_timeseries_csv(std::ostream& out, const TimeSeries& series,
                          const std::string& header_json);

}  // namespace qecho

#endif
