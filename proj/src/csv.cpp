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

#include "qecho/csv.hpp"

#include <cstdio>
#include <ostream>

namespace qecho {

std::string format_sci(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.11e", value);
    return buffer;
}

void write_timeseries_csv(std::ostream& out, const TimeSeries& series,
                          const std::string& header_json) {
    out << "# header-json:" << header_json << "\n";
    out << "t,re_cph,im_cph,abs2_cph,p_atoms,norm";
    for (int n = 0; n < series.photon_levels; ++n) {
        out << ",p_" << n;
    }
    out << "\n";
    for (std::size_t row = 0; row < series.rows(); ++row) {
        const auto c = series.cph[row];
        out << format_sci(series.t[row]) << ',' << format_sci(c.real()) << ','
            << format_sci(c.imag()) << ',' << format_sci(std::norm(c)) << ','
            << format_sci(series.p_atoms[row]) << ',' << format_sci(series.norm[row]);
        if (series.photon_levels > 0) {
            for (int n = 0; n < series.photon_levels; ++n) {
                out << ',' << format_sci(series.p_n[row][static_cast<std::size_t>(n)]);
            }
        }
        out << "\n";
    }
}

}  // namespace qecho
