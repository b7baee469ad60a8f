/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_SIM_IO_HPP
#define OLDROYD2D_SIM_IO_HPP

#include <fstream>
#include <map>
#include <string>

#include "oldroyd2d/diagnostics.hpp"

namespace oldb {

// series.csv: '#'-prefixed metadata lines (key = value; the timestamp line
// is informational and excluded from byte-stability), one header row naming
// the 14 columns, then one row per sample printed with 17 significant
// digits so values round-trip exactly. The file is append-only during a
// run; a truncated file still parses up to the damage.
class SeriesWriter {
  public:
    SeriesWriter(const std::string& path, const std::map<std::string, std::string>& meta);
    void write(const DiagnosticsRecord& r);

  private:
    std::ofstream out_;
};

struct SeriesData {
    History history;
    std::map<std::string, std::string> meta;
};

SeriesData read_series(const std::string& path);

// Binary checkpoint: magic "OB2DCKPT", version byte 1, then little-endian
// int64 n, f64 box_len, f64 t, then raw interleaved complex coefficients for
// u1, u2, t11, t12, t22 in row-major mode order. Raw doubles, so a restart
// is bit-exact.
void write_checkpoint(const std::string& path, const State& state);
State read_checkpoint(const std::string& path);

}  // namespace oldb

#endif
