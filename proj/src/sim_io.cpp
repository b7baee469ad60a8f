/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/sim_io.hpp"

#include <array>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace oldb {

namespace {

const char* kColumns =
    "t,l2_u,h1_u,l2_tau,h1_tau,h2_tau,linf_tau,l4_tau,linf_omega,l2_omega,"
    "linf_gamma,b0inf1_gamma,besov_tau_b0inf1,bkm_accum";
constexpr int kNumColumns = 14;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

SeriesWriter::SeriesWriter(const std::string& path,
                           const std::map<std::string, std::string>& meta) {
    out_.open(path, std::ios::out | std::ios::trunc);
    if (!out_)
        throw std::runtime_error("series: cannot open '" + path + "' for writing");
    out_ << "# oldroyd2d series format 1\n";
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    out_ << "# timestamp: " << now << " (informational, excluded from byte-stability)\n";
    for (const auto& [k, v] : meta)
        out_ << "# " << k << " = " << v << "\n";
    out_ << kColumns << "\n";
    out_.flush();
}

void SeriesWriter::write(const DiagnosticsRecord& r) {
    const std::array<double, kNumColumns> row = {
        r.t,          r.l2_u,       r.h1_u,       r.l2_tau,         r.h1_tau,
        r.h2_tau,     r.linf_tau,   r.l4_tau,     r.linf_omega,     r.l2_omega,
        r.linf_gamma, r.b0inf1_gamma, r.besov_tau_b0inf1, r.bkm_accum};
    for (int i = 0; i < kNumColumns; ++i)
        out_ << (i ? "," : "") << g17(row[i]);
    out_ << "\n";
    out_.flush();
    if (!out_)
        throw std::runtime_error("series: write failed");
}

SeriesData read_series(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("series: cannot open '" + path + "'");

    SeriesData data;
    std::string line;
    bool have_header = false;
    std::vector<int> col_of;  // position in file -> canonical column index
    int lineno = 0;

    std::vector<std::string> expected;
    {
        std::istringstream hs(kColumns);
        std::string c;
        while (std::getline(hs, c, ','))
            expected.push_back(c);
    }

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        if (line[0] == '#') {
            const std::string body = line.substr(1);
            const auto eq = body.find('=');
            if (eq != std::string::npos) {
                auto trim = [](std::string s) {
                    const auto b = s.find_first_not_of(" \t\r");
                    if (b == std::string::npos)
                        return std::string();
                    const auto e = s.find_last_not_of(" \t\r");
                    return s.substr(b, e - b + 1);
                };
                data.meta[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
            }
            continue;
        }
        if (!have_header) {
            std::vector<std::string> names;
            std::istringstream hs(line);
            std::string c;
            while (std::getline(hs, c, ','))
                names.push_back(c);
            col_of.assign(names.size(), -1);
            std::string missing;
            for (const auto& want : expected) {
                bool found = false;
                for (std::size_t i = 0; i < names.size(); ++i)
                    if (names[i] == want) {
                        col_of[i] = static_cast<int>(&want - expected.data());
                        found = true;
                        break;
                    }
                if (!found)
                    missing += (missing.empty() ? "" : ", ") + want;
            }
            if (!missing.empty())
                throw std::runtime_error("series: missing columns: " + missing);
            have_header = true;
            continue;
        }

        std::array<double, kNumColumns> vals{};
        std::istringstream rs(line);
        std::string cell;
        int nfields = 0;
        int canonical_seen = 0;
        while (std::getline(rs, cell, ',')) {
            if (nfields >= static_cast<int>(col_of.size()))
                throw std::runtime_error("series: row at line " + std::to_string(lineno) +
                                         " has too many fields");
            const int canon = col_of[nfields];
            if (canon >= 0) {
                char* end = nullptr;
                vals[canon] = std::strtod(cell.c_str(), &end);
                if (end == cell.c_str())
                    throw std::runtime_error("series: non-numeric cell at line " +
                                             std::to_string(lineno));
                ++canonical_seen;
            }
            ++nfields;
        }
        if (canonical_seen != kNumColumns)
            throw std::runtime_error("series: row at line " + std::to_string(lineno) +
                                     " is truncated (expected " + std::to_string(kNumColumns) +
                                     " columns, got " + std::to_string(canonical_seen) + ")");

        DiagnosticsRecord r;
        r.t = vals[0];
        r.l2_u = vals[1];
        r.h1_u = vals[2];
        r.l2_tau = vals[3];
        r.h1_tau = vals[4];
        r.h2_tau = vals[5];
        r.linf_tau = vals[6];
        r.l4_tau = vals[7];
        r.linf_omega = vals[8];
        r.l2_omega = vals[9];
        r.linf_gamma = vals[10];
        r.b0inf1_gamma = vals[11];
        r.besov_tau_b0inf1 = vals[12];
        r.bkm_accum = vals[13];
        data.history.push_back(r);
    }
    if (!have_header)
        throw std::runtime_error("series: no header row found in '" + path + "'");
    return data;
}

namespace {

constexpr char kMagic[8] = {'O', 'B', '2', 'D', 'C', 'K', 'P', 'T'};
constexpr unsigned char kVersion = 1;

void put_raw(std::ofstream& out, const void* p, std::size_t bytes) {
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(bytes));
}

void get_raw(std::ifstream& in, void* p, std::size_t bytes) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(bytes));
    if (!in)
        throw std::runtime_error("checkpoint: unexpected end of file");
}

}  // namespace

void write_checkpoint(const std::string& path, const State& state) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("checkpoint: cannot open '" + path + "' for writing");
    put_raw(out, kMagic, sizeof(kMagic));
    put_raw(out, &kVersion, 1);
    const std::int64_t n = state.grid()->n();
    const double box_len = state.grid()->box_len();
    put_raw(out, &n, sizeof(n));
    put_raw(out, &box_len, sizeof(box_len));
    put_raw(out, &state.t, sizeof(state.t));
    for (const SpectralScalarField* f :
         {&state.u.u1, &state.u.u2, &state.tau.t11, &state.tau.t12, &state.tau.t22})
        put_raw(out, f->coeff.data(), f->coeff.size() * sizeof(Complex));
    if (!out)
        throw std::runtime_error("checkpoint: write failed for '" + path + "'");
}

State read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("checkpoint: cannot open '" + path + "'");
    char magic[8];
    get_raw(in, magic, sizeof(magic));
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("checkpoint: bad magic in '" + path + "'");
    unsigned char version = 0;
    get_raw(in, &version, 1);
    if (version != kVersion)
        throw std::runtime_error("checkpoint: unsupported version " + std::to_string(version));
    std::int64_t n = 0;
    double box_len = 0.0;
    double t = 0.0;
    get_raw(in, &n, sizeof(n));
    get_raw(in, &box_len, sizeof(box_len));
    get_raw(in, &t, sizeof(t));

    State state(FrequencyGrid::make(static_cast<int>(n), box_len));
    state.t = t;
    for (SpectralScalarField* f :
         {&state.u.u1, &state.u.u2, &state.tau.t11, &state.tau.t12, &state.tau.t22})
        get_raw(in, f->coeff.data(), f->coeff.size() * sizeof(Complex));
    return state;
}

}  // namespace oldb
