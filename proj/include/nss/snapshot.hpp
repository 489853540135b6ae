#pragma once

// Binary field snapshots and full solver checkpoints.
//
// Snapshot layout (little-endian):
//   magic "NSSSNP1\0" | u32 version | u32 M | f64 L | f64 t | f64 eps2
//   | f64 A | f64 kappa | u32 scheme | u64 seed | u64 fnv1a(payload)
//   | payload: M*M f64, row-major nodal values
//
// Checkpoint layout: magic "NSSCKP1\0", the same header, then the spectral
// state verbatim (2*M*M f64), a u8 history flag with the previous explicit
// slot (2*M*M f64) when set, and the schedule cursor (u64 step index,
// u32 segment index, u64 steps done in segment).  Restoring the state
// bitwise is what makes resumed runs continue identically.

#include <cstdint>
#include <optional>
#include <string>

#include "nss/stepper.hpp"

namespace nss {

struct SnapshotHeader {
    std::uint32_t version = 1;
    std::uint32_t M = 0;
    double L = 0.0;
    double t = 0.0;
    double eps2 = 0.0;
    double A = 0.0;
    double kappa = 0.0;
    std::uint32_t scheme = 0;
    std::uint64_t seed = 0;
};

struct Snapshot {
    SnapshotHeader header;
    Field u;
};

void write_snapshot(const Snapshot& snap, const std::string& path);
Snapshot read_snapshot(const std::string& path);

struct Checkpoint {
    SnapshotHeader header;
    ResumePoint state;
};

void write_checkpoint(const Checkpoint& ck, const std::string& path);
Checkpoint read_checkpoint(const std::string& path);

}  // namespace nss
