#include "nss/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace nss {

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot format is little-endian; byte swapping is not implemented");

constexpr char kSnapMagic[8] = {'N', 'S', 'S', 'S', 'N', 'P', '1', '\0'};
constexpr char kCkptMagic[8] = {'N', 'S', 'S', 'C', 'K', 'P', '1', '\0'};

std::uint64_t fnv1a(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

template <typename T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw SnapshotFormatError("truncated file");
    return v;
}

void put_header(std::ostream& os, const SnapshotHeader& h) {
    put(os, h.version);
    put(os, h.M);
    put(os, h.L);
    put(os, h.t);
    put(os, h.eps2);
    put(os, h.A);
    put(os, h.kappa);
    put(os, h.scheme);
    put(os, h.seed);
}

SnapshotHeader get_header(std::istream& is) {
    SnapshotHeader h;
    h.version = get<std::uint32_t>(is);
    if (h.version != 1) throw SnapshotFormatError("unsupported version");
    h.M = get<std::uint32_t>(is);
    h.L = get<double>(is);
    h.t = get<double>(is);
    h.eps2 = get<double>(is);
    h.A = get<double>(is);
    h.kappa = get<double>(is);
    h.scheme = get<std::uint32_t>(is);
    h.seed = get<std::uint64_t>(is);
    if (h.M < 4 || h.M % 2 != 0 || !(h.L > 0.0))
        throw SnapshotFormatError("invalid grid in header");
    return h;
}

void check_magic(std::istream& is, const char (&magic)[8], const char* what) {
    char buf[8];
    is.read(buf, 8);
    if (!is || std::memcmp(buf, magic, 8) != 0)
        throw SnapshotFormatError(std::string("not a ") + what + " file");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open '" + path + "'");
    return is;
}

}  // namespace

void write_snapshot(const Snapshot& snap, const std::string& path) {
    if (static_cast<std::uint32_t>(snap.u.grid.points) != snap.header.M)
        throw SnapshotFormatError("header M does not match field size");
    auto os = open_out(path);
    os.write(kSnapMagic, 8);
    put_header(os, snap.header);
    const size_t bytes = snap.u.values.size() * sizeof(double);
    put(os, fnv1a(snap.u.values.data(), bytes));
    os.write(reinterpret_cast<const char*>(snap.u.values.data()),
             static_cast<std::streamsize>(bytes));
    if (!os) throw IoError("write failed for '" + path + "'");
}

Snapshot read_snapshot(const std::string& path) {
    auto is = open_in(path);
    check_magic(is, kSnapMagic, "snapshot");
    Snapshot snap;
    snap.header = get_header(is);
    const std::uint64_t checksum = get<std::uint64_t>(is);
    const GridSpec grid = GridSpec::make(snap.header.L, static_cast<int>(snap.header.M));
    snap.u = Field(grid);
    const size_t bytes = snap.u.values.size() * sizeof(double);
    is.read(reinterpret_cast<char*>(snap.u.values.data()), static_cast<std::streamsize>(bytes));
    if (!is) throw SnapshotFormatError("truncated payload in '" + path + "'");
    if (fnv1a(snap.u.values.data(), bytes) != checksum)
        throw SnapshotFormatError("checksum mismatch in '" + path + "'");
    return snap;
}

void write_checkpoint(const Checkpoint& ck, const std::string& path) {
    if (static_cast<std::uint32_t>(ck.state.u_hat.grid.points) != ck.header.M)
        throw SnapshotFormatError("header M does not match state size");
    auto os = open_out(path);
    os.write(kCkptMagic, 8);
    put_header(os, ck.header);
    const size_t bytes = ck.state.u_hat.coeffs.size() * sizeof(std::complex<double>);
    put(os, fnv1a(ck.state.u_hat.coeffs.data(), bytes));
    os.write(reinterpret_cast<const char*>(ck.state.u_hat.coeffs.data()),
             static_cast<std::streamsize>(bytes));
    const std::uint8_t has_history = ck.state.src_prev ? 1 : 0;
    put(os, has_history);
    if (has_history)
        os.write(reinterpret_cast<const char*>(ck.state.src_prev->coeffs.data()),
                 static_cast<std::streamsize>(bytes));
    put(os, static_cast<std::uint64_t>(ck.state.step_index));
    put(os, static_cast<std::uint32_t>(ck.state.segment_index));
    put(os, static_cast<std::uint64_t>(ck.state.steps_done_in_segment));
    if (!os) throw IoError("write failed for '" + path + "'");
}

Checkpoint read_checkpoint(const std::string& path) {
    auto is = open_in(path);
    check_magic(is, kCkptMagic, "checkpoint");
    Checkpoint ck;
    ck.header = get_header(is);
    const std::uint64_t checksum = get<std::uint64_t>(is);
    const GridSpec grid = GridSpec::make(ck.header.L, static_cast<int>(ck.header.M));
    ck.state.u_hat = SpectralField(grid);
    const size_t bytes = ck.state.u_hat.coeffs.size() * sizeof(std::complex<double>);
    is.read(reinterpret_cast<char*>(ck.state.u_hat.coeffs.data()),
            static_cast<std::streamsize>(bytes));
    if (!is) throw SnapshotFormatError("truncated state in '" + path + "'");
    if (fnv1a(ck.state.u_hat.coeffs.data(), bytes) != checksum)
        throw SnapshotFormatError("checksum mismatch in '" + path + "'");
    if (get<std::uint8_t>(is)) {
        ck.state.src_prev = SpectralField(grid);
        is.read(reinterpret_cast<char*>(ck.state.src_prev->coeffs.data()),
                static_cast<std::streamsize>(bytes));
        if (!is) throw SnapshotFormatError("truncated history in '" + path + "'");
    }
    ck.state.step_index = static_cast<long>(get<std::uint64_t>(is));
    ck.state.segment_index = get<std::uint32_t>(is);
    ck.state.steps_done_in_segment = static_cast<long>(get<std::uint64_t>(is));
    ck.state.t = ck.header.t;
    return ck;
}

}  // namespace nss
