#pragma once

#include <cstdint>
#include <sstream>
#include <string>

namespace dgl {

// Formats with enough digits to round-trip, no locale surprises.
std::string format_double(double v);

// Buffers rows in memory and writes atomically (temp file + rename) on
// commit, so a failed run never leaves a partial report behind.
class CsvWriter {
public:
    explicit CsvWriter(std::string path) : path_(std::move(path)) {}
    void row(const std::string& line) { buf_ << line << '\n'; }
    void commit();

private:
    std::string path_;
    std::ostringstream buf_;
};

void write_file_atomic(const std::string& path, const std::string& content);

// CRC32 of a file's contents, hex-encoded. Used by run manifests.
std::string file_checksum(const std::string& path);

}  // namespace dgl
