#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace spatter {

/// Shortest decimal form that round-trips a double (17 significant digits).
std::string fmt_g17(double v);

/// Write bytes atomically: temp file in the target directory, then rename.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string read_text_file(const std::filesystem::path& path);

/// Raw little-endian float32 array I/O (bundle field payloads, labels).
void write_f32(const std::filesystem::path& path, const std::vector<float>& data);
std::vector<float> read_f32(const std::filesystem::path& path);
void write_u32(const std::filesystem::path& path, const std::vector<std::uint32_t>& data);
std::vector<std::uint32_t> read_u32(const std::filesystem::path& path);

/// Minimal CSV support: comma-separated, no quoting (all artifact files are
/// numeric plus fixed enum strings).
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Strict double parse; throws DataError naming line `line_no` on failure.
double parse_double(const std::string& s, const std::string& context, std::size_t line_no);

}  // namespace spatter
