#pragma once

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "osbf/bench.hpp"
#include "osbf/core.hpp"

namespace osbf {

/// Malformed input; `offset` is the byte position the parser stopped at.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t offset)
        : std::runtime_error(message + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw std::runtime_error("read failed: " + path);
    return data;
}

/// Write-temp-then-rename so readers never observe a partial file.
inline void write_file_atomic(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open file for writing: " + tmp);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out)
            throw std::runtime_error("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Whitespace/comment-aware token scanner over netpbm-style headers.
class HeaderScanner {
public:
    HeaderScanner(const std::string& data, size_t pos) : data_(data), pos_(pos) {}

    size_t pos() const { return pos_; }

    void skip_space_and_comments() {
        while (pos_ < data_.size()) {
            if (is_space(data_[pos_])) {
                ++pos_;
            } else if (data_[pos_] == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n')
                    ++pos_;
            } else {
                break;
            }
        }
    }

    long next_uint(const char* what) {
        skip_space_and_comments();
        const size_t start = pos_;
        while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError(std::string("expected ") + what, start);
        long value = 0;
        auto res = std::from_chars(data_.data() + start, data_.data() + pos_, value);
        if (res.ec != std::errc())
            throw ParseError(std::string("unparsable ") + what, start);
        return value;
    }

    // The single whitespace byte separating a binary header from its payload.
    void expect_single_space(const char* what) {
        if (pos_ >= data_.size() || !is_space(data_[pos_]))
            throw ParseError(std::string("expected whitespace before ") + what, pos_);
        ++pos_;
    }

private:
    const std::string& data_;
    size_t pos_;
};

inline int quantize(double v, int maxval) {
    const double q = std::floor(v + 0.5);  // round half up
    if (!(q > 0.0))                        // negatives and NaN clamp to 0
        return 0;
    if (q > maxval)
        return maxval;
    return static_cast<int>(q);
}

}  // namespace detail

/// Reads a PGM (P2/P5) or PPM (P3/P6) image; samples are promoted to real.
/// Comments are tolerated anywhere in the header. If maxval_out is non-null
/// it receives the file's maxval.
inline MultiChannelImage read_image(const std::string& path, int* maxval_out = nullptr) {
    const std::string data = detail::read_file(path);
    if (data.size() < 2 || data[0] != 'P')
        throw ParseError("unknown magic, expected P2/P3/P5/P6", 0);
    const char kind = data[1];
    if (kind != '2' && kind != '3' && kind != '5' && kind != '6')
        throw ParseError("unknown magic, expected P2/P3/P5/P6", 0);
    const bool binary = kind == '5' || kind == '6';
    const int channels = (kind == '3' || kind == '6') ? 3 : 1;

    detail::HeaderScanner scan(data, 2);
    const long width = scan.next_uint("width");
    const long height = scan.next_uint("height");
    if (width < 1 || height < 1)
        throw ParseError("image dimensions must be >= 1", scan.pos());
    const long maxval = scan.next_uint("maxval");
    if (maxval < 1 || maxval > 65535)
        throw ParseError("maxval out of range [1, 65535]", scan.pos());
    if (maxval_out)
        *maxval_out = static_cast<int>(maxval);

    std::vector<ImagePlane> planes;
    planes.reserve(channels);
    for (int c = 0; c < channels; ++c)
        planes.emplace_back(static_cast<int>(width), static_cast<int>(height));

    const size_t count = static_cast<size_t>(width) * height;
    if (binary) {
        scan.expect_single_space("payload");
        const size_t bytes_per = maxval < 256 ? 1 : 2;
        const size_t need = count * channels * bytes_per;
        if (data.size() - scan.pos() < need)
            throw ParseError("truncated payload: expected " + std::to_string(need) +
                                 " bytes, got " + std::to_string(data.size() - scan.pos()),
                             scan.pos());
        const unsigned char* p = reinterpret_cast<const unsigned char*>(data.data()) + scan.pos();
        for (size_t i = 0; i < count; ++i)
            for (int c = 0; c < channels; ++c) {
                unsigned value;
                if (bytes_per == 1) {
                    value = *p++;
                } else {
                    value = static_cast<unsigned>(p[0]) << 8 | p[1];  // big-endian
                    p += 2;
                }
                if (value > static_cast<unsigned>(maxval))
                    throw ParseError("sample exceeds maxval", scan.pos());
                planes[c].samples()[i] = static_cast<double>(value);
            }
    } else {
        for (size_t i = 0; i < count; ++i)
            for (int c = 0; c < channels; ++c) {
                const size_t at = scan.pos();
                const long value = scan.next_uint("sample");
                if (value > maxval)
                    throw ParseError("sample exceeds maxval", at);
                planes[c].samples()[i] = static_cast<double>(value);
            }
    }
    return MultiChannelImage(std::move(planes));
}

/// Writes P5 (1 channel) or P6 (3 channels) at 8 or 16 bits. Samples are
/// rounded half up and clamped to [0, maxval]; 16-bit payloads are
/// big-endian per the netpbm specification. The write is atomic.
inline void write_image(const MultiChannelImage& img, const std::string& path,
                        int bit_depth = 8) {
    if (bit_depth != 8 && bit_depth != 16)
        throw std::invalid_argument("write_image: bit depth must be 8 or 16");
    const int channels = img.channel_count();
    if (channels != 1 && channels != 3)
        throw std::invalid_argument("write_image: only 1- or 3-channel images can be saved");
    const int maxval = bit_depth == 8 ? 255 : 65535;
    const char* magic = channels == 1 ? "P5" : "P6";

    std::string out;
    out += magic;
    out += '\n';
    out += std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n";
    out += std::to_string(maxval) + "\n";

    const size_t count = static_cast<size_t>(img.width()) * img.height();
    for (size_t i = 0; i < count; ++i)
        for (int c = 0; c < channels; ++c) {
            const int q = detail::quantize(img.channel(c).samples()[i], maxval);
            if (bit_depth == 8) {
                out += static_cast<char>(q);
            } else {
                out += static_cast<char>(q >> 8);
                out += static_cast<char>(q & 0xff);
            }
        }
    detail::write_file_atomic(path, out);
}

inline void write_image(const ImagePlane& plane, const std::string& path, int bit_depth = 8) {
    write_image(MultiChannelImage({plane}), path, bit_depth);
}

/// Raw float volume container: "VOL1\n<w> <h> <d>\n" followed by
/// width*height*depth IEEE-754 float32 little-endian samples, x-fastest.
inline Volume read_volume(const std::string& path) {
    const std::string data = detail::read_file(path);
    if (data.size() < 5 || data.compare(0, 5, "VOL1\n") != 0)
        throw ParseError("bad magic, expected VOL1", 0);
    detail::HeaderScanner scan(data, 5);
    const long w = scan.next_uint("width");
    const long h = scan.next_uint("height");
    const long d = scan.next_uint("depth");
    if (w < 1 || h < 1 || d < 1)
        throw ParseError("volume extents must be >= 1", scan.pos());
    scan.expect_single_space("payload");

    const size_t count = static_cast<size_t>(w) * h * d;
    const size_t need = count * 4;
    const size_t have = data.size() - scan.pos();
    if (have != need)
        throw ParseError("payload size mismatch: expected " + std::to_string(need) +
                             " bytes, got " + std::to_string(have),
                         scan.pos());
    Volume vol(static_cast<int>(w), static_cast<int>(h), static_cast<int>(d));
    const unsigned char* p = reinterpret_cast<const unsigned char*>(data.data()) + scan.pos();
    for (size_t i = 0; i < count; ++i) {
        const std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                                   static_cast<std::uint32_t>(p[1]) << 8 |
                                   static_cast<std::uint32_t>(p[2]) << 16 |
                                   static_cast<std::uint32_t>(p[3]) << 24;
        vol.samples()[i] = static_cast<double>(std::bit_cast<float>(bits));
        p += 4;
    }
    return vol;
}

inline void write_volume(const Volume& vol, const std::string& path) {
    std::string out = "VOL1\n";
    out += std::to_string(vol.width()) + " " + std::to_string(vol.height()) + " " +
           std::to_string(vol.depth()) + "\n";
    out.reserve(out.size() + vol.size() * 4);
    for (double v : vol.samples()) {
        const std::uint32_t bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
        out += static_cast<char>(bits & 0xff);
        out += static_cast<char>((bits >> 8) & 0xff);
        out += static_cast<char>((bits >> 16) & 0xff);
        out += static_cast<char>((bits >> 24) & 0xff);
    }
    detail::write_file_atomic(path, out);
}

namespace detail {
inline std::string format_seconds(double seconds) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), seconds, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}
}  // namespace detail

/// CSV with the fixed header "filter,width,height,radius,iterations,seconds";
/// seconds carry 9 significant digits, always with a decimal point notation
/// independent of locale.
inline void write_csv(const std::vector<BenchRecord>& rows, const std::string& path) {
    std::string out = "filter,width,height,radius,iterations,seconds\n";
    for (const auto& r : rows) {
        out += r.filter;
        out += ',' + std::to_string(r.width);
        out += ',' + std::to_string(r.height);
        out += ',' + std::to_string(r.radius);
        out += ',' + std::to_string(r.iterations);
        out += ',' + detail::format_seconds(r.seconds);
        out += '\n';
    }
    detail::write_file_atomic(path, out);
}

}  // namespace osbf
