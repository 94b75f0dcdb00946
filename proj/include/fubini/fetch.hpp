#pragma once

// Optional HTTPS download of OEIS b-files. Off unless the caller sets
// FetchConfig::network; the default test suite never touches the network.
//
// Link with OpenSSL (the fubini::fetch CMake target does this).

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif

#include <chrono>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "httplib.h"

#include "fubini/bfile.hpp"
#include "fubini/oeis.hpp"

namespace fubini {

class OfflineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FetchConfig {
    bool network = false;
    std::filesystem::path cache_dir;  // empty: do not cache
    std::chrono::seconds timeout{30};
    std::string host = "oeis.org";
};

/// Path of the b-file below https://<host>/, e.g. "/A000670/b000670.txt".
inline std::string bfile_url_path(std::string_view id) {
    return "/" + std::string(id) + "/" + oeis::bfile_name(id);
}

/// Write-temp-then-rename so readers never see a partial file.
inline void write_atomically(const std::filesystem::path& target, std::string_view contents) {
    std::filesystem::create_directories(target.parent_path());
    std::filesystem::path temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + temp.string());
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) {
            throw std::runtime_error("short write to " + temp.string());
        }
    }
    std::filesystem::rename(temp, target);
}

inline BFile fetch_bfile(std::string_view id, const FetchConfig& config) {
    if (!is_valid_sequence_id(id)) {
        throw std::invalid_argument("invalid OEIS id '" + std::string(id) + "' (expected A + 6 digits)");
    }
    if (!config.network) {
        throw OfflineError("offline mode: network access is disabled");
    }

    httplib::SSLClient client(config.host);
    client.set_connection_timeout(config.timeout);
    client.set_read_timeout(config.timeout);
    client.set_follow_location(true);

    const std::string path = bfile_url_path(id);
    auto response = client.Get(path);
    if (!response) {
        throw TransportError("GET https://" + config.host + path + " failed: " + httplib::to_string(response.error()));
    }
    if (response->status != 200) {
        throw TransportError("GET https://" + config.host + path + " returned HTTP " +
                             std::to_string(response->status));
    }

    BFile file = parse_bfile(response->body, std::string(id));
    if (!config.cache_dir.empty()) {
        write_atomically(config.cache_dir / oeis::bfile_name(id), response->body);
    }
    return file;
}

}  // namespace fubini
