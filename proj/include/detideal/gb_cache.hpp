#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace detideal {

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

// On-disk store for computed bases.  Files are named by a 64-bit content
// hash of the key text, but the full key is stored and compared on load, so
// a hash collision degrades to a miss instead of returning a wrong basis.
class GbCache {
  public:
    explicit GbCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
    }

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<std::vector<std::string>> load(const std::string& key) const {
        std::ifstream in(path_for(key), std::ios::binary);
        if (!in) return std::nullopt;
        std::string header;
        std::size_t keylen = 0, count = 0;
        if (!(in >> header >> keylen) || header != "detideal-gbc-1") return std::nullopt;
        in.get();
        std::string stored(keylen, '\0');
        in.read(stored.data(), static_cast<std::streamsize>(keylen));
        if (!in || stored != key) return std::nullopt;
        if (!(in >> header >> count) || header != "elements") return std::nullopt;
        in.get();
        std::vector<std::string> elems;
        elems.reserve(count);
        std::string line;
        for (std::size_t i = 0; i < count; ++i) {
            if (!std::getline(in, line)) return std::nullopt;
            elems.push_back(line);
        }
        return elems;
    }

    void store(const std::string& key, const std::vector<std::string>& elems) const {
        std::filesystem::path target = path_for(key);
        std::filesystem::path tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) return;
            out << "detideal-gbc-1 " << key.size() << "\n" << key;
            out << "elements " << elems.size() << "\n";
            for (const auto& e : elems) out << e << "\n";
            if (!out) return;
        }
        // Rename is atomic within the directory, so readers never see a
        // half-written entry.
        std::error_code ec;
        std::filesystem::rename(tmp, target, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }

  private:
    std::filesystem::path path_for(const std::string& key) const {
        return dir_ / (fnv1a64_hex(key) + ".gbc");
    }

    std::filesystem::path dir_;
};

}  // namespace detideal
