#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace suppvar {

// FNV-1a, used for content-addressed cache keys and report stamps.
class Hasher {
public:
    void feed(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h_ ^= (v >> (8 * i)) & 0xff;
            h_ *= 0x100000001b3ull;
        }
    }
    void feed(const std::string& s) {
        for (unsigned char c : s) {
            h_ ^= c;
            h_ *= 0x100000001b3ull;
        }
        feed(std::uint64_t(s.size()));
    }
    template <class T>
    void feed_all(const std::vector<T>& v) {
        for (const auto& x : v) feed(std::uint64_t(x));
        feed(std::uint64_t(v.size()));
    }
    std::uint64_t value() const { return h_; }

private:
    std::uint64_t h_ = 0xcbf29ce484222325ull;
};

std::string hash_hex(std::uint64_t h);

} // namespace suppvar
