#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "noodle/errors.hpp"

namespace noodle {

/// FNV-1a 64-bit over bytes. Used for reproducibility audit hashes in reports,
/// not for anything security-sensitive.
inline std::uint64_t fnv1a64(std::string_view bytes)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : bytes) {
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	return h;
}

inline std::string hash_hex(std::uint64_t h)
{
	static const char *digits = "0123456789abcdef";
	std::string out(16, '0');
	for (int i = 15; i >= 0; --i) {
		out[i] = digits[h & 0xf];
		h >>= 4;
	}
	return out;
}

inline std::string hash_string(std::string_view bytes) { return hash_hex(fnv1a64(bytes)); }

inline std::string hash_file(const std::filesystem::path &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw FormatError("cannot open file for hashing: " + path.string());
	std::ostringstream ss;
	ss << in.rdbuf();
	return hash_string(ss.str());
}

} // namespace noodle
