#include "chalk/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "chalk/rng.hpp"

namespace chalk {

namespace {

std::array<unsigned char, 32> sha256_raw(const void* data, size_t len) {
  std::array<unsigned char, 32> out{};
  unsigned int out_len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
  if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data, len) != 1 ||
      EVP_DigestFinal_ex(ctx, out.data(), &out_len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("SHA-256 digest failed");
  }
  EVP_MD_CTX_free(ctx);
  return out;
}

std::string to_hex(const unsigned char* p, size_t n) {
  static const char* digits = "0123456789abcdef";
  std::string s(2 * n, '0');
  for (size_t i = 0; i < n; ++i) {
    s[2 * i] = digits[p[i] >> 4];
    s[2 * i + 1] = digits[p[i] & 0xF];
  }
  return s;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  auto d = sha256_raw(data.data(), data.size());
  return to_hex(d.data(), d.size());
}

std::string sha256_file_hex(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for hashing: " + path.string());
  std::vector<char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto d = sha256_raw(buf.data(), buf.size());
  return to_hex(d.data(), d.size());
}

uint64_t derive_seed(uint64_t master_seed, std::string_view school, uint32_t student_index,
                     std::string_view stage) {
  std::string msg;
  msg.reserve(32 + school.size() + stage.size());
  msg += "chalk-seed/v1";
  msg.push_back('\0');
  for (int i = 0; i < 8; ++i) msg.push_back(static_cast<char>((master_seed >> (8 * i)) & 0xFF));
  msg.append(school);
  msg.push_back('\0');
  for (int i = 0; i < 4; ++i) msg.push_back(static_cast<char>((student_index >> (8 * i)) & 0xFF));
  msg.push_back('\0');
  msg.append(stage);
  auto d = sha256_raw(msg.data(), msg.size());
  uint64_t s = 0;
  for (int i = 0; i < 8; ++i) s |= static_cast<uint64_t>(d[i]) << (8 * i);
  return s;
}

}  // namespace chalk
