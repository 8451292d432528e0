#include "xrpndn/xrpl/validation.hpp"

#include <algorithm>

namespace xrpndn::xrpl {

namespace {

std::uint64_t
splitmix64(std::uint64_t& state)
{
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void
putU64(Bytes& out, std::uint64_t v)
{
  for (int i = 7; i >= 0; --i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

class Reader
{
public:
  explicit
  Reader(std::span<const std::uint8_t> bytes)
    : m_bytes(bytes)
  {
  }

  std::uint64_t
  u64()
  {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      v = (v << 8) | m_bytes[m_pos++];
    }
    return v;
  }

  std::uint8_t
  u8()
  {
    need(1);
    return m_bytes[m_pos++];
  }

  std::span<const std::uint8_t>
  take(std::size_t n)
  {
    need(n);
    auto s = m_bytes.subspan(m_pos, n);
    m_pos += n;
    return s;
  }

private:
  void
  need(std::size_t n) const
  {
    if (m_pos + n > m_bytes.size()) {
      throw DecodeError("truncated validation");
    }
  }

private:
  std::span<const std::uint8_t> m_bytes;
  std::size_t m_pos = 0;
};

} // namespace

LedgerHash
ledgerHashFor(LedgerSeq seq)
{
  LedgerHash hash{};
  std::uint64_t state = seq;
  for (std::size_t i = 0; i < hash.size(); i += 8) {
    std::uint64_t word = splitmix64(state);
    for (std::size_t j = 0; j < 8; ++j) {
      hash[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
    }
  }
  return hash;
}

std::size_t
encodedHeaderSize(const std::string& validatorId)
{
  // id length, id, seq, hash, timestamp, payload size
  return 1 + validatorId.size() + 8 + 32 + 8 + 8;
}

Bytes
encode(const Validation& v)
{
  if (v.validatorId.empty() || v.validatorId.size() > 255) {
    throw std::invalid_argument("validator id must have 1..255 characters");
  }
  if (encodedHeaderSize(v.validatorId) > v.payloadSize) {
    throw std::invalid_argument("validation payload size " + std::to_string(v.payloadSize) +
                                " too small for the fixed fields");
  }

  Bytes out;
  out.reserve(v.payloadSize);
  out.push_back(static_cast<std::uint8_t>(v.validatorId.size()));
  out.insert(out.end(), v.validatorId.begin(), v.validatorId.end());
  putU64(out, v.ledgerSeq);
  out.insert(out.end(), v.ledgerHash.begin(), v.ledgerHash.end());
  putU64(out, static_cast<std::uint64_t>(v.createdAt.count()));
  putU64(out, v.payloadSize);
  out.resize(v.payloadSize, 0);
  return out;
}

Validation
decode(std::span<const std::uint8_t> bytes)
{
  Reader r(bytes);
  Validation v;
  auto idLen = r.u8();
  if (idLen == 0) {
    throw DecodeError("empty validator id");
  }
  auto id = r.take(idLen);
  v.validatorId.assign(id.begin(), id.end());
  v.ledgerSeq = r.u64();
  auto hash = r.take(v.ledgerHash.size());
  std::copy(hash.begin(), hash.end(), v.ledgerHash.begin());
  v.createdAt = TimePoint(static_cast<TimePoint::rep>(r.u64()));
  auto size = r.u64();
  if (size != bytes.size()) {
    throw DecodeError("validation length mismatch");
  }
  v.payloadSize = static_cast<std::uint32_t>(size);
  return v;
}

} // namespace xrpndn::xrpl
