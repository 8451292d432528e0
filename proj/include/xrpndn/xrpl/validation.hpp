#ifndef XRPNDN_XRPL_VALIDATION_HPP
#define XRPNDN_XRPL_VALIDATION_HPP

#include "xrpndn/common.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>

namespace xrpndn::xrpl {

using LedgerHash = std::array<std::uint8_t, 32>;

/// Typical size of a signed validation on the wire.
constexpr std::uint32_t DEFAULT_VALIDATION_SIZE = 500;

/// Bytes taken by the fixed fields of the encoding of a validation from \p validatorId.
std::size_t
encodedHeaderSize(const std::string& validatorId);

struct Validation
{
  std::string validatorId;
  LedgerSeq ledgerSeq = 0;
  LedgerHash ledgerHash{};
  TimePoint createdAt{};
  std::uint32_t payloadSize = DEFAULT_VALIDATION_SIZE;

  friend bool operator==(const Validation&, const Validation&) = default;
};

/// Honest validators agree on the ledger by construction: the hash is a digest of the sequence.
LedgerHash
ledgerHashFor(LedgerSeq seq);

class DecodeError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/**
 * Serializes into exactly `payloadSize` bytes: a fixed header (id, seq, hash,
 * timestamp) followed by zero padding standing in for the signature fields.
 * Throws std::invalid_argument when the header does not fit.
 */
Bytes
encode(const Validation& v);

Validation
decode(std::span<const std::uint8_t> bytes);

} // namespace xrpndn::xrpl

#endif // XRPNDN_XRPL_VALIDATION_HPP
