#ifndef XRPNDN_METRICS_ENCODING_HPP
#define XRPNDN_METRICS_ENCODING_HPP

#include "xrpndn/ndn/packet.hpp"
#include "xrpndn/xrpl/validation.hpp"

namespace xrpndn::metrics {

/**
 * \brief Byte-size model used for network-load accounting.
 *
 * Sizes are not real TLV encodings: every packet costs a fixed overhead plus
 * its name (each component costs its length + componentOverhead) plus payload.
 */
struct EncodingModel
{
  std::uint64_t interestOverhead = 60;
  std::uint64_t dataOverhead = 60;
  std::uint64_t componentOverhead = 2;
  /// framing of a validation sent directly between XRPL peers (baseline)
  std::uint64_t peerMessageOverhead = 60;

  std::uint64_t
  nameSize(const ndn::Name& name) const;

  std::uint64_t
  interestSize(const ndn::Interest& interest) const;

  std::uint64_t
  dataSize(const ndn::Data& data) const;

  std::uint64_t
  peerMessageSize(const xrpl::Validation& val) const;
};

} // namespace xrpndn::metrics

#endif // XRPNDN_METRICS_ENCODING_HPP
