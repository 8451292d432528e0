#include "xrpndn/metrics/encoding.hpp"

namespace xrpndn::metrics {

std::uint64_t
EncodingModel::nameSize(const ndn::Name& name) const
{
  std::uint64_t total = 0;
  for (const auto& c : name.components()) {
    total += c.size() + componentOverhead;
  }
  return total;
}

std::uint64_t
EncodingModel::interestSize(const ndn::Interest& interest) const
{
  std::uint64_t params = interest.hasAppParameters() ? interest.getAppParameters()->size() : 0;
  return interestOverhead + nameSize(interest.getName()) + params;
}

std::uint64_t
EncodingModel::dataSize(const ndn::Data& data) const
{
  return dataOverhead + nameSize(data.getName()) + data.getContent().size();
}

std::uint64_t
EncodingModel::peerMessageSize(const xrpl::Validation& val) const
{
  return peerMessageOverhead + val.payloadSize;
}

} // namespace xrpndn::metrics
