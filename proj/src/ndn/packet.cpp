#include "xrpndn/ndn/packet.hpp"

#include <stdexcept>

namespace xrpndn::ndn {

Interest::Interest(Name name, Nonce nonce, Duration lifetime, std::optional<Bytes> appParameters)
  : m_name(std::move(name))
  , m_nonce(nonce)
  , m_lifetime(lifetime)
  , m_appParameters(std::move(appParameters))
{
  if (m_lifetime <= Duration::zero()) {
    throw std::invalid_argument("Interest lifetime must be positive");
  }
  if (m_appParameters && m_appParameters->empty()) {
    throw std::invalid_argument("Interest appParameters, when present, must be non-empty");
  }
}

Data::Data(Name name, Bytes content, Duration freshness, std::string producerId)
  : m_name(std::move(name))
  , m_content(std::move(content))
  , m_freshness(freshness)
  , m_producerId(std::move(producerId))
{
  if (m_content.empty()) {
    throw std::invalid_argument("Data content must be non-empty");
  }
  if (m_freshness < Duration::zero()) {
    throw std::invalid_argument("Data freshness must be non-negative");
  }
}

} // namespace xrpndn::ndn
