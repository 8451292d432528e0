#ifndef XRPNDN_NDN_PACKET_HPP
#define XRPNDN_NDN_PACKET_HPP

#include "xrpndn/common.hpp"
#include "xrpndn/ndn/name.hpp"

#include <optional>
#include <string>

namespace xrpndn::ndn {

/// Default Interest lifetime; long enough to cover one ledger interval.
constexpr Duration DEFAULT_INTEREST_LIFETIME = std::chrono::milliseconds(4000);

/**
 * \brief Interest packet.
 *
 * appParameters, when present, carries an application payload (used by the
 * piggyback model to ship a whole validation inside the Interest).
 */
class Interest
{
public:
  Interest(Name name, Nonce nonce, Duration lifetime = DEFAULT_INTEREST_LIFETIME,
           std::optional<Bytes> appParameters = std::nullopt);

  const Name&
  getName() const noexcept
  {
    return m_name;
  }

  Nonce
  getNonce() const noexcept
  {
    return m_nonce;
  }

  Duration
  getLifetime() const noexcept
  {
    return m_lifetime;
  }

  const std::optional<Bytes>&
  getAppParameters() const noexcept
  {
    return m_appParameters;
  }

  bool
  hasAppParameters() const noexcept
  {
    return m_appParameters.has_value();
  }

private:
  Name m_name;
  Nonce m_nonce;
  Duration m_lifetime;
  std::optional<Bytes> m_appParameters;
};

/// Data packet. The producer id stands in for the producer signature.
class Data
{
public:
  Data(Name name, Bytes content, Duration freshness, std::string producerId);

  const Name&
  getName() const noexcept
  {
    return m_name;
  }

  const Bytes&
  getContent() const noexcept
  {
    return m_content;
  }

  Duration
  getFreshness() const noexcept
  {
    return m_freshness;
  }

  const std::string&
  getProducerId() const noexcept
  {
    return m_producerId;
  }

private:
  Name m_name;
  Bytes m_content;
  Duration m_freshness;
  std::string m_producerId;
};

} // namespace xrpndn::ndn

#endif // XRPNDN_NDN_PACKET_HPP
