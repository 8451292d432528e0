#ifndef XRPNDN_MODEL_NAMES_HPP
#define XRPNDN_MODEL_NAMES_HPP

#include "xrpndn/ndn/name.hpp"
#include "xrpndn/common.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace xrpndn::model {

enum class ModelKind {
  Baseline,
  Polling,
  AnnouncePull,
  AdvanceRequest,
  Piggyback,
};

std::string_view
toString(ModelKind kind);

/// Accepts the names printed by toString (case-sensitive). Throws std::invalid_argument.
ModelKind
parseModelKind(std::string_view text);

enum class NameKind {
  LatestSeq,  ///< /xrpl/<producer>/latest
  Validation, ///< /xrpl/<producer>/val/<seq>
  Announce,   ///< /xrpl/announce/<producer>/<seq>
  Piggyback,  ///< /xrpl/piggyback, shared by all producers
};

/**
 * Builds the name for \p kind. Throws std::invalid_argument when \p seq or
 * \p producer is missing where the scheme needs it.
 */
ndn::Name
makeName(NameKind kind, std::string_view producer = {}, std::optional<LedgerSeq> seq = std::nullopt);

/// /xrpl/<producer>: everything served by one producer.
ndn::Name
producerPrefix(std::string_view producer);

/// /xrpl/announce: multicast prefix of announce Interests.
ndn::Name
announcePrefix();

struct ParsedName
{
  NameKind kind;
  std::string producer;
  std::optional<LedgerSeq> seq;
};

/// Inverse of makeName(); nullopt for names outside the scheme.
std::optional<ParsedName>
parseName(const ndn::Name& name);

} // namespace xrpndn::model

#endif // XRPNDN_MODEL_NAMES_HPP
