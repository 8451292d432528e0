#ifndef XRPNDN_NDN_NAME_HPP
#define XRPNDN_NDN_NAME_HPP

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xrpndn::ndn {

/**
 * \brief Hierarchical NDN name, e.g. /xrpl/A/val/7.
 *
 * A name always has at least one component and no component is empty or
 * contains '/'. Ordering is component-wise lexicographic, which is also the
 * tie-break order used by the Content Store.
 */
class Name
{
public:
  class Error : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  Name(std::initializer_list<std::string> components);

  explicit
  Name(std::vector<std::string> components);

  /// Parses "/a/b/c". Throws Name::Error on "", "/", or empty components.
  static Name
  fromUri(std::string_view uri);

  Name&
  append(std::string component);

  [[nodiscard]] Name
  getPrefix(std::size_t nComponents) const;

  [[nodiscard]] bool
  isPrefixOf(const Name& other) const;

  [[nodiscard]] std::size_t
  size() const noexcept
  {
    return m_components.size();
  }

  [[nodiscard]] const std::string&
  at(std::size_t i) const
  {
    return m_components.at(i);
  }

  [[nodiscard]] const std::vector<std::string>&
  components() const noexcept
  {
    return m_components;
  }

  [[nodiscard]] std::string
  toUri() const;

  friend auto operator<=>(const Name&, const Name&) = default;
  friend bool operator==(const Name&, const Name&) = default;

private:
  static void
  checkComponent(const std::string& c);

private:
  std::vector<std::string> m_components;
};

std::ostream&
operator<<(std::ostream& os, const Name& name);

} // namespace xrpndn::ndn

#endif // XRPNDN_NDN_NAME_HPP
