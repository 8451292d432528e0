#include "xrpndn/ndn/name.hpp"

#include <algorithm>
#include <ostream>

namespace xrpndn::ndn {

Name::Name(std::initializer_list<std::string> components)
  : Name(std::vector<std::string>(components))
{
}

Name::Name(std::vector<std::string> components)
  : m_components(std::move(components))
{
  if (m_components.empty()) {
    throw Error("a name needs at least one component");
  }
  std::for_each(m_components.begin(), m_components.end(), &Name::checkComponent);
}

Name
Name::fromUri(std::string_view uri)
{
  if (uri.empty() || uri.front() != '/') {
    throw Error("name URI must start with '/': '" + std::string(uri) + "'");
  }
  std::vector<std::string> components;
  std::size_t pos = 1;
  while (pos <= uri.size()) {
    auto next = uri.find('/', pos);
    if (next == std::string_view::npos) {
      next = uri.size();
    }
    components.emplace_back(uri.substr(pos, next - pos));
    pos = next + 1;
  }
  return Name(std::move(components));
}

Name&
Name::append(std::string component)
{
  checkComponent(component);
  m_components.push_back(std::move(component));
  return *this;
}

Name
Name::getPrefix(std::size_t nComponents) const
{
  if (nComponents == 0 || nComponents > m_components.size()) {
    throw Error("prefix length out of range");
  }
  return Name(std::vector<std::string>(m_components.begin(),
                                       m_components.begin() + static_cast<std::ptrdiff_t>(nComponents)));
}

bool
Name::isPrefixOf(const Name& other) const
{
  if (m_components.size() > other.m_components.size()) {
    return false;
  }
  return std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

std::string
Name::toUri() const
{
  std::string uri;
  for (const auto& c : m_components) {
    uri += '/';
    uri += c;
  }
  return uri;
}

void
Name::checkComponent(const std::string& c)
{
  if (c.empty()) {
    throw Error("empty name component");
  }
  if (c.find('/') != std::string::npos) {
    throw Error("name component contains '/': '" + c + "'");
  }
}

std::ostream&
operator<<(std::ostream& os, const Name& name)
{
  return os << name.toUri();
}

} // namespace xrpndn::ndn
