#ifndef XRPNDN_SIM_SCHEDULER_HPP
#define XRPNDN_SIM_SCHEDULER_HPP

#include "xrpndn/common.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

namespace xrpndn::sim {

class SchedulingError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/**
 * \brief Discrete-event queue ordered by (fire time, scheduling order).
 *
 * Events scheduled for the same instant run in the order they were scheduled.
 */
template<typename Payload>
class Scheduler
{
public:
  struct Event
  {
    TimePoint fireAt;
    std::uint64_t seqNo;
    Payload payload;
  };

  void
  schedule(TimePoint fireAt, Payload payload)
  {
    if (fireAt < m_now) {
      throw SchedulingError("event scheduled in the past");
    }
    m_queue.push(Event{fireAt, m_nextSeqNo++, std::move(payload)});
  }

  bool
  empty() const noexcept
  {
    return m_queue.empty();
  }

  const Event&
  peek() const
  {
    return m_queue.top();
  }

  /// Removes the next event and advances the clock to its fire time.
  Event
  pop()
  {
    Event e = std::move(const_cast<Event&>(m_queue.top()));
    m_queue.pop();
    m_now = e.fireAt;
    return e;
  }

  TimePoint
  now() const noexcept
  {
    return m_now;
  }

  std::size_t
  size() const noexcept
  {
    return m_queue.size();
  }

private:
  struct Later
  {
    bool
    operator()(const Event& x, const Event& y) const noexcept
    {
      if (x.fireAt != y.fireAt) {
        return x.fireAt > y.fireAt;
      }
      return x.seqNo > y.seqNo;
    }
  };

private:
  std::priority_queue<Event, std::vector<Event>, Later> m_queue;
  std::uint64_t m_nextSeqNo = 0;
  TimePoint m_now{};
};

} // namespace xrpndn::sim

#endif // XRPNDN_SIM_SCHEDULER_HPP
