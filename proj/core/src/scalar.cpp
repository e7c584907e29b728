#include "symbreak/scalar.hpp"

namespace symbreak {

namespace {
thread_local std::uint64_t g_events = 0;
}

std::uint64_t guard_events() { return g_events; }
void reset_guard_events() { g_events = 0; }
void note_guard_event() { ++g_events; }

}  // namespace symbreak
