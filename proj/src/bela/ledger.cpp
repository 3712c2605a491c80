#include "kbest/bela/ledger.hpp"

#include <algorithm>
#include <string>

#include "kbest/core/errors.hpp"

namespace kbest::bela {

bool ClosedEntry::has_gb(Cost gb) const {
  return std::binary_search(gb_values.begin(), gb_values.end(), gb);
}

bool ClosedEntry::insert_gb(Cost gb) {
  auto it = std::lower_bound(gb_values.begin(), gb_values.end(), gb);
  if (it != gb_values.end() && *it == gb) return false;
  gb_values.insert(it, gb);
  return true;
}

ClosedEntry& ClosedLedger::close(StateKey s, Cost g_star) {
  auto [it, inserted] = index_.emplace(s, static_cast<std::uint32_t>(entries_.size()));
  if (!inserted)
    throw InvariantError("state " + std::to_string(s.value()) + " closed twice");
  entries_.push_back(ClosedEntry{s, g_star, {}, {}});
  return entries_.back();
}

ClosedEntry* ClosedLedger::find(StateKey s) {
  auto it = index_.find(s);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const ClosedEntry* ClosedLedger::find(StateKey s) const {
  auto it = index_.find(s);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

ClosedEntry& ClosedLedger::at(StateKey s) {
  if (ClosedEntry* e = find(s)) return *e;
  throw PreconditionError("state " + std::to_string(s.value()) + " is not closed");
}

const ClosedEntry& ClosedLedger::at(StateKey s) const {
  if (const ClosedEntry* e = find(s)) return *e;
  throw PreconditionError("state " + std::to_string(s.value()) + " is not closed");
}

bool ClosedLedger::is_sidetrack(const EdgeRef& e) const {
  return at(e.target).g_star < at(e.source).g_star + e.weight;
}

}  // namespace kbest::bela
