#pragma once

#include <chrotop/complex.hpp>

#include <compare>
#include <string>
#include <vector>

namespace chrotop {

/// One immediate-snapshot round: an ordered partition of the participating
/// processes. Processes in block j see everyone in blocks 0..j.
struct Schedule {
    std::vector<std::vector<ProcessId>> blocks;

    auto operator<=>(const Schedule &) const = default;
    auto operator==(const Schedule &) const -> bool = default;

    /// Processes seen by p: the union of blocks up to and including p's.
    auto view_of(ProcessId p) const -> std::vector<ProcessId>;
    auto processes() const -> std::vector<ProcessId>;
};

using Word = std::vector<Schedule>;

/// All ordered partitions of `items` (sorted ascending), fewer blocks first
/// and lexicographic on the block sequence within one block count.
auto ordered_partitions(const std::vector<ProcessId> & items) -> std::vector<Schedule>;

/// Ordered partitions of {0..n-1}; n in 1..5, else Unsupported.
auto enumerate_round_schedules(int n) -> std::vector<Schedule>;

/// "0,1" (one block), "0|1", "1|0"; for two processes "<->" is printed as an
/// alias only by to_display.
auto to_string(const Schedule & s) -> std::string;
auto to_string(const Word & w) -> std::string;

/// Two-process arrows: "<->" both see each other, "->" process 0 alone
/// first (1 receives 0's message), "<-" process 1 alone first.
auto to_display(const Schedule & s) -> std::string;
auto to_display(const Word & w) -> std::string;

/// Accepts the block syntax and, for n = 2, the arrow aliases (ASCII or
/// unicode). Throws ParseError.
auto parse_schedule(const std::string & text, int n) -> Schedule;

/// Comma-separated list of schedules in arrow or bracket form, e.g.
/// "<-,<->" or "[0|1][0,1]". Empty text is the empty word.
auto parse_word(const std::string & text, int n) -> Word;

}
