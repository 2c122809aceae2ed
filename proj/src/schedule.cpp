#include <chrotop/error.hpp>
#include <chrotop/schedule.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chrotop {

auto Schedule::view_of(ProcessId p) const -> std::vector<ProcessId>
{
    std::vector<ProcessId> seen;
    for (auto & block : blocks) {
        seen.insert(seen.end(), block.begin(), block.end());
        if (std::find(block.begin(), block.end(), p) != block.end()) {
            std::sort(seen.begin(), seen.end());
            return seen;
        }
    }
    throw Error(ErrorCode::InvalidVertex, "process " + std::to_string(p) + " not scheduled");
}

auto Schedule::processes() const -> std::vector<ProcessId>
{
    std::vector<ProcessId> all;
    for (auto & block : blocks)
        all.insert(all.end(), block.begin(), block.end());
    std::sort(all.begin(), all.end());
    return all;
}

namespace {

void extend_partitions(const std::vector<ProcessId> & remaining, Schedule & current, std::vector<Schedule> & out)
{
    if (remaining.empty()) {
        out.push_back(current);
        return;
    }
    auto count = remaining.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
        std::vector<ProcessId> block, rest;
        for (std::size_t i = 0; i < count; ++i)
            (mask & (std::size_t{1} << i) ? block : rest).push_back(remaining[i]);
        current.blocks.push_back(block);
        extend_partitions(rest, current, out);
        current.blocks.pop_back();
    }
}

}

auto ordered_partitions(const std::vector<ProcessId> & items) -> std::vector<Schedule>
{
    std::vector<Schedule> out;
    Schedule current;
    extend_partitions(items, current, out);
    std::sort(out.begin(), out.end(), [](const Schedule & a, const Schedule & b) {
        if (a.blocks.size() != b.blocks.size())
            return a.blocks.size() < b.blocks.size();
        return a.blocks < b.blocks;
    });
    return out;
}

auto enumerate_round_schedules(int n) -> std::vector<Schedule>
{
    if (n < 1 || n > 5)
        throw Error(ErrorCode::Unsupported, "schedule enumeration supports 1..5 processes, got " + std::to_string(n));
    std::vector<ProcessId> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        all[static_cast<std::size_t>(i)] = i;
    return ordered_partitions(all);
}

auto to_string(const Schedule & s) -> std::string
{
    std::string out;
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
        if (b)
            out += "|";
        for (std::size_t i = 0; i < s.blocks[b].size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(s.blocks[b][i]);
        }
    }
    return out;
}

auto to_string(const Word & w) -> std::string
{
    std::string out;
    for (auto & s : w)
        out += "[" + to_string(s) + "]";
    return out;
}

auto to_display(const Schedule & s) -> std::string
{
    if (s.processes() == std::vector<ProcessId>{0, 1}) {
        if (s.blocks.size() == 1)
            return "<->";
        return s.blocks[0][0] == 0 ? "->" : "<-";
    }
    return "[" + to_string(s) + "]";
}

auto to_display(const Word & w) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ",";
        out += to_display(w[i]);
    }
    return out;
}

auto parse_schedule(const std::string & raw, int n) -> Schedule
{
    std::string text = raw;
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
    if (! text.empty() && text.front() == '[' && text.back() == ']')
        text = text.substr(1, text.size() - 2);

    if (n == 2) {
        if (text == "<->" || text == "↔")
            return Schedule{{{0, 1}}};
        if (text == "->" || text == "→")
            return Schedule{{{0}, {1}}};
        if (text == "<-" || text == "←")
            return Schedule{{{1}, {0}}};
    }

    Schedule s;
    std::stringstream blocks(text);
    std::string block;
    while (std::getline(blocks, block, '|')) {
        std::vector<ProcessId> members;
        std::stringstream items(block);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                std::size_t used = 0;
                int p = std::stoi(item, &used);
                if (used != item.size())
                    throw std::invalid_argument(item);
                members.push_back(p);
            }
            catch (const std::exception &) {
                throw Error(ErrorCode::ParseError, "bad schedule '" + raw + "'");
            }
        }
        if (members.empty())
            throw Error(ErrorCode::ParseError, "empty block in schedule '" + raw + "'");
        std::sort(members.begin(), members.end());
        s.blocks.push_back(members);
    }

    std::vector<ProcessId> expected(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        expected[static_cast<std::size_t>(i)] = i;
    if (s.blocks.empty() || s.processes() != expected)
        throw Error(ErrorCode::ParseError, "schedule '" + raw + "' is not an ordered partition of " + std::to_string(n) + " processes");
    return s;
}

auto parse_word(const std::string & raw, int n) -> Word
{
    Word w;
    std::string text = raw;
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
    if (text.empty())
        return w;

    if (text.front() == '[') {
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto close = text.find(']', pos);
            if (text[pos] != '[' || close == std::string::npos)
                throw Error(ErrorCode::ParseError, "bad word '" + raw + "'");
            w.push_back(parse_schedule(text.substr(pos + 1, close - pos - 1), n));
            pos = close + 1;
            if (pos < text.size() && text[pos] == ',')
                ++pos;
        }
        return w;
    }

    std::stringstream items(text);
    std::string item;
    while (std::getline(items, item, ','))
        w.push_back(parse_schedule(item, n));
    return w;
}

}
