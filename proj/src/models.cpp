#include <chrotop/error.hpp>
#include <chrotop/models.hpp>

#include <algorithm>

namespace chrotop {

auto ExecutionWord::at(std::size_t i) const -> const Schedule &
{
    if (i < stem.size())
        return stem[i];
    return cycle[(i - stem.size()) % cycle.size()];
}

auto normalize(const ExecutionWord & w) -> ExecutionWord
{
    if (w.cycle.empty())
        throw Error(ErrorCode::ParseError, "execution word needs a nonempty cycle");
    ExecutionWord out = w;

    auto len = out.cycle.size();
    for (std::size_t period = 1; period <= len; ++period) {
        if (len % period)
            continue;
        bool repeats = true;
        for (std::size_t i = period; i < len && repeats; ++i)
            repeats = out.cycle[i] == out.cycle[i - period];
        if (repeats) {
            out.cycle.resize(period);
            break;
        }
    }
    while (! out.stem.empty() && out.stem.back() == out.cycle.back()) {
        out.stem.pop_back();
        std::rotate(out.cycle.rbegin(), out.cycle.rbegin() + 1, out.cycle.rend());
    }
    return out;
}

auto to_display(const ExecutionWord & w) -> std::string
{
    std::string out = to_display(w.stem);
    if (! out.empty())
        out += ",";
    return out + "(" + to_display(w.cycle) + ")^w";
}

ModelSpec::ModelSpec(int n, std::string name, ModelKind kind, std::vector<Schedule> first_rounds,
    std::vector<Word> stems, std::vector<ExecutionWord> excluded) :
    n_(n),
    name_(std::move(name)),
    kind_(kind),
    first_rounds_(std::move(first_rounds)),
    stems_(std::move(stems)),
    excluded_(std::move(excluded)),
    alphabet_(enumerate_round_schedules(n))
{
    std::sort(first_rounds_.begin(), first_rounds_.end());
    if (kind_ == ModelKind::FirstRoundRestricted && first_rounds_.empty())
        throw Error(ErrorCode::ParseError, "first-round restricted model needs allowed first rounds");
    if (kind_ == ModelKind::Custom && stems_.empty())
        throw Error(ErrorCode::ParseError, "custom model needs allowed stems");
    for (auto & w : excluded_)
        w = normalize(w);
}

auto ModelSpec::allowed_prefix(const Word & w) const -> bool
{
    switch (kind_) {
    case ModelKind::Iis:
        return true;
    case ModelKind::FirstRoundRestricted:
        return w.empty() || std::binary_search(first_rounds_.begin(), first_rounds_.end(), w.front());
    case ModelKind::Custom:
        return std::any_of(stems_.begin(), stems_.end(), [&](const Word & stem) {
            auto common = std::min(stem.size(), w.size());
            return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(common), stem.begin());
        });
    }
    return false;
}

auto ModelSpec::saturation_depth() const -> int
{
    switch (kind_) {
    case ModelKind::Iis:
        return 0;
    case ModelKind::FirstRoundRestricted:
        return 1;
    case ModelKind::Custom: {
        std::size_t longest = 0;
        for (auto & s : stems_)
            longest = std::max(longest, s.size());
        return static_cast<int>(longest);
    }
    }
    return 0;
}

auto iis_model(int n) -> ModelSpec
{
    return ModelSpec(n, "iis" + std::to_string(n), ModelKind::Iis);
}

auto m1_model() -> ModelSpec
{
    return ModelSpec(2, "m1", ModelKind::FirstRoundRestricted, {parse_schedule("<-", 2), parse_schedule("->", 2)});
}

auto m2_model() -> ModelSpec
{
    ExecutionWord e{{parse_schedule("<->", 2)}, {parse_schedule("<-", 2)}};
    return ModelSpec(2, "m2", ModelKind::Iis, {}, {}, {e});
}

auto builtin_model(const std::string & name) -> ModelSpec
{
    if (name == "iis2")
        return iis_model(2);
    if (name == "ll")
        return ModelSpec(2, "ll", ModelKind::Iis);
    if (name == "iis3")
        return iis_model(3);
    if (name == "m1")
        return m1_model();
    if (name == "m2")
        return m2_model();
    throw Error(ErrorCode::ParseError, "unknown model '" + name + "'");
}

namespace {

void grow(const ModelSpec & m, Word & current, int depth, std::vector<Word> & out)
{
    if (static_cast<int>(current.size()) == depth) {
        out.push_back(current);
        return;
    }
    for (auto & s : m.alphabet()) {
        current.push_back(s);
        if (m.allowed_prefix(current))
            grow(m, current, depth, out);
        current.pop_back();
    }
}

}

auto enumerate_prefixes(const ModelSpec & m, int depth) -> std::vector<Word>
{
    std::vector<Word> out;
    if (depth < 0)
        return out;
    Word current;
    grow(m, current, depth, out);
    return out;
}

auto is_excluded_limit(const ModelSpec & m, const ExecutionWord & w) -> bool
{
    auto norm = normalize(w);
    return std::find(m.excluded().begin(), m.excluded().end(), norm) != m.excluded().end();
}

auto is_model_execution(const ModelSpec & m, const ExecutionWord & w) -> bool
{
    auto horizon = w.stem.size() + w.cycle.size() + static_cast<std::size_t>(m.saturation_depth());
    Word prefix;
    for (std::size_t i = 0; i < horizon; ++i) {
        prefix.push_back(w.at(i));
        if (! m.allowed_prefix(prefix))
            return false;
    }
    return ! is_excluded_limit(m, w);
}

auto validate_model(const ModelSpec & m, int depth) -> std::string
{
    for (int d = 1; d <= depth; ++d)
        for (auto & w : enumerate_prefixes(m, d)) {
            Word shorter(w.begin(), w.end() - 1);
            if (! m.allowed_prefix(shorter))
                return "prefix closure fails at " + to_display(w);
            bool extendable = std::any_of(m.alphabet().begin(), m.alphabet().end(), [&](const Schedule & s) {
                Word next = w;
                next.push_back(s);
                return m.allowed_prefix(next);
            });
            if (! extendable)
                return "no allowed extension of " + to_display(w);
        }
    for (auto & e : m.excluded()) {
        Word prefix;
        for (std::size_t i = 0; i < static_cast<std::size_t>(depth); ++i) {
            prefix.push_back(e.at(i));
            if (! m.allowed_prefix(prefix))
                return "excluded execution " + to_display(e) + " has a disallowed prefix";
        }
    }
    return {};
}

}
