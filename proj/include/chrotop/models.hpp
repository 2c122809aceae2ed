#pragma once

#include <chrotop/schedule.hpp>

#include <string>
#include <vector>

namespace chrotop {

/// The eventually periodic execution stem . cycle^omega.
struct ExecutionWord {
    Word stem;
    Word cycle;

    auto operator==(const ExecutionWord &) const -> bool = default;

    /// Letter at round i (0-based).
    auto at(std::size_t i) const -> const Schedule &;
};

/// Primitive cycle, with the stem rolled back as far as the cycle allows, so
/// equal infinite words have equal normal forms.
auto normalize(const ExecutionWord & w) -> ExecutionWord;
auto to_display(const ExecutionWord & w) -> std::string;

enum class ModelKind { Iis, FirstRoundRestricted, Custom };

/// A sub-IIS model: a prefix-closed language of allowed schedule words minus
/// finitely many eventually periodic limit executions.
///
/// For Custom models a word is allowed iff it is a prefix of some allowed
/// stem or extends one; all extensions of a word of length
/// saturation_depth() are allowed.
class ModelSpec {
public:
    ModelSpec(int n, std::string name, ModelKind kind, std::vector<Schedule> first_rounds = {},
        std::vector<Word> stems = {}, std::vector<ExecutionWord> excluded = {});

    auto process_count() const -> int { return n_; }
    auto name() const -> const std::string & { return name_; }
    auto kind() const -> ModelKind { return kind_; }
    auto first_rounds() const -> const std::vector<Schedule> & { return first_rounds_; }
    auto stems() const -> const std::vector<Word> & { return stems_; }
    auto excluded() const -> const std::vector<ExecutionWord> & { return excluded_; }
    auto alphabet() const -> const std::vector<Schedule> & { return alphabet_; }

    auto allowed_prefix(const Word & w) const -> bool;
    auto saturation_depth() const -> int;

private:
    int n_;
    std::string name_;
    ModelKind kind_;
    std::vector<Schedule> first_rounds_;
    std::vector<Word> stems_;
    std::vector<ExecutionWord> excluded_;
    std::vector<Schedule> alphabet_;
};

auto iis_model(int n) -> ModelSpec;

/// First round restricted to {<-, ->}: one process is heard by the other.
auto m1_model() -> ModelSpec;

/// Two-process IIS without the single execution <->,<-,<-,...
auto m2_model() -> ModelSpec;

/// iis2, iis3, ll (same as iis2), m1, m2. ParseError for other names.
auto builtin_model(const std::string & name) -> ModelSpec;

/// All allowed words of exactly `depth` rounds in canonical order.
auto enumerate_prefixes(const ModelSpec & m, int depth) -> std::vector<Word>;

auto is_excluded_limit(const ModelSpec & m, const ExecutionWord & w) -> bool;

/// True iff every prefix of w (up to where it becomes periodic past the
/// saturation depth) is allowed and w is not excluded.
auto is_model_execution(const ModelSpec & m, const ExecutionWord & w) -> bool;

/// Prefix closure, extendability and allowed prefixes of excluded words,
/// checked to `depth`. Returns a description of the first failure, or empty.
auto validate_model(const ModelSpec & m, int depth) -> std::string;

}
