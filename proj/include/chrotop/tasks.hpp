#pragma once

#include <chrotop/complex.hpp>

#include <string>

namespace chrotop {

/// A decision task (I, O, Delta).
struct Task {
    std::string name;
    Complex inputs;
    Complex outputs;
    CarrierMapData delta;

    auto process_count() const -> int { return inputs.process_count(); }
};

/// Process i starts with input i; everybody agrees on a value some
/// participant started with.
auto inputless_consensus(int n) -> Task;

/// Process i starts with input i; at most n-1 distinct values are decided,
/// each the input of a participant.
auto set_agreement(int n) -> Task;

struct TaskReport {
    bool valid = true;
    std::string problem;
    CarrierReport carrier;
};

auto validate_task(const Task & t) -> TaskReport;

}
