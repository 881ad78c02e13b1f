#pragma once

#include <string>

#include "pamcpp/solver.hpp"

namespace pamcpp {

// Instance documents (.pamcpp.json). Parsing throws ParseError on malformed
// input and ValidationError on the first violated invariant; serialization is
// canonical so equal instances serialize to identical bytes.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

// FNV-1a over the canonical serialization, as a hex string.
std::string instance_digest(const Instance& instance);

// Plan and report documents. Plans carry zone ids; parsing maps them back to
// zone indices of the given instance.
std::string serialize_plan(const FullPlan& plan, const Instance& instance);
FullPlan parse_plan(const std::string& text, const Instance& instance);

std::string serialize_metrics(const Metrics& metrics);
std::string serialize_report(const SolveResult& result, const Instance& instance);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pamcpp
