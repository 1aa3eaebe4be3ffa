#pragma once

#include <string>
#include <vector>

#include "ssm/college.hpp"
#include "ssm/core.hpp"

namespace ssm::fixtures {

// Bundled desk-scale case studies. Case ids are the stable CLI vocabulary for
// `repro`; each bundles a sincere profile and the manipulated variants its
// scripted checks exercise.
std::vector<std::string> case_ids();
bool has_case(const std::string& case_id);

// Raw instance text for a (case, role) pair; throws on unknown pairs.
const std::string& text(const std::string& case_id, const std::string& role);
std::vector<std::string> roles(const std::string& case_id);

Profile profile(const std::string& case_id, const std::string& role);
CollegeInstance college(const std::string& case_id, const std::string& role);

// FNV-1a digest over every bundled text, frozen in the test suite so fixture
// edits are deliberate.
std::uint64_t corpus_digest();

}  // namespace ssm::fixtures
