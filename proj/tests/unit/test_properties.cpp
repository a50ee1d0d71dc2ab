#include "doctest.h"
#include "properties.hpp"

using namespace vawrt::test;

namespace {

void report(const SuiteResult& r) {
  for (const std::string& f : r.failures) MESSAGE(f);
  CHECK(r.failures.empty());
}

}  // namespace

TEST_CASE("structural properties on seeded instances") {
  const SuiteResult r = structural_suite(7, 40);
  CHECK(r.instances == 40);
  report(r);
}

TEST_CASE("guarded rules on seeded instances") {
  const SuiteResult r = guarded_rule_suite(11, 40);
  CHECK(r.guarded > 0);
  report(r);
}

TEST_CASE("generator is deterministic") {
  InstanceGen a(3), b(3);
  for (int i = 0; i < 20; ++i) CHECK(a.nonzero(3) == b.nonzero(3));
}
