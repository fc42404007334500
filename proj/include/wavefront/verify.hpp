#ifndef WAVEFRONT_VERIFY_HPP
#define WAVEFRONT_VERIFY_HPP

#include <string>
#include <vector>

namespace wf {

struct SuiteReport {
    std::string suite;
    long long instances = 0;
    std::vector<std::string> failures;
    long long millis = 0;

    bool passed() const { return failures.empty(); }
};

/* Known suites: duality, symbols, springer, endoscopy, wavefront, all.
 * bound < 0 selects the suite's default bound (the main enumeration
 * size; secondary checks scale with it). bound = 0 runs empty ranges. */
SuiteReport verify_suite(const std::string& name, int bound = -1);

std::vector<std::string> suite_names();

} // namespace wf

#endif
