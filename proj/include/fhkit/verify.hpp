#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "fhkit/factored.hpp"

namespace fh {

struct VerifyFailure {
    std::string where;
    std::string lhs, rhs;
};

// One identity checked on many inputs. Failures keep both sides, capped.
struct VerifyItem {
    std::string name;
    int checked = 0;
    int failed = 0;
    std::vector<VerifyFailure> failures;

    bool ok() const { return failed == 0 && checked > 0; }
    void check(bool ok, const std::string& where, const std::string& lhs = {}, const std::string& rhs = {});
    void check_eq(const std::string& where, const FactoredRat& lhs, const FactoredRat& rhs);
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyItem> items;
    std::vector<std::string> notes;  // informational values such as mu(T)
    bool ok() const;
};

// hecke, projectors, two-strand, three-strand, ktheory, charts, koszul
const std::vector<std::string>& verify_suites();
// "all" runs every suite in order. Unknown names throw ParseError.
std::vector<VerifyReport> run_verify(const std::string& suite, unsigned seed);

nlohmann::json to_json(const VerifyReport& r);
std::string render(const VerifyReport& r);

}  // namespace fh
