#pragma once

#include "v1ss/assemble.hpp"

namespace v1ss {

struct CriterionRow {
    int number;
    std::string name;
    std::string params;
    bool pass;
    i64 ms;
    i64 limit_ms;
    std::string detail;
};

/* the acceptance checklist, restricted to the requested primes
 * (criteria pinned to specific primes run only when those primes appear) */
std::vector<CriterionRow> run_acceptance(const std::vector<i64>& primes);

std::string acceptance_table(const std::vector<CriterionRow>& rows);

}  // namespace v1ss
