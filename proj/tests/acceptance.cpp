/* acceptance suite: one pass/fail line per criterion, nonzero exit on any
 * failure; the same checklist backs the `verify-all` subcommand */

#include <cstdio>

#include "v1ss/verify.hpp"

int main()
{
    try {
        auto rows = v1ss::run_acceptance({3, 5});
        std::fputs(v1ss::acceptance_table(rows).c_str(), stdout);
        for (const auto& r : rows)
            if (r.number != 0 && !r.pass)
                return 1;
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance suite crashed: %s\n", e.what());
        return 2;
    }
}
