#include "beq/verify.hpp"

#include <cstdio>

int main() {
    bool all_pass = true;
    for (int id = 1; id <= 11; ++id) {
        beq::CriterionResult r = beq::run_criterion(id);
        std::printf("criterion %2d [%s]: %s (%s)\n", r.id, r.pass ? "pass" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}
