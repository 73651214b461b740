#include <ncsf/selftest.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty())
        for (int k = 1; k <= 14; ++k) which.push_back(k);
    bool ok = ncsf::selftest::run(which, std::cout);
    return ok ? 0 : 1;
}
