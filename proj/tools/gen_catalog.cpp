/// @file gen_catalog.cpp
/// @brief Regenerates the committed catalog data file (data/catalog.json).
///
/// Usage: gen_catalog [out_path]   (stdout when no path is given)

#include <fstream>
#include <iostream>
#include <string>

#include "golden_common.hpp"

int main(int argc, char** argv) {
    std::string text = sasakian::golden_catalog().dump(2);
    text += "\n";
    if (argc > 1) {
        std::ofstream f(argv[1], std::ios::binary);
        if (!f) {
            std::cerr << "gen_catalog: cannot open " << argv[1] << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return 0;
}
