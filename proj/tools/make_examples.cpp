// Regenerates the bundled instance files under data/instances/.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "twistring/instance.hpp"

using namespace twistring;
using nlohmann::json;

namespace {

void write(const std::filesystem::path& dir, const std::string& name, const json& j) {
    std::ofstream out(dir / name);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << (dir / name).string() << "\n";
}

json ring_gfp(int p) { return {{"kind", "gfp"}, {"modulus", p}}; }

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "data/instances";
    std::filesystem::create_directories(dir);

    json q8 = {{"family", "quaternion8"}};
    json d8 = {{"family", "dihedral8"}};

    write(dir, "q8_gf3_trivial_one.json",
          {{"ring", ring_gfp(3)}, {"group", q8}, {"cocycle", "trivial"}, {"f", "one"}});
    write(dir, "q8_gf2_trivial_one.json",
          {{"ring", ring_gfp(2)}, {"group", q8}, {"cocycle", "trivial"}, {"f", "one"}});
    write(dir, "d8_gf3_trivial_one.json",
          {{"ring", ring_gfp(3)}, {"group", d8}, {"cocycle", "trivial"}, {"f", "one"}});
    write(dir, "d8_gf2_trivial_one.json",
          {{"ring", ring_gfp(2)}, {"group", d8}, {"cocycle", "trivial"}, {"f", "one"}});

    write(dir, "c2c2_gf5_quaternion_one.json",
          {{"ring", ring_gfp(5)},
           {"group", {{"family", "elem_abelian"}, {"k", 2}}},
           {"cocycle", "quaternion_c2c2"},
           {"f", "one"}});

    // Q8 Y C4 with the multiplicative f that is -1 exactly off the
    // hamiltonian index-2 subgroup (so f(d) = -1 on the central generator)
    {
        json desc = {{"family", "central_product"},
                     {"a", q8},
                     {"b", {{"family", "cyclic"}, {"n", 4}}},
                     {"za", 2},
                     {"zb", 2}};
        Group g = build_group(desc);
        Ring gf3 = Ring::prime_field(3);
        ShapeReport shape = detect_case_shapes(g);
        if (shape.hamiltonian_yc4.empty()) {
            std::cerr << "unexpected: no Gamma Y C4 witness\n";
            return 1;
        }
        FMap f = FMap::sign_character(g, gf3, shape.hamiltonian_yc4.front().gamma);
        write(dir, "q8yc4_gf3_trivial_fsign.json",
              {{"ring", ring_gfp(3)}, {"group", desc}, {"cocycle", "trivial"},
               {"f", f.values()}});
    }

    write(dir, "d8yd8xc2_gf2_trivial_one.json",
          {{"ring", ring_gfp(2)},
           {"group",
            {{"family", "product"},
             {"a",
              {{"family", "central_product"}, {"a", d8}, {"b", d8}, {"za", 2}, {"zb", 2}}},
             {"b", {{"family", "cyclic"}, {"n", 2}}}}},
           {"cocycle", "trivial"},
           {"f", "one"}});

    // S3 as an explicit table (C3 with the inverting involution adjoined)
    {
        Group s3 = Group::semidirect_inversion(Group::cyclic(3));
        std::vector<int> table;
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) table.push_back(s3.mul(a, b));
        write(dir, "s3_gf3_trivial_one.json",
              {{"ring", ring_gfp(3)},
               {"group", {{"family", "table"}, {"order", 6}, {"mul", table}}},
               {"cocycle", "trivial"},
               {"f", "one"}});
    }
    return 0;
}
