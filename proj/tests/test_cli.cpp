// Drives the installed CLI binary (path passed as argv[1]) through its
// subcommands and checks exit codes, determinism, and round-trips.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << '\n';
    }
}

int run(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <axicurv-binary>\n";
        return 1;
    }
    const std::string bin = argv[1];

    expect(run(bin + " summary --preset sphere:1 --output cli_sum.json") == 0,
           "summary exits 0");
    {
        const auto j = nlohmann::json::parse(slurp("cli_sum.json"));
        expect(std::abs(j["area"].get<double>() - 12.566370614359172) < 1e-9,
               "sphere area is 4 pi");
        expect(std::abs(j["total_mean_curvature"].get<double>() -
                        12.566370614359172) < 1e-9,
               "sphere total mean curvature is 4 pi");
        expect(std::abs(j["total_gauss_curvature"].get<double>() -
                        12.566370614359172) < 1e-9,
               "sphere gauss integral is 4 pi");
    }

    expect(run(bin + " summary --profile does_not_exist.json 2>/dev/null") == 2,
           "missing profile exits 2");
    expect(run(bin + " summary --preset sphere:0.5,1 2>/dev/null") == 2,
           "malformed preset exits 2");

    // Profile written then re-read yields identical bytes.
    expect(run(bin + " family dimple --R 1 --eps 0.1 --emit-profile cli_p.json"
                     " --output /dev/null") == 0,
           "family emit-profile exits 0");
    expect(run(bin + " rearrange --mode fold --profile cli_p.json"
                     " --output cli_p_fold.json") == 0,
           "fold exits 0");
    expect(run(bin + " validate --profile cli_p_fold.json --output cli_v.json") == 0,
           "validate exits 0");
    {
        const auto v = nlohmann::json::parse(slurp("cli_v.json"));
        expect(v["admissible"].get<bool>() && v["is_axiconvex"].get<bool>(),
               "folded dimple is axiconvex-admissible");
    }

    // Seeded runs are byte-identical; the env var overrides the flag.
    expect(run(bin + " check --inequality bonnesen --random inner-convex"
                     " --count 12 --seed 5 --output cli_c1.json") == 0,
           "bonnesen random suite exits 0");
    expect(run(bin + " check --inequality bonnesen --random inner-convex"
                     " --count 12 --seed 5 --output cli_c2.json") == 0,
           "second run exits 0");
    expect(slurp("cli_c1.json") == slurp("cli_c2.json"),
           "same seed gives byte-identical output");
    expect(run("AXICURV_SEED=5 " + bin +
               " check --inequality bonnesen --random inner-convex --count 12"
               " --seed 99 --output cli_c3.json") == 0,
           "env-seeded run exits 0");
    expect(slurp("cli_c1.json") == slurp("cli_c3.json"),
           "AXICURV_SEED overrides --seed");

    expect(run(bin + " check --inequality minkowski"
                     " --preset doublesphere:0.1,25.132741228718345"
                     " --output cli_ds.json") == 0,
           "non-guaranteed violation still exits 0");
    {
        const auto j = nlohmann::json::parse(slurp("cli_ds.json"));
        expect(j["results"][0]["minkowski_gap"].get<double>() < 0,
               "double sphere breaks the plain bound");
        expect(j["results"][0]["abs_minkowski_gap"].get<double>() >= 0,
               "double sphere satisfies the absolute bound");
    }

    expect(run(bin + " rearrange --mode monotone --profile cli_p_fold.json"
                     " --n-grid 2048 --report cli_rr.json"
                     " --output cli_mono.json") == 0,
           "monotone rearrange exits 0");
    {
        const auto r = nlohmann::json::parse(slurp("cli_rr.json"));
        expect(r["monotone_ok"].get<bool>() && r["hl_ok"].get<bool>(),
               "rearrangement report holds");
    }

    expect(run(bin + " export-mesh --preset sphere:1 --ns 8 --nt 8"
                     " --output cli_mesh.obj") == 0,
           "mesh export exits 0");
    expect(slurp("cli_mesh.obj").rfind("v 0 0 0", 0) == 0,
           "mesh starts with the south pole vertex");

    if (failures == 0) std::puts("cli tests passed");
    return failures == 0 ? 0 : 1;
}
