// End-to-end checks of the installed CLI binary (path passed as argv[1]).

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& cmd) {
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return {-1, ""};
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

void check(const std::string& name, bool ok, const std::string& context = "") {
    std::cout << (ok ? "ok" : "FAIL") << " - " << name << "\n";
    if (!ok) {
        ++failures;
        if (!context.empty()) std::cout << context << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_smoke <path-to-orthant>\n";
        return 2;
    }
    const std::string bin = argv[1];

    auto r1 = run(bin + " criterion \"Z^2 - (x^3 - y^5)^2 + y^11\"");
    check("criterion on the two-vertex example is not applicable",
          r1.exit_code == 0 && r1.output.find("not_applicable") != std::string::npos, r1.output);
    check("criterion reports both vertices",
          r1.output.find("[\n        \"0\",\n        \"10\"\n      ]") != std::string::npos ||
              r1.output.find("\"vertices\"") != std::string::npos,
          r1.output);

    auto r2 = run(bin + " initial-form --weights 5,3 --text \"Z^2 - (x^3 - y^5)^2 + y^11\"");
    check("initial-form at the balanced weight",
          r2.exit_code == 0 && r2.output.find("Z^2 - x^6 + 2*x^3*y^5 - y^10") != std::string::npos &&
              r2.output.find("omega_3 = 15") != std::string::npos,
          r2.output);

    auto r3 = run(bin + " factor --order 12 \"Z^2 - x^2*(1 + x)\"");
    check("factor emits a verified certificate",
          r3.exit_code == 0 && r3.output.find("\"kind\": \"reducible\"") != std::string::npos &&
              r3.output.find("\"ok\": true") != std::string::npos &&
              r3.output.find("Z - x - 1/2*x^2 + 1/8*x^3") != std::string::npos,
          r3.output);

    auto r4 = run(bin + " criterion --field fp --p 5 \"Z^2 - x^3\"");
    check("criterion over F_5",
          r4.exit_code == 0 && r4.output.find("inconclusive") != std::string::npos, r4.output);

    auto r5 = run(bin + " parse \"x*Z^2 - 1\"");
    check("input errors exit 1", r5.exit_code == 1 && r5.output.find("NotMonicInZ") != std::string::npos,
          r5.output);

    auto r6 = run(bin + " verify \"Z^2 - x^3*y\"");
    check("verify cross-checks the oracle",
          r6.exit_code == 0 && r6.output.find("\"consistent\": true") != std::string::npos, r6.output);

    auto r7 = run("echo \"Z^2 - x^3\" | " + bin + " polyhedron");
    check("polyhedron subcommand reads stdin",
          r7.exit_code == 0 && r7.output.find("\"vertices\"") != std::string::npos, r7.output);

    auto r8 = run(bin + " criterion --field fp --p 6 \"Z^2 - x^3\"");
    check("composite modulus is rejected", r8.exit_code == 1, r8.output);

    auto r9 = run(bin + " initial-form --weights 1.5,2 \"Z^2 - x^3*y\"");
    check("float weights are rejected", r9.exit_code == 1, r9.output);

    auto ra = run(bin + " factor --order 9 --seed 7 --field fp --p 13 \"Z^3 - x*Z^2 - 2*x^2*Z + 2*x^3\"");
    auto rb = run(bin + " factor --order 9 --seed 7 --field fp --p 13 \"Z^3 - x*Z^2 - 2*x^2*Z + 2*x^3\"");
    check("output is byte-stable for a fixed seed", ra.exit_code == 0 && ra.output == rb.output);

    std::cout << (failures == 0 ? "cli smoke: all checks passed\n"
                                : "cli smoke: " + std::to_string(failures) + " checks FAILED\n");
    return failures == 0 ? 0 : 1;
}
