#include "primring/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

int main(int argc, char** argv) {
    CLI::App app{"Decision procedures over truncated polynomial rings. Reads one JSON job, writes one JSON result."};
    std::string input = "-";
    primring::cli::Overrides ov;
    int jet = 0, bound = -1;
    std::string order;
    bool list = false, pretty = false;
    app.add_option("input", input, "job file, or - for stdin");
    app.add_option("--jet-order", jet, "jet order N for local computations");
    app.add_option("--order", order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
    app.add_option("--degree-bound", bound, "degree bound D for per-degree checks");
    app.add_flag("--verify", ov.verify, "enable internal cross-checks");
    app.add_flag("--list", list, "print the command names and exit");
    app.add_flag("--pretty", pretty, "indent the output");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& c : primring::cli::commands()) std::cout << c << "\n";
        return 0;
    }
    if (jet > 0) ov.jet_order = jet;
    if (bound >= 0) ov.degree_bound = bound;
    if (!order.empty()) ov.order = order;

    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "cannot open " << input << "\n";
            return 2;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    auto result = primring::cli::run_text(text, ov);
    std::cout << result.dump(pretty ? 2 : -1) << "\n";
    return primring::cli::exit_code(result);
}
