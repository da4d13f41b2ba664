// Command-line front end: every operation of the library on JSON documents
// with exact rational I/O. Exit codes: 0 success, 2 invalid input, 3 when a
// command that requires a generic matrix receives a degenerate one.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tropeig/cli.hpp"

namespace {

using nlohmann::json;

constexpr int kExitInvalidInput = 2;
constexpr int kExitDegenerate = 3;

json read_document(const std::string& input) {
    std::string text;
    if (input == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(input);
        if (!file) throw tropeig::ParseError("cannot open input file: " + input);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw tropeig::ParseError("malformed JSON input");
    return doc;
}

tropeig::ConnectedFunction phi_from_flag(const std::string& flag) {
    json values = json::array();
    std::stringstream stream(flag);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            values.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw tropeig::ParseError("--phi expects a comma-separated list of integers");
        }
    }
    return tropeig::cli::phi_from_json(values);
}

void emit(const json& result) { std::cout << result.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tropical (max-plus) spectral toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string phi_flag;
    bool skew = false;
    bool count_only = false;
    int n = 0;
    std::string kind = "connected";

    auto* eig = app.add_subcommand("eig", "Eigenvalue, eigenvector or eigenpolytope");
    eig->add_option("--input", input, "Matrix document path, or - for stdin");

    auto* classify = app.add_subcommand("classify", "Eigenpair type of a matrix");
    classify->add_option("--input", input, "Matrix document path, or - for stdin");
    classify->add_flag("--skew", skew, "Validate skew-symmetry and require a kite type");

    auto* cone = app.add_subcommand("cone", "Facet inequalities of an eigenpair cone");
    cone->add_option("--phi", phi_flag, "Connected function as 1-based images, e.g. 2,3,1")
        ->required();

    auto* enumerate = app.add_subcommand("enum", "Enumerate or count connected functions");
    enumerate->add_option("--n", n, "Ground set size")->required();
    enumerate->add_option("--kind", kind, "connected (default) or kites");
    enumerate->add_flag("--count-only", count_only, "Report the count only");

    auto* fvector = app.add_subcommand("fvector", "f-vector of the complex of cone types");
    fvector->add_option("--n", n, "Ground set size (at most 4)")->required();

    auto* rank = app.add_subcommand("rank", "Tropical ranking of a skew comparison matrix");
    rank->add_option("--input", input, "Matrix document path, or - for stdin");

    auto* witness = app.add_subcommand("witness", "Fan-property failure witness");

    auto* realize = app.add_subcommand("realize", "Matrix interior to a given cone");
    realize->add_option("--phi", phi_flag, "Connected function as 1-based images")->required();
    realize->add_flag("--skew", skew, "Skew-symmetric realization (kites only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (eig->parsed()) {
            emit(tropeig::cli::cmd_eig(tropeig::cli::parse_matrix_document(read_document(input))));
        } else if (classify->parsed()) {
            auto doc = tropeig::cli::parse_matrix_document(read_document(input));
            if (skew) doc.skew = true;
            if (doc.skew) tropeig::validate_skew(doc.matrix);
            emit(tropeig::cli::cmd_classify(doc));
        } else if (cone->parsed()) {
            emit(tropeig::cli::cmd_cone(phi_from_flag(phi_flag)));
        } else if (enumerate->parsed()) {
            emit(tropeig::cli::cmd_enum(n, kind, count_only));
        } else if (fvector->parsed()) {
            emit(tropeig::cli::cmd_fvector(n));
        } else if (rank->parsed()) {
            emit(tropeig::cli::cmd_rank(tropeig::cli::parse_matrix_document(read_document(input))));
        } else if (witness->parsed()) {
            emit(tropeig::cli::cmd_witness());
        } else if (realize->parsed()) {
            emit(tropeig::cli::cmd_realize(phi_from_flag(phi_flag), skew));
        }
    } catch (const tropeig::NonUniqueEigenvectorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const tropeig::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return 0;
}
