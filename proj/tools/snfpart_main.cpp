// Command-line front end for the partition weight-matrix library.

#include "snfpart/commands.hpp"
#include "snfpart/snf.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace snfpart;

int main(int argc, char** argv)
{
    CLI::App app{"Weight polynomials of partitions and the Smith normal form of their matrices"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string naming_flag = "coords";
    std::string out_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--naming", naming_flag, "Variable names: letters (a, b, ... row-major) or coords (x11, ...)")
        ->check(CLI::IsMember({"letters", "coords"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to FILE instead of stdout");

    std::string partition_text;

    auto* weights = app.add_subcommand("weights", "Print P_rs for every cell of the extended diagram");
    weights->add_option("partition", partition_text, "Comma-separated parts, \"\" for the empty partition")
        ->required();

    std::string algorithm_flag = "both";
    std::vector<int> rect;
    auto* snf = app.add_subcommand("snf", "Smith normal form of the weight matrix");
    snf->add_option("partition", partition_text, "Comma-separated parts")->required();
    snf->add_option("--algorithm", algorithm_flag, "recurrence, inductive or both")
        ->check(CLI::IsMember({"recurrence", "inductive", "both"}))
        ->capture_default_str();
    snf->add_option("--rect", rect, "Rectangle D E with corner (D,E) on the border strip (inductive only)")
        ->expected(2);

    std::string column_flag = "all";
    auto* recurrence = app.add_subcommand("recurrence", "tau-family and alternating row relation residuals");
    recurrence->add_option("partition", partition_text, "Comma-separated parts")->required();
    recurrence->add_option("--j", column_flag, "Column index or 'all'")->capture_default_str();

    int n_max = 6;
    auto* qcat = app.add_subcommand("qcatalan", "q-Catalan table and staircase SNF exponents");
    qcat->add_option("n_max", n_max, "Largest n")->required();

    int max_size = 8;
    auto* selftest = app.add_subcommand("selftest", "Exhaustive identity checks over small partitions");
    selftest->add_option("max_size", max_size, "Largest partition size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Naming naming = naming_flag == "letters" ? Naming::letters : Naming::coords;
    CommandOutput result;
    try {
        if (*weights) {
            result = cmd_weights(parse_partition(partition_text), naming);
        } else if (*snf) {
            static const std::map<std::string, AlgorithmChoice> algorithms{
                {"recurrence", AlgorithmChoice::recurrence},
                {"inductive", AlgorithmChoice::inductive},
                {"both", AlgorithmChoice::both}};
            std::optional<std::pair<int, int>> r;
            if (!rect.empty())
                r = std::make_pair(rect[0], rect[1]);
            result = cmd_snf(parse_partition(partition_text), algorithms.at(algorithm_flag), r, naming);
        } else if (*recurrence) {
            std::optional<int> column;
            if (column_flag != "all") {
                try {
                    column = std::stoi(column_flag);
                } catch (const std::exception&) {
                    throw UsageError("--j expects a column index or 'all', got '" + column_flag + "'");
                }
            }
            result = cmd_recurrence(parse_partition(partition_text), column, naming);
        } else if (*qcat) {
            result = cmd_qcatalan(n_max);
        } else if (*selftest) {
            result = cmd_selftest(max_size);
        }
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kExitVerification;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const std::string payload = format == "json" ? result.envelope.dump(2) + "\n" : result.text;
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return kExitUsage;
        }
        os << payload;
    }
    return result.exit_code;
}
