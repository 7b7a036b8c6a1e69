// Batch front end: one JSON job in, one JSON report out.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <padicfun/cli.hpp>

int main(int argc, char **argv)
{
    CLI::App app{"padicfun: transfer maps and refinement checks for eigenvarieties of unitary groups"};
    std::string job_path;
    bool pretty = false;
    app.add_option("--job", job_path, "job file (reads standard input when omitted)");
    app.add_flag("--pretty", pretty, "indent the report");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (job_path.empty() || job_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(job_path, std::ios::binary);
        if (!in) {
            std::cerr << "padicfun: cannot open " << job_path << '\n';
            return padicfun::cli::exit_input_error;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    const auto result = padicfun::cli::run_job_text(text);
    std::cout << padicfun::cli::render(result.report, pretty) << '\n';
    return result.exit_code;
}
