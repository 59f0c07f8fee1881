#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "piflag/verify.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw CLI::ValidationError("empty entry in list: " + s);
        out.push_back(std::stoi(part));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verify: classification checks for Pi-symmetric flag supermanifolds"};

    std::vector<int> grassmannian;  // N K
    std::string flag_spec;          // N with K1,K2,...
    int flag_n = 0;
    std::string flag_klist;
    int degree = -1;
    std::string checks_csv;
    bool all_checks = false;
    std::string json_path;
    std::string dump_atlas_path;
    bool no_timestamp = false;

    app.add_option("--pi-grassmannian", grassmannian,
                   "Pi-symmetric super-Grassmannian PiGr_{N|N,K|K}: two integers N K")
        ->expected(2);
    auto* flag_opt = app.add_option_group("pi-flag");
    flag_opt->add_option("--pi-flag", flag_n, "Pi-symmetric flag in C^{N|N}: N followed by K1,K2,...");
    flag_opt->add_option("--k", flag_klist, "comma-separated k-list for --pi-flag")->needs("--pi-flag");
    app.add_option("--degree", degree, "ansatz degree override for the field solver");
    app.add_option("--checks", checks_csv,
                   "comma-separated subset of: functions,fields,kernel,cocycle,bwb,compare,vertical");
    app.add_flag("--all", all_checks, "run every applicable check (default)");
    app.add_option("--json", json_path, "write the JSON report to this path ('-' for stdout)");
    app.add_option("--dump-atlas", dump_atlas_path,
                   "write the chart/transition dump to this path and exit");
    app.add_flag("--no-timestamp", no_timestamp,
                 "omit timestamp and timings for byte-identical reports");
    // positional form: verify --pi-flag 3 2,1
    app.allow_extras();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 2;
    }

    // accept `--pi-flag N K1,K2` with the k-list as a trailing positional
    std::vector<std::string> extras = app.remaining();
    if (flag_n != 0 && flag_klist.empty() && !extras.empty()) {
        flag_klist = extras.front();
        extras.erase(extras.begin());
    }
    if (!extras.empty()) {
        std::cerr << "error: unrecognized arguments\n";
        return 2;
    }

    piflag::VerifyConfig config;
    try {
        if (!grassmannian.empty() && flag_n != 0) {
            std::cerr << "error: choose one of --pi-grassmannian / --pi-flag\n";
            return 2;
        }
        if (!grassmannian.empty()) {
            config.flag = piflag::FlagType::pi_symmetric(grassmannian[0], {grassmannian[1]});
        } else if (flag_n != 0) {
            if (flag_klist.empty()) {
                std::cerr << "error: --pi-flag needs a k-list (e.g. --pi-flag 3 2,1)\n";
                return 2;
            }
            config.flag = piflag::FlagType::pi_symmetric(flag_n, parse_int_list(flag_klist));
        } else {
            std::cerr << "error: specify --pi-grassmannian N K or --pi-flag N K1,K2,...\n";
            return 2;
        }
        if (auto bad = config.flag.validate()) {
            std::cerr << "error: invalid flag type: " << *bad << "\n";
            return 2;
        }
        if (degree >= 0) config.degree = degree;
        config.with_timestamp = !no_timestamp;
        if (!checks_csv.empty()) {
            std::stringstream ss(checks_csv);
            std::string name;
            while (std::getline(ss, name, ',')) config.checks.push_back(name);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (!dump_atlas_path.empty()) {
        piflag::Atlas atlas(config.flag);
        const auto dump = piflag::atlas_dump(atlas);
        if (dump_atlas_path == "-") {
            std::cout << dump.dump(2) << "\n";
        } else {
            std::ofstream out(dump_atlas_path);
            out << dump.dump(2) << "\n";
        }
        return 0;
    }

    const piflag::Report report = piflag::run(config);
    if (report.exit_code == 2) {
        std::cerr << "error: " << report.json.value("error", "configuration error") << "\n";
        return 2;
    }
    std::cout << report.text();
    if (!json_path.empty()) {
        if (json_path == "-") {
            std::cout << report.json.dump(2) << "\n";
        } else {
            std::ofstream out(json_path);
            out << report.json.dump(2) << "\n";
        }
    }
    return report.exit_code;
}
