#include "CLI11.hpp"

#include "prym/errors.hpp"
#include "prym/io.hpp"
#include "prym/search.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace prym;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

bool significant(const std::string& line) {
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) return ch != '#';
    return false;
}

// Output redirection: --out writes to a file, otherwise stdout.
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw invalid_input("cannot open output file '" + path + "'");
            os = &file;
        }
    }
};

void check_format(const std::string& format) {
    if (format != "text" && format != "records")
        throw invalid_input("unknown format '" + format + "' (expected text or records)");
}

std::shared_ptr<const FiniteGroup> parse_group_file(const std::string& path) {
    std::vector<std::string> lines = split_lines(read_file(path));
    size_t pos = 0;
    auto group = parse_group_lines(lines, pos);
    for (; pos < lines.size(); ++pos)
        if (significant(lines[pos]))
            throw invalid_input("line " + std::to_string(pos + 1) +
                                ": unexpected content in a group file");
    return group;
}

void print_verified(std::ostream& os, const OwnedDatum& datum, const CoverInvariants& inv,
                    bool records) {
    if (records) {
        os << format_finding_record(*datum.group, datum.mv, datum.K.generators, inv) << "\n";
    } else {
        os << format_record_prefix(*datum.group, datum.mv, datum.K.generators) << "\n"
           << format_record_suffix(inv) << "\n";
    }
}

int cmd_verify(const std::string& path, const std::string& out_path, const std::string& format) {
    check_format(format);
    Sink sink(out_path);
    const std::string text = read_file(path);
    std::vector<std::string> lines = split_lines(text);
    bool records_input = false;
    for (const std::string& line : lines)
        if (significant(line)) {
            records_input = looks_like_record(line);
            break;
        }
    if (records_input) {
        for (size_t i = 0; i < lines.size(); ++i) {
            if (!significant(lines[i])) continue;
            try {
                ParsedRecord rec = parse_finding_record(lines[i]);
                CoverInvariants inv = compute_invariants(rec.datum.view());
                if (inv != rec.stored)
                    throw invalid_input("record invariants disagree with recomputation: stated '" +
                                        format_record_suffix(rec.stored) + "', computed '" +
                                        format_record_suffix(inv) + "'");
                print_verified(*sink.os, rec.datum, inv, format == "records");
            } catch (const invalid_input& ex) {
                throw invalid_input("line " + std::to_string(i + 1) + ": " + ex.what());
            }
        }
        return 0;
    }
    OwnedDatum datum = parse_datum_text(text);
    CoverInvariants inv = compute_invariants(datum.view());
    print_verified(*sink.os, datum, inv, format == "records");
    return 0;
}

int cmd_chartab(const std::string& path, const std::string& out_path) {
    Sink sink(out_path);
    auto group = parse_group_file(path);
    CharacterTable tab = character_table(*group);
    *sink.os << chartab_text(tab);
    return 0;
}

int cmd_family(int class_id, long long N, const std::string& out_path) {
    Sink sink(out_path);
    *sink.os << datum_to_text(family_datum(class_id, N));
    return 0;
}

std::set<int> parse_class_spec(const std::string& spec) {
    std::set<int> out;
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) throw invalid_input("empty class in '" + spec + "'");
        size_t dash = part.find('-');
        long long a = 0, b = 0;
        try {
            if (dash == std::string::npos) {
                a = b = std::stoll(part);
            } else {
                a = std::stoll(part.substr(0, dash));
                b = std::stoll(part.substr(dash + 1));
            }
        } catch (const std::exception&) {
            throw invalid_input("cannot parse class range '" + part + "'");
        }
        if (a > b || a < 1 || b > 5)
            throw invalid_input("family classes run from 1 to 5; got '" + part + "'");
        for (long long c = a; c <= b; ++c) out.insert(static_cast<int>(c));
    }
    if (out.empty()) throw invalid_input("no family classes selected");
    return out;
}

int cmd_table(const std::string& classes_spec, long long n_max, const std::string& out_path,
              const std::string& format) {
    check_format(format);
    if (n_max < 0) throw invalid_input("--n-max must be nonnegative");
    Sink sink(out_path);
    for (int class_id : parse_class_spec(classes_spec)) {
        for (long long N = 1; N <= n_max; ++N) {
            FamilyRow row = verify_family(class_id, N);
            if (format == "records") {
                OwnedDatum datum = family_datum(class_id, N);
                *sink.os << format_finding_record(*datum.group, datum.mv, datum.K.generators,
                                                  row.inv)
                         << "\n";
            } else {
                *sink.os << family_row_text(row) << "\n";
            }
        }
    }
    return 0;
}

int cmd_scan(const std::string& catalog_name, const std::vector<std::string>& group_files,
             long long gmax, int smax, const std::string& criterion, int jobs,
             const std::string& out_path) {
    std::vector<CatalogEntry> catalog;
    if (catalog_name == "builtin") catalog = builtin_catalog();
    else if (catalog_name == "minimal") catalog = minimal_catalog();
    else if (catalog_name != "none")
        throw invalid_input("unknown catalog '" + catalog_name +
                            "' (expected builtin, minimal or none)");
    for (const std::string& path : group_files) catalog.push_back({parse_group_file(path)});
    if (catalog.empty()) throw invalid_input("scan has no groups: catalog is empty");

    ScanOptions opt;
    opt.gmax = gmax;
    opt.smax = smax;
    opt.criterion = parse_criterion(criterion.empty() ? "none" : criterion);
    opt.jobs = jobs;

    Sink sink(out_path);
    ScanResult result = scan(catalog, opt, sink.os);

    // Summary: to stdout when findings went to a file, otherwise appended to
    // the same stream, '#'-prefixed so the combined output re-parses as records.
    std::ostream& sum = out_path.empty() ? *sink.os : std::cout;
    const std::string prefix = out_path.empty() ? "# " : "";
    long long total = 0;
    for (const auto& [token, count] : result.group_counts) {
        sum << prefix << "group " << token << ": " << count << " finding(s)\n";
        total += count;
    }
    sum << prefix << "total: " << total << " finding(s)\n";
    for (const Finding& f : result.findings)
        if (f.braid_unmerged)
            std::cerr << "warning: braid orbit budget exceeded for " << f.group_token
                      << " mv key " << f.key << "; orbits may be split\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants for towers of Galois covers of the line"};
    app.require_subcommand(1);

    std::string out_path, format = "text";

    auto* verify = app.add_subcommand("verify", "Recompute all invariants of a datum file");
    std::string verify_path;
    verify->add_option("file", verify_path, "datum file or findings records")->required();
    verify->add_option("--out", out_path, "write output to a file");
    verify->add_option("--format", format, "text or records");

    auto* chartab = app.add_subcommand("chartab", "Print the character table of a group file");
    std::string chartab_path;
    chartab->add_option("file", chartab_path, "group description file")->required();
    chartab->add_option("--out", out_path, "write output to a file");

    auto* family = app.add_subcommand("family", "Emit one family datum as a datum file");
    int family_class = 0;
    long long family_n = 0;
    family->add_option("--class", family_class, "family class, 1-5")->required();
    family->add_option("--n", family_n, "family parameter N >= 1")->required();
    family->add_option("--out", out_path, "write output to a file");

    auto* table = app.add_subcommand("table", "Verify family closed forms over a parameter range");
    std::string table_classes = "1-5";
    long long table_nmax = 0;
    table->add_option("--classes", table_classes, "classes, e.g. 1-5 or 1,3");
    table->add_option("--n-max", table_nmax, "largest family parameter N")->required();
    table->add_option("--out", out_path, "write output to a file");
    table->add_option("--format", format, "text or records");

    auto* scan = app.add_subcommand("scan", "Enumerate data matching a criterion over a catalog");
    std::string scan_catalog = "builtin", scan_criterion = "none";
    std::vector<std::string> scan_groups;
    long long scan_gmax = 0;
    int scan_smax = 0, scan_jobs = 1;
    scan->add_option("--catalog", scan_catalog, "builtin, minimal or none");
    scan->add_option("--group", scan_groups, "extra group file (repeatable)");
    scan->add_option("--gmax", scan_gmax, "largest total genus")->required();
    scan->add_option("--smax", scan_smax, "largest branch point count")->required();
    scan->add_option("--criterion", scan_criterion, "noninj, constant or xiao");
    scan->add_option("--jobs", scan_jobs, "worker threads for the enumeration");
    scan->add_option("--out", out_path, "write finding records to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_path, out_path, format);
        if (chartab->parsed()) return cmd_chartab(chartab_path, out_path);
        if (family->parsed()) return cmd_family(family_class, family_n, out_path);
        if (table->parsed()) return cmd_table(table_classes, table_nmax, out_path, format);
        if (scan->parsed())
            return cmd_scan(scan_catalog, scan_groups, scan_gmax, scan_smax, scan_criterion,
                            scan_jobs, out_path);
        throw invalid_input("no command given");
    } catch (const internal_inconsistency& ex) {
        std::cerr << "internal inconsistency: " << ex.what() << "\n";
        return 2;
    } catch (const invalid_input& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 2;
    }
}
