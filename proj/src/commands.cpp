#include "nilcone/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcone/errors.hpp"
#include "nilcone/hasse.hpp"
#include "nilcone/io.hpp"
#include "nilcone/verify.hpp"

namespace nilcone::cli {

using json = nlohmann::ordered_json;

namespace {

using Row = std::vector<std::string>;

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// Display width in code points, so that λ and ∅ line up.
std::size_t width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

// Numeric columns stay numbers in JSON; everything else is a string.
std::string render(const Row& header, const std::vector<Row>& rows, const std::vector<bool>& numeric, TableFormat f) {
    std::ostringstream out;
    if (f == TableFormat::json) {
        json arr = json::array();
        for (const auto& r : rows) {
            json o;
            for (std::size_t c = 0; c < header.size(); ++c) {
                if (numeric[c])
                    o[header[c]] = std::stol(r[c]);
                else if (r[c] == "true" || r[c] == "false")
                    o[header[c]] = r[c] == "true";
                else
                    o[header[c]] = r[c];
            }
            arr.push_back(std::move(o));
        }
        out << arr.dump(2) << "\n";
    } else if (f == TableFormat::csv) {
        for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << csv_cell(header[c]);
        out << "\n";
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_cell(r[c]);
            out << "\n";
        }
    } else {
        std::vector<std::size_t> w(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) {
            w[c] = width(header[c]);
            for (const auto& r : rows) w[c] = std::max(w[c], width(r[c]));
        }
        auto line = [&](const Row& r) {
            for (std::size_t c = 0; c < r.size(); ++c) {
                out << r[c];
                if (c + 1 < r.size()) out << std::string(w[c] - width(r[c]) + 2, ' ');
            }
            out << "\n";
        };
        line(header);
        for (const auto& r : rows) line(r);
    }
    return out.str();
}

std::string choices_text(const SheetLabel& s) {
    std::string out;
    for (std::size_t i = 0; i < s.choice.size(); ++i)
        out += std::string(i ? "," : "") + (s.choice[i] == SheetChoice::vec ? "VEC" : "ZERO");
    return out;
}

}  // namespace

TableFormat parse_table_format(const std::string& s) {
    if (s == "table") return TableFormat::table;
    if (s == "json") return TableFormat::json;
    if (s == "csv") return TableFormat::csv;
    throw ParseError("unknown format '" + s + "' (table, json, csv)");
}

std::string cmd_orbits(int n, TableFormat format, TextStyle style) {
    std::vector<Row> rows;
    for (const auto& b : enumerate_bipartitions(n))
        rows.push_back({b.to_string(style), std::to_string(orbit_dim(b)), std::to_string(exotic_orbit_dim(b)),
                        is_rigid(b) ? "true" : "false"});
    return render({"label", "enh_dim", "exo_dim", "rigid"}, rows, {false, true, true, false}, format);
}

std::string cmd_classes(int n, TableFormat format, TextStyle style) {
    std::vector<Row> rows;
    for (const auto& c : enumerate_classes(n))
        rows.push_back({c.to_string(style), c.lambda.to_string(TextStyle::expanded), std::to_string(class_dim_enhanced(c)),
                        std::to_string(class_dim_exotic(c)), class_nilcone_orbit(c).to_string(style)});
    return render({"label", "lambda", "enh_dim", "exo_dim", "nilcone_orbit"}, rows, {false, false, true, true, false},
                  format);
}

std::string cmd_sheets(int n, TableFormat format, TextStyle style) {
    std::vector<Row> rows;
    for (const auto& s : enumerate_sheets(n))
        rows.push_back({s.lambda.to_string(TextStyle::expanded), choices_text(s), std::to_string(sheet_dim_enhanced(s)),
                        std::to_string(sheet_dim_exotic(s)), sheet_nilpotent_orbit(s).to_string(style)});
    return render({"lambda", "choice", "enh_dim", "exo_dim", "nilpotent_orbit"}, rows, {false, false, true, true, false},
                  format);
}

std::string cmd_induce(const InduceRequest& req) {
    InductionDatum d;
    if (!req.bipartitions.empty()) {
        const Composition c = parse_composition(req.levi, 0);
        d = InductionDatum(c, parse_bipartition_list(req.bipartitions));
    } else if (req.rigid_prefix) {
        d = InductionDatum::rigid(parse_composition(req.levi, *req.rigid_prefix));
    } else {
        throw ParseError("induce needs --bipartitions or --rigid-prefix");
    }
    const Bipartition label = induce(d);
    std::string out = label.to_string(req.style) + "\n";
    if (req.representative) out += element_to_json(AnyElement(induction_representative(d))) + "\n";
    return out;
}

std::string cmd_identify_text(const std::string& document, IdentifyLevel level, TextStyle style) {
    const AnyElement e = element_from_json(document);
    if (level == IdentifyLevel::orbit) {
        if (const auto* en = std::get_if<EnhancedElement>(&e)) return identify_orbit(*en).to_string(style) + "\n";
        return identify_exotic_orbit(std::get<ExoticElement>(e)).to_string(style) + "\n";
    }
    if (const auto* en = std::get_if<EnhancedElement>(&e)) return identify_class(*en).to_string(style) + "\n";
    return identify_class(std::get<ExoticElement>(e)).to_string(style) + "\n";
}

std::string cmd_identify_file(const std::string& path, IdentifyLevel level, TextStyle style) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return cmd_identify_text(buf.str(), level, style);
}

std::string cmd_hasse(int n, HasseKind kind, TextStyle style) {
    switch (kind) {
        case HasseKind::orbits: return to_dot(orbit_hasse(n, style), "orbits");
        case HasseKind::classes: return to_dot(class_hasse(n, style), "classes");
        case HasseKind::sheets: return to_dot(sheet_hasse(n), "sheets");
    }
    return {};
}

std::pair<std::string, bool> cmd_verify(const VerifyRequest& req) {
    const Execution exec = req.parallel ? Execution::parallel : Execution::serial;
    VerifyReport r;
    if (req.suite == "doubling")
        r = verify_doubling(req.n);
    else if (req.suite == "closure")
        r = verify_closure(req.n, req.p, exec);
    else if (req.suite == "induction")
        r = verify_induction(req.n);
    else if (req.suite == "classes")
        r = verify_classes(req.n);
    else if (req.suite == "quotient")
        r = verify_quotient(req.n, req.seed);
    else if (req.suite == "jkv")
        r = verify_jkv();
    else
        throw ParseError("unknown suite '" + req.suite + "'");
    return {r.to_json() + "\n", r.ok()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enhanced and exotic nilpotent cones: orbits, induction, Jordan classes and sheets"};
    app.require_subcommand(1);
    bool expanded = false;
    app.add_flag("--expanded", expanded, "Print partitions without exponents");
    // Global flags may also follow the subcommand.
    app.fallthrough();

    int n = 3;
    std::string format = "table";
    auto* orbits = app.add_subcommand("orbits", "All orbit labels with enhanced and exotic dimensions");
    orbits->add_option("--n", n, "Size")->required();
    orbits->add_option("--format", format, "table, json or csv");
    auto* classes = app.add_subcommand("classes", "All Jordan classes with dimensions");
    classes->add_option("--n", n, "Size")->required();
    classes->add_option("--format", format, "table, json or csv");
    auto* sheets = app.add_subcommand("sheets", "All sheets with dimensions and nilpotent orbits");
    sheets->add_option("--n", n, "Size")->required();
    sheets->add_option("--format", format, "table, json or csv");

    InduceRequest ind;
    int prefix = -1;
    auto* induce_cmd = app.add_subcommand("induce", "Induce an orbit from a Levi subgroup");
    induce_cmd->add_option("--levi", ind.levi, "Block sizes, e.g. 3,4,4,2")->required();
    induce_cmd->add_option("--bipartitions", ind.bipartitions, "One label per block, '|'-separated");
    induce_cmd->add_option("--rigid-prefix", prefix, "Rigid datum: the first k blocks carry the vector");
    induce_cmd->add_flag("--representative", ind.representative, "Also print a representative element");

    std::string file, level = "orbit";
    auto* identify_cmd = app.add_subcommand("identify", "Identify the orbit or class of an element document");
    identify_cmd->add_option("file", file, "Element JSON file")->required();
    identify_cmd->add_option("--level", level, "orbit or class");

    std::string kind = "orbits", out_path;
    auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram in DOT");
    hasse_cmd->add_option("--n", n, "Size")->required();
    hasse_cmd->add_option("--kind", kind, "orbits, classes or sheets");
    hasse_cmd->add_option("--out", out_path, "Output path (stdout when omitted)");

    VerifyRequest ver;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
    verify_cmd->add_option("--suite", ver.suite, "doubling, closure, induction, classes, quotient or jkv")->required();
    verify_cmd->add_option("--n", ver.n, "Size");
    verify_cmd->add_option("--p", ver.p, "Prime for the finite-field oracles");
    verify_cmd->add_option("--seed", ver.seed, "Seed for the random suites");
    verify_cmd->add_flag("--parallel", ver.parallel, "Use the OpenMP kernels");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return usage_error;
    }

    const TextStyle style = expanded ? TextStyle::expanded : TextStyle::compact;
    try {
        std::string text;
        int code = ok;
        if (*orbits) {
            text = cmd_orbits(n, parse_table_format(format), style);
        } else if (*classes) {
            text = cmd_classes(n, parse_table_format(format), style);
        } else if (*sheets) {
            text = cmd_sheets(n, parse_table_format(format), style);
        } else if (*induce_cmd) {
            if (prefix >= 0) ind.rigid_prefix = prefix;
            ind.style = style;
            text = cmd_induce(ind);
        } else if (*identify_cmd) {
            if (level != "orbit" && level != "class") throw ParseError("--level must be orbit or class");
            text = cmd_identify_file(file, level == "orbit" ? IdentifyLevel::orbit : IdentifyLevel::klass, style);
        } else if (*hasse_cmd) {
            HasseKind k;
            if (kind == "orbits")
                k = HasseKind::orbits;
            else if (kind == "classes")
                k = HasseKind::classes;
            else if (kind == "sheets")
                k = HasseKind::sheets;
            else
                throw ParseError("--kind must be orbits, classes or sheets");
            text = cmd_hasse(n, k, style);
            if (!out_path.empty()) {
                write_text_file(out_path, text);
                text.clear();
            }
        } else if (*verify_cmd) {
            auto [report, passed] = cmd_verify(ver);
            text = std::move(report);
            code = passed ? ok : verification_failed;
        }
        out << text << std::flush;
        return code;
    } catch (const BudgetExceeded& e) {
        err << e.what() << "\n";
        return budget_exceeded;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return usage_error;
    }
}

}  // namespace nilcone::cli
