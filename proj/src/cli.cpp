#include "hopcalc/cli.hpp"

#include "hopcalc/adem.hpp"
#include "hopcalc/chains.hpp"
#include "hopcalc/sphere.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace hopcalc::cli {

namespace {

using nlohmann::json;

enum class Format { table, json_fmt, csv };

struct Options {
    Format format = Format::table;
    std::optional<Index> cap;
    std::optional<Index> max_degree;
    std::vector<std::string> positional;
};

Options parse_options(const std::vector<std::string>& args, std::size_t from) {
    Options opt;
    for (std::size_t i = from; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--format") {
            if (++i >= args.size())
                throw parse_error("--format needs a value");
            if (args[i] == "table")
                opt.format = Format::table;
            else if (args[i] == "json")
                opt.format = Format::json_fmt;
            else if (args[i] == "csv")
                opt.format = Format::csv;
            else
                throw parse_error("unknown format '" + args[i] + "'");
        } else if (a == "--cap") {
            if (++i >= args.size())
                throw parse_error("--cap needs a value");
            try {
                opt.cap = std::stoll(args[i]);
            } catch (const std::exception&) {
                throw parse_error("bad --cap value '" + args[i] + "'");
            }
        } else if (a == "--max-degree") {
            if (++i >= args.size())
                throw parse_error("--max-degree needs a value");
            try {
                opt.max_degree = std::stoll(args[i]);
            } catch (const std::exception&) {
                throw parse_error("bad --max-degree value '" + args[i] + "'");
            }
        } else if (a.size() >= 2 && a[0] == '-' && a[1] == '-') {
            throw parse_error("unknown option '" + a + "'");
        } else {
            opt.positional.push_back(a);
        }
    }
    return opt;
}

Index to_index(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const Index v = std::stoll(s, &used);
        if (used != s.size())
            throw parse_error("");
        return v;
    } catch (const std::exception&) {
        throw parse_error("bad " + what + " '" + s + "'");
    }
}

// JSON payloads arrive as a file path, '-' for stdin, or inline text.
std::string read_payload(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '['))
        return arg;
    std::ostringstream buf;
    if (arg == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(arg);
    if (!in)
        throw parse_error("cannot read '" + arg + "'");
    buf << in.rdbuf();
    return buf.str();
}

json word_to_json(const DeltaWord& w) {
    json arr = json::array();
    for (Index i : w.idx)
        arr.push_back(i);
    return arr;
}

std::string sum_to_text(const AdmissibleSum& s) {
    if (s.is_zero())
        return "0";
    std::string out;
    for (std::size_t q = 0; q < s.keys.size(); ++q) {
        if (q > 0)
            out += " + ";
        out += s.keys[q].empty() ? "1" : to_string(s.keys[q]);
    }
    return out;
}

int cmd_rewrite(const Options& opt, std::ostream& out) {
    if (opt.positional.size() != 1)
        throw parse_error("rewrite needs exactly one word argument");
    const WordInput input = parse_word(opt.positional[0]);

    DeltaWord word;
    if (input.alpha) {
        if (!input.source_degree)
            throw parse_error("alpha words need '@degree'");
        word = alpha_to_delta(AlphaWord{input.indices}, *input.source_degree);
    } else {
        word = DeltaWord{input.indices};
        if (input.source_degree && !is_applicable(word, *input.source_degree))
            throw std::invalid_argument("word is not applicable at degree " +
                                        std::to_string(*input.source_degree));
    }
    const AdmissibleSum nf = normalize(word);

    switch (opt.format) {
        case Format::table:
            out << sum_to_text(nf) << '\n';
            break;
        case Format::json_fmt: {
            json j{{"input", opt.positional[0]}, {"terms", json::array()}};
            for (const auto& w : nf.keys)
                j["terms"].push_back(word_to_json(w));
            out << j.dump() << '\n';
            break;
        }
        case Format::csv: {
            out << "word\n";
            for (const auto& w : nf.keys) {
                std::string row;
                for (std::size_t q = 0; q < w.idx.size(); ++q) {
                    if (q > 0)
                        row += ' ';
                    row += std::to_string(w.idx[q]);
                }
                out << row << '\n';
            }
            break;
        }
    }
    return exit_ok;
}

// <n> with the bound either positional or through --max-degree
std::pair<Index, Index> n_and_bound(const Options& opt, const std::string& cmd) {
    if (opt.positional.size() == 2 && !opt.max_degree)
        return {to_index(opt.positional[0], "n"), to_index(opt.positional[1], "max_degree")};
    if (opt.positional.size() == 1 && opt.max_degree)
        return {to_index(opt.positional[0], "n"), *opt.max_degree};
    throw parse_error(cmd + " needs <n> <max_degree> (or <n> --max-degree N)");
}

int cmd_basis(const Options& opt, std::ostream& out) {
    const auto [n, max_degree] = n_and_bound(opt, "basis");
    const auto gens = sphere_generators(n, max_degree);

    switch (opt.format) {
        case Format::table: {
            std::string line;
            for (std::size_t q = 0; q < gens.size(); ++q) {
                if (q > 0)
                    line += ", ";
                line += to_paren_string(gens[q].word);
            }
            out << line << '\n';
            break;
        }
        case Format::json_fmt: {
            json j{{"n", n}, {"max_degree", max_degree}, {"words", json::array()}};
            for (const auto& g : gens)
                j["words"].push_back(word_to_json(g.word));
            out << j.dump() << '\n';
            break;
        }
        case Format::csv: {
            out << "degree,word\n";
            for (const auto& g : gens) {
                std::string row;
                for (std::size_t q = 0; q < g.word.idx.size(); ++q) {
                    if (q > 0)
                        row += ' ';
                    row += std::to_string(g.word.idx[q]);
                }
                out << g.degree() << ',' << row << '\n';
            }
            break;
        }
    }
    return exit_ok;
}

int cmd_poincare(const Options& opt, std::ostream& out) {
    const auto [n, max_degree] = n_and_bound(opt, "poincare");
    if (max_degree < 0)
        throw std::invalid_argument("max_degree must be >= 0");
    const DimensionSeries series = sphere_poincare(n, max_degree);

    switch (opt.format) {
        case Format::table: {
            std::string line;
            for (std::size_t q = 0; q < series.coeff.size(); ++q) {
                if (q > 0)
                    line += ' ';
                line += std::to_string(series.coeff[q]);
            }
            out << line << '\n';
            break;
        }
        case Format::json_fmt: {
            json j{{"n", n}, {"max_degree", max_degree}, {"dims", series.coeff}};
            out << j.dump() << '\n';
            break;
        }
        case Format::csv:
            out << "degree,dim\n";
            for (std::size_t q = 0; q < series.coeff.size(); ++q)
                out << q << ',' << series.coeff[q] << '\n';
            break;
    }
    return exit_ok;
}

int cmd_e1(const Options& opt, std::ostream& out) {
    if (opt.positional.size() != 3)
        throw parse_error("e1 needs <W-json> <s_max> <t_max>");
    const GradedVectorSpace w = GradedVectorSpace::from_json_text(read_payload(opt.positional[0]));
    const Index s_max = to_index(opt.positional[1], "s_max");
    const Index t_max = to_index(opt.positional[2], "t_max");

    FreeHomotopy fh(w);
    const E1Page page = fh.e1_page(s_max, t_max);
    const GammaAlgebra& alg = fh.algebra();

    switch (opt.format) {
        case Format::table:
            for (const auto& [st, cell] : page.cells) {
                out << st.first << ' ' << st.second << ' ' << cell.size() << "  ";
                for (std::size_t q = 0; q < cell.size(); ++q) {
                    if (q > 0)
                        out << ", ";
                    out << alg.label(cell[q]);
                }
                out << '\n';
            }
            break;
        case Format::json_fmt: {
            json rows = json::array();
            for (const auto& [st, cell] : page.cells) {
                json labels = json::array();
                for (const auto& m : cell)
                    labels.push_back(alg.label(m));
                rows.push_back(json{{"s", st.first},
                                    {"t", st.second},
                                    {"dim", cell.size()},
                                    {"basis", std::move(labels)}});
            }
            out << json{{"s_max", s_max}, {"t_max", t_max}, {"rows", std::move(rows)}}.dump()
                << '\n';
            break;
        }
        case Format::csv:
            out << "s,t,dim,basis\n";
            for (const auto& [st, cell] : page.cells) {
                out << st.first << ',' << st.second << ',' << cell.size() << ',';
                for (std::size_t q = 0; q < cell.size(); ++q) {
                    if (q > 0)
                        out << ';';
                    out << alg.label(cell[q]);
                }
                out << '\n';
            }
            break;
    }
    return exit_ok;
}

int cmd_theta_ann(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.positional.size() != 2)
        throw parse_error("theta-ann needs <i> <t>");
    const Index i = to_index(opt.positional[0], "i");
    const Index t = to_index(opt.positional[1], "t");
    const Index cap = opt.cap.value_or(t + theta_cap_slack);
    const auto order = annihilation_order(i, t, cap);
    if (!order) {
        err << "no annihilation order for delta_" << i << " found up to cap " << cap << '\n';
        return exit_cap;
    }
    switch (opt.format) {
        case Format::table:
            out << *order << '\n';
            break;
        case Format::json_fmt:
            out << json{{"i", i}, {"t", t}, {"cap", cap}, {"order", *order}}.dump() << '\n';
            break;
        case Format::csv:
            out << "order\n" << *order << '\n';
            break;
    }
    return exit_ok;
}

int cmd_nilpotence(const Options& opt, std::ostream& out) {
    if (opt.positional.size() != 1)
        throw parse_error("nilpotence needs a chain JSON argument");
    auto [alg, element] = chains::element_from_json_text(read_payload(opt.positional[0]));
    const Index order = alg.nilpotence_order(element);
    switch (opt.format) {
        case Format::table:
            out << order << '\n';
            break;
        case Format::json_fmt:
            out << json{{"order", order}}.dump() << '\n';
            break;
        case Format::csv:
            out << "order\n" << order << '\n';
            break;
    }
    return exit_ok;
}

void print_usage(std::ostream& out) {
    out << "usage: hopcalc <command> [arguments] [--format table|json|csv]\n"
           "\n"
           "commands:\n"
           "  rewrite <word>            normal form of an operation word; words are\n"
           "                            \"d5 d4\" or \"a1 a1 @3\" (alpha form at a degree)\n"
           "  basis <n> <max_degree>    admissible generator words for pi_* S(n)\n"
           "  poincare <n> <max_degree> dimension series of pi_* S(n)\n"
           "                            (both also accept --max-degree N)\n"
           "  e1 <W> <s_max> <t_max>    weight-graded E1 table over a graded space W\n"
           "  theta-ann <i> <t>         least s with theta(s,t) delta_i = 0 [--cap N]\n"
           "  nilpotence <chain>        gamma_2 nilpotence order of a chain element\n"
           "\n"
           "<W> and <chain> take a JSON file path, '-' for stdin, or inline JSON.\n"
           "exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 cap exceeded\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
        print_usage(out);
        return exit_ok;
    }
    const std::string& cmd = args[0];
    try {
        const Options opt = parse_options(args, 1);
        if (cmd == "rewrite")
            return cmd_rewrite(opt, out);
        if (cmd == "basis")
            return cmd_basis(opt, out);
        if (cmd == "poincare")
            return cmd_poincare(opt, out);
        if (cmd == "e1")
            return cmd_e1(opt, out);
        if (cmd == "theta-ann")
            return cmd_theta_ann(opt, out, err);
        if (cmd == "nilpotence")
            return cmd_nilpotence(opt, out);
        throw parse_error("unknown command '" + cmd + "'");
    } catch (const parse_error& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_parse;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_precondition;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_parse;
    }
    return exit_ok;
}

}  // namespace hopcalc::cli
