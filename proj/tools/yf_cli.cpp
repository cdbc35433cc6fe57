// Command line front end: exploration, matrix export, graph export,
// and the verification suites.
//
// Exit codes: 0 success, 1 verification failure or method mismatch,
// 2 usage or input errors.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "yf/chains.hpp"
#include "yf/fibokostka.hpp"
#include "yf/insertion.hpp"
#include "yf/permutation.hpp"
#include "yf/snakeshape.hpp"
#include "yf/tableau.hpp"
#include "yf/verify.hpp"
#include "yf/weak_order.hpp"
#include "yf/youngside.hpp"

namespace {

using nlohmann::json;
using namespace yf;

json shape_json(const Snakeshape& s) {
    json out = json::array();
    for (auto p : s.parts()) {
        out.push_back(static_cast<int>(p));
    }
    return out;
}

json tableau_json(const YfTableau& t) {
    json out = json::array();
    for (const auto& col : t.columns()) {
        json column = json::array();
        column.push_back(col.bottom);
        if (col.two_boxed()) {
            column.push_back(col.top);
        }
        out.push_back(std::move(column));
    }
    return out;
}

json chain_json(const ShapeChain& chain) {
    json out = json::array();
    for (const auto& s : chain.shapes()) {
        out.push_back(s.str());
    }
    return out;
}

std::string chain_dot(const ShapeChain& chain) {
    std::ostringstream out;
    out << "digraph chain {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < chain.shapes().size(); ++k) {
        out << "  c" << k << " [label=\"" << chain.shapes()[k].str() << "\"];\n";
    }
    for (std::size_t k = 0; k + 1 < chain.shapes().size(); ++k) {
        out << "  c" << k << " -> c" << k + 1 << ";\n";
    }
    out << "}\n";
    return out.str();
}

void print_matrix_text(const std::vector<std::string>& labels,
                       const std::vector<std::vector<std::int64_t>>& entries) {
    std::size_t width = 1;
    for (const auto& label : labels) {
        width = std::max(width, label.size());
    }
    for (const auto& row : entries) {
        for (auto value : row) {
            width = std::max(width, std::to_string(value).size());
        }
    }
    std::cout << std::setw(static_cast<int>(width)) << "" << ' ';
    for (const auto& label : labels) {
        std::cout << std::setw(static_cast<int>(width)) << label << ' ';
    }
    std::cout << '\n';
    for (std::size_t r = 0; r < labels.size(); ++r) {
        std::cout << std::setw(static_cast<int>(width)) << labels[r] << ' ';
        for (auto value : entries[r]) {
            std::cout << std::setw(static_cast<int>(width)) << value << ' ';
        }
        std::cout << '\n';
    }
}

int run_insert(const std::string& word, const std::string& format) {
    auto sigma = Permutation::parse(word);
    auto [p, q] = insert_pq(sigma);
    if (format == "json") {
        json out;
        out["p"] = tableau_json(p);
        out["q"] = tableau_json(q);
        out["shape"] = shape_json(p.shape());
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "P: " << p.str() << '\n';
        std::cout << "Q: " << q.str() << '\n';
        std::cout << "shape: " << p.shape().str() << '\n';
    }
    return 0;
}

int run_growth(const std::string& word, const std::string& format) {
    auto sigma = Permutation::parse(word);
    GrowthDiagram diagram{sigma};
    auto [p_hat, q_hat] = boundary_chains(diagram);
    if (format == "json") {
        json grid = json::array();
        for (int row = diagram.n(); row >= 0; --row) {
            json line = json::array();
            for (int col = 0; col <= diagram.n(); ++col) {
                line.push_back(diagram.at(col, row).str());
            }
            grid.push_back(std::move(line));
        }
        json crosses = json::array();
        for (int col = 1; col <= diagram.n(); ++col) {
            crosses.push_back(json::array({col, sigma(col)}));
        }
        json out;
        out["permutation"] = sigma.str();
        out["grid"] = grid;
        out["crosses"] = crosses;
        out["p_chain"] = chain_json(p_hat);
        out["q_chain"] = chain_json(q_hat);
        std::cout << out.dump() << '\n';
    } else {
        for (int row = diagram.n(); row >= 0; --row) {
            std::cout << "row " << row << ":";
            for (int col = 0; col <= diagram.n(); ++col) {
                std::cout << ' ' << diagram.at(col, row).str();
            }
            std::cout << '\n';
        }
        std::cout << "P-chain: " << p_hat.str() << '\n';
        std::cout << "Q-chain: " << q_hat.str() << '\n';
    }
    return 0;
}

int run_convert(const std::string& chain_text, const std::string& tableau_text,
                const std::string& format) {
    if (!chain_text.empty()) {
        auto chain = ShapeChain::parse(chain_text);
        auto t = chain_to_tableau(chain);
        if (format == "json") {
            json out;
            out["tableau"] = tableau_json(t);
            out["shape"] = shape_json(t.shape());
            std::cout << out.dump() << '\n';
        } else if (format == "dot") {
            std::cout << chain_dot(chain);
        } else {
            std::cout << t.str() << '\n';
        }
    } else {
        auto t = YfTableau::parse(tableau_text);
        auto chain = tableau_to_chain(t);
        if (format == "json") {
            json out;
            out["chain"] = chain_json(chain);
            std::cout << out.dump() << '\n';
        } else if (format == "dot") {
            std::cout << chain_dot(chain);
        } else {
            std::cout << chain.str() << '\n';
        }
    }
    return 0;
}

int run_evacuate(const std::string& tableau_text, int letter, const std::string& format) {
    auto t = YfTableau::parse(tableau_text);
    if (letter > 0) {
        auto result = evacuate_letter(t, letter);
        if (format == "json") {
            json out;
            out["tableau"] = tableau_json(result);
            std::cout << out.dump() << '\n';
        } else {
            std::cout << result.str() << '\n';
        }
        return 0;
    }
    std::vector<std::string> steps;
    YfTableau current = t;
    for (int k = t.size(); k >= 1; --k) {
        current = evacuate_letter(current, k);
        steps.push_back(current.str());
    }
    auto ev = evacuation_tableau(t);
    if (format == "json") {
        json out;
        out["steps"] = steps;
        out["ev"] = ev.str();
        std::cout << out.dump() << '\n';
    } else {
        int k = t.size();
        for (const auto& step : steps) {
            std::cout << "evacuate " << k-- << ": " << step << '\n';
        }
        std::cout << "ev: " << ev.str() << '\n';
    }
    return 0;
}

int run_lattice(int n, const std::string& format) {
    if (format == "dot") {
        std::ostringstream out;
        out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
        std::vector<std::pair<std::string, int>> ids;
        for (int k = 0; k <= n; ++k) {
            auto level = shapes_of_size(k);
            out << "  { rank=same;";
            for (const auto& u : level) {
                int id = static_cast<int>(ids.size());
                ids.emplace_back(u.str(), id);
                out << " s" << id << ";";
            }
            out << " }\n";
        }
        std::size_t next = 0;
        for (int k = 0; k <= n; ++k) {
            for (const auto& u : shapes_of_size(k)) {
                out << "  s" << next++ << " [label=\"" << u.str() << "\"];\n";
            }
        }
        auto id_of = [&](const std::string& word) {
            for (const auto& [name, id] : ids) {
                if (name == word) {
                    return id;
                }
            }
            return -1;
        };
        for (int k = 0; k < n; ++k) {
            for (const auto& u : shapes_of_size(k)) {
                for (const auto& v : covers_up(u)) {
                    out << "  s" << id_of(u.str()) << " -> s" << id_of(v.str()) << ";\n";
                }
            }
        }
        out << "}\n";
        std::cout << out.str();
    } else if (format == "json") {
        json out;
        json levels = json::array();
        for (int k = 0; k <= n; ++k) {
            json level = json::array();
            for (const auto& u : shapes_of_size(k)) {
                level.push_back(u.str());
            }
            levels.push_back(std::move(level));
        }
        json edges = json::array();
        for (int k = 0; k < n; ++k) {
            for (const auto& u : shapes_of_size(k)) {
                for (const auto& v : covers_up(u)) {
                    edges.push_back(json::array({u.str(), v.str()}));
                }
            }
        }
        out["levels"] = levels;
        out["covers"] = edges;
        std::cout << out.dump() << '\n';
    } else {
        for (int k = 0; k <= n; ++k) {
            std::cout << "rank " << k << ":";
            for (const auto& u : shapes_of_size(k)) {
                std::cout << ' ' << u.str();
            }
            std::cout << '\n';
        }
        for (int k = 0; k < n; ++k) {
            for (const auto& u : shapes_of_size(k)) {
                for (const auto& v : covers_up(u)) {
                    std::cout << u.str() << " -> " << v.str() << '\n';
                }
            }
        }
    }
    return 0;
}

template <typename Order, typename Label>
int print_poset(const Order& order, const std::vector<int>& ranks, const Label& label,
                const std::string& format, const std::string& name) {
    if (format == "dot") {
        std::cout << order.poset.to_dot([&](int id) { return label(id); }, name);
    } else if (format == "json") {
        json elements = json::array();
        for (int id = 0; id < order.poset.size(); ++id) {
            elements.push_back(label(id));
        }
        json covers = json::array();
        for (const auto& [a, b] : order.poset.covers()) {
            covers.push_back(json::array({label(a), label(b)}));
        }
        json out;
        out["elements"] = elements;
        out["covers"] = covers;
        if (!ranks.empty()) {
            out["ranks"] = ranks;
        }
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "elements: " << order.poset.size() << '\n';
        if (!ranks.empty()) {
            const int top = *std::max_element(ranks.begin(), ranks.end());
            for (int r = 0; r <= top; ++r) {
                std::cout << "rank " << r << ":";
                for (std::size_t i = 0; i < ranks.size(); ++i) {
                    if (ranks[i] == r) {
                        std::cout << " [" << label(static_cast<int>(i)) << "]";
                    }
                }
                std::cout << '\n';
            }
        }
        for (const auto& [a, b] : order.poset.covers()) {
            std::cout << "[" << label(a) << "] -> [" << label(b) << "]\n";
        }
    }
    return 0;
}

int run_poset(const std::string& kind, int n, const std::string& format) {
    if (kind == "yft") {
        auto order = weak_order_yft(n, n);
        return print_poset(
            order, order.rank,
            [&](int id) { return order.tableaux[static_cast<std::size_t>(id)].str(); }, format,
            "yft");
    }
    if (kind == "sn") {
        auto order = weak_order_sn(n, n);
        return print_poset(
            order, order.rank,
            [&](int id) { return order.perms[static_cast<std::size_t>(id)].str(); }, format,
            "sn");
    }
    auto order = weak_order_syt(n, n);
    return print_poset(order, {},
                       [&](int id) { return order.tableaux[static_cast<std::size_t>(id)].str(); },
                       format, "syt");
}

int run_matrix(const std::string& kind, int n, const std::string& method,
               const std::string& format) {
    std::vector<std::string> labels;
    std::vector<std::vector<std::int64_t>> entries;
    std::string csv;
    if (kind == "kostka") {
        auto m = kostka_matrix(n);
        for (const auto& p : m.order) {
            labels.push_back(p.str());
        }
        entries = m.entries;
        csv = m.to_csv();
    } else {
        KostkaMatrix m;
        if (kind == "nfib") {
            m = n_matrix(n);
        } else if (method == "interval") {
            m = okada_matrix(n, OkadaMethod::Interval, n);
        } else {
            m = okada_matrix(n, OkadaMethod::Recurrence);
        }
        if (kind == "okada" && method == "both") {
            auto other = okada_matrix(n, OkadaMethod::Interval, n);
            if (other.entries != m.entries) {
                for (std::size_t r = 0; r < m.order.size(); ++r) {
                    for (std::size_t c = 0; c < m.order.size(); ++c) {
                        if (m.entries[r][c] != other.entries[r][c]) {
                            std::cout << "DIFF " << m.order[r].str() << ',' << m.order[c].str()
                                      << ": recurrence=" << m.entries[r][c]
                                      << " interval=" << other.entries[r][c] << '\n';
                        }
                    }
                }
                return 1;
            }
        }
        for (const auto& s : m.order) {
            labels.push_back(s.str());
        }
        entries = m.entries;
        csv = m.to_csv();
    }
    if (format == "csv") {
        std::cout << csv;
    } else if (format == "json") {
        json out;
        out["order"] = labels;
        out["entries"] = entries;
        std::cout << out.dump() << '\n';
    } else {
        print_matrix_text(labels, entries);
        if (kind == "okada" && method == "both") {
            std::cout << "OK methods agree\n";
        }
    }
    return 0;
}

int run_class(const std::string& tableau_text, const std::string& format, int bound) {
    auto t = YfTableau::parse(tableau_text);
    auto cls = fibo_class(t, bound);
    if (format == "json") {
        json out;
        out["tableau"] = t.str();
        out["min"] = min_cano(t).str();
        out["max"] = max_cano(t).str();
        json members = json::array();
        for (const auto& sigma : cls) {
            members.push_back(sigma.str());
        }
        out["class"] = members;
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& sigma : cls) {
            std::cout << sigma.str() << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Young-Fibonacci insertion, growth diagrams, tableaux posets and "
                 "Kostka-style matrices"};
    app.require_subcommand(1);
    app.fallthrough();
    bool unsafe_bound = false;
    app.add_flag("--unsafe-bound", unsafe_bound,
                 "lift the built-in size limits on poset and interval commands");

    std::string word;
    std::string format = "text";
    std::string chain_text;
    std::string tableau_text;
    std::string kind;
    std::string method = "recurrence";
    std::string suite = "all";
    int n = 0;
    int letter = 0;
    bool dot_flag = false;

    auto* insert_cmd = app.add_subcommand("insert", "insertion and recording tableaux of a word");
    insert_cmd->add_option("word", word, "permutation in one-line notation")->required();
    insert_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* growth_cmd = app.add_subcommand("growth", "growth diagram and its boundary chains");
    growth_cmd->add_option("word", word)->required();
    growth_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* convert_cmd = app.add_subcommand("convert", "chain to tableau or tableau to chain");
    auto* chain_opt = convert_cmd->add_option("--chain", chain_text, "comma separated chain");
    auto* tab_opt = convert_cmd->add_option("--tableau", tableau_text, "tableau to convert");
    chain_opt->excludes(tab_opt);
    convert_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* evac_cmd = app.add_subcommand("evacuate", "evacuation steps and the path tableau");
    evac_cmd->add_option("tableau", tableau_text)->required();
    evac_cmd->add_option("--letter", letter, "evacuate a single topmost letter");
    evac_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* lattice_cmd = app.add_subcommand("lattice", "the lattice of snakeshapes up to rank n");
    lattice_cmd->add_option("n", n)->required()->check(CLI::Range(0, 40));
    lattice_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
    lattice_cmd->add_flag("--dot", dot_flag, "shorthand for --format dot");

    auto* poset_cmd = app.add_subcommand("poset", "weak order posets");
    poset_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"yft", "syt", "sn"}));
    poset_cmd->add_option("n", n)->required()->check(CLI::Range(1, 16));
    poset_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
    poset_cmd->add_flag("--dot", dot_flag, "shorthand for --format dot");

    auto* matrix_cmd = app.add_subcommand("matrix", "transition matrices");
    matrix_cmd->add_option("kind", kind)->required()->check(
        CLI::IsMember({"nfib", "okada", "kostka"}));
    matrix_cmd->add_option("n", n)->required()->check(CLI::Range(0, 40));
    matrix_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"recurrence", "interval", "both"}));
    matrix_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* class_cmd = app.add_subcommand("class", "permutations inserting to a tableau");
    class_cmd->add_option("tableau", tableau_text)->required();
    class_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    verify_cmd->add_option("suite", suite)->check(CLI::IsMember(verify_suite_names()));
    verify_cmd->add_option("bound", n, "size limit for the exhaustive sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (dot_flag) {
        format = "dot";
    }

    try {
        if (*insert_cmd) {
            return run_insert(word, format);
        }
        if (*growth_cmd) {
            return run_growth(word, format);
        }
        if (*convert_cmd) {
            if (chain_text.empty() && tableau_text.empty()) {
                std::cerr << "error: convert needs --chain or --tableau\n";
                return 2;
            }
            return run_convert(chain_text, tableau_text, format);
        }
        if (*evac_cmd) {
            return run_evacuate(tableau_text, letter, format);
        }
        if (*lattice_cmd) {
            if (!unsafe_bound && n > 12) {
                std::cerr << "error: lattice limited to n <= 12, pass --unsafe-bound to lift\n";
                return 2;
            }
            return run_lattice(n, format);
        }
        if (*poset_cmd) {
            const int cap = kind == "syt" ? 7 : 8;
            if (!unsafe_bound && n > cap) {
                std::cerr << "error: poset " << kind << " limited to n <= " << cap
                          << ", pass --unsafe-bound to lift\n";
                return 2;
            }
            return run_poset(kind, n, format);
        }
        if (*matrix_cmd) {
            const bool interval = kind == "okada" && method != "recurrence";
            const int cap = interval || kind == "kostka" ? 8 : 12;
            if (!unsafe_bound && n > cap) {
                std::cerr << "error: matrix " << kind << " limited to n <= " << cap
                          << ", pass --unsafe-bound to lift\n";
                return 2;
            }
            return run_matrix(kind, n, method, format);
        }
        if (*class_cmd) {
            return run_class(tableau_text, format, unsafe_bound ? 16 : 8);
        }
        if (*verify_cmd) {
            if (n == 0) {
                n = 5;
            }
            if (!unsafe_bound && n > 8) {
                std::cerr << "error: verify limited to bound <= 8, pass --unsafe-bound to lift\n";
                return 2;
            }
            return run_verify_suite(suite, n, std::cout) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
