// Command-line front end.
//
// Subcommands:
//   char       character value chi^shape_content
//   colsum     column sum C(mu) by one method or all four
//   schensted  hook permutation <-> pair of ribbon tableaux (JSON)
//   enumerate  stream tableaux / hook permutations / hook involutions /
//              oscillating tableaux as JSON lines
//   verify     run the named check suite
//
// Exit codes: 0 success, 1 verify failure, 2 bad parameters or size
// mismatch, 3 colsum method disagreement, 4 malformed input.
// Scalar results print as plain integers on stdout; diagnostics and traces
// go to stderr.  RIBBONWEAVE_STEP_CAP overrides the walk step cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <ribbonweave/json_io.hpp>
#include <ribbonweave/ribbonweave.hpp>
#include <ribbonweave/verify.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ribbonweave;
using nlohmann::json;

namespace {

long long step_cap_from_env() {
    if (const char* env = std::getenv("RIBBONWEAVE_STEP_CAP")) {
        try {
            return std::stoll(env);
        } catch (...) {
            std::cerr << "ignoring malformed RIBBONWEAVE_STEP_CAP\n";
        }
    }
    return kDefaultStepCap;
}

json read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

SquareOrder order_by_name(const std::string& name, int ell, bool half) {
    if (name == "row") return SquareOrder::default_order(ell, half);
    if (name == "col") return SquareOrder::column_major(ell, half);
    throw CLI::ValidationError("--order must be row or col");
}

void print_trace(const std::vector<StepRecord>& trace) {
    for (const auto& rec : trace) std::cerr << format_step_record(rec) << "\n";
}

int cmd_char(const std::string& shape, const std::string& content) {
    const Partition lam = Partition::parse(shape);
    const Composition mu = Composition::parse(content);
    if (mu.size() != lam.size()) {
        std::cerr << "size mismatch: |shape| = " << lam.size() << ", |content| = " << mu.size() << "\n";
        return 2;
    }
    std::cout << mn_character(lam, mu) << "\n";
    return 0;
}

int cmd_colsum(const std::string& mu_text, const std::string& sigma_text, const std::string& method) {
    if (mu_text.empty() == sigma_text.empty()) {
        std::cerr << "give exactly one of --mu or --sigma\n";
        return 2;
    }
    // a permutation in one-line notation stands for its cycle type
    const Partition mu =
        sigma_text.empty() ? Partition::parse(mu_text) : cycle_type(parse_one_line(sigma_text));
    const std::map<std::string, ColumnSumMethod> methods{
        {"formula", ColumnSumMethod::Formula},
        {"tableaux", ColumnSumMethod::Tableaux},
        {"roots", ColumnSumMethod::Roots},
        {"spec", ColumnSumMethod::Spec},
    };
    if (method == "all") {
        std::vector<BigInt> values;
        for (const auto& [name, m] : methods) values.push_back(column_sum(mu, m));
        for (const BigInt& v : values) std::cout << v << "\n";
        for (const BigInt& v : values)
            if (v != values.front()) {
                std::cerr << "column sum methods disagree\n";
                return 3;
            }
        return 0;
    }
    auto it = methods.find(method);
    if (it == methods.end()) {
        std::cerr << "unknown method " << method << "\n";
        return 2;
    }
    std::cout << column_sum(mu, it->second) << "\n";
    return 0;
}

int cmd_schensted(const std::string& input, const std::string& order_name, bool invert, bool half,
                  bool trace, long long step_cap) {
    json in;
    try {
        in = read_input(input);
    } catch (const std::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 4;
    }
    std::vector<StepRecord> steps;
    try {
        if (!invert && !half) {
            const HookPermutation hp = in.get<HookPermutation>();
            const SquareOrder order = order_by_name(order_name, hp.length(), false);
            Configuration cfg = embed_hook_permutation(hp, order);
            if (run_walk(cfg, &steps, step_cap) != RunEnd::Forward)
                throw std::logic_error("walk exited on the permutation side");
            if (trace) print_trace(steps);
            std::cout << json{{"P", read_right_chain(cfg)}, {"Q", read_top_chain(cfg)}} << "\n";
            return 0;
        }
        if (!invert && half) {
            const HookInvolution inv = in.get<HookInvolution>();
            const SquareOrder order = order_by_name(order_name, inv.length(), true);
            const auto out = run_involution(inv, order, step_cap, &steps);
            if (trace) print_trace(steps);
            if (std::holds_alternative<RibbonTableau>(out))
                std::cout << json{{"T", std::get<RibbonTableau>(out)}} << "\n";
            else
                std::cout << json{{"matched", std::get<HookInvolution>(out)}} << "\n";
            return 0;
        }
        if (invert && half) {
            const RibbonTableau t = in.at("T").get<RibbonTableau>();
            const SquareOrder order = order_by_name(order_name, t.length(), true);
            const auto out = run_involution_inverse(t, order, step_cap, &steps);
            if (trace) print_trace(steps);
            if (std::holds_alternative<HookInvolution>(out))
                std::cout << json(std::get<HookInvolution>(out)) << "\n";
            else
                std::cout << json{{"matched", {{"T", std::get<RibbonTableau>(out)}}}} << "\n";
            return 0;
        }
        const RibbonTableau p = in.at("P").get<RibbonTableau>();
        const RibbonTableau q = in.at("Q").get<RibbonTableau>();
        const SquareOrder order = order_by_name(order_name, p.length(), false);
        const auto out = run_phi_inverse(p, q, order, step_cap, &steps);
        if (trace) print_trace(steps);
        if (std::holds_alternative<HookPermutation>(out))
            std::cout << json(std::get<HookPermutation>(out)) << "\n";
        else
            std::cout << json{{"matched",
                               {{"P", std::get<TableauPair>(out).first},
                                {"Q", std::get<TableauPair>(out).second}}}} << "\n";
        return 0;
    } catch (const json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 4;
    }
}

int cmd_enumerate(const std::string& kind, const std::string& shape, const std::string& content,
                  int size, int length, bool count_only) {
    long long count = 0;
    auto emit = [&](const json& j) {
        ++count;
        if (!count_only) std::cout << j << "\n";
    };
    try {
        if (kind == "tableaux") {
            if (!shape.empty() && !content.empty()) {
                for (const auto& t : enumerate_tableaux(Partition::parse(shape), Composition::parse(content)))
                    emit(json(t));
            } else if (!shape.empty() && length > 0) {
                for (const auto& t :
                     enumerate_tableaux_by_length(Partition::parse(shape).size(), length))
                    if (t.shape() == Partition::parse(shape)) emit(json(t));
            } else if (size > 0 && length > 0) {
                for (const auto& t : enumerate_tableaux_by_length(size, length)) emit(json(t));
            } else {
                std::cerr << "tableaux need --shape with --content or --length, or --size --length\n";
                return 2;
            }
        } else if (kind == "hookperms") {
            if (size <= 0 || length <= 0) {
                std::cerr << "hookperms need --size and --length\n";
                return 2;
            }
            HookPermutationEnumerator en(size, length);
            HookPermutation hp;
            while (en.next(hp)) emit(json(hp));
        } else if (kind == "hookinvols") {
            if (!content.empty()) {
                for (const auto& inv : enumerate_hook_involutions(Composition::parse(content)))
                    emit(json(inv));
            } else if (size > 0 && length > 0) {
                for (const auto& inv : enumerate_hook_involutions_by_size(size, length)) emit(json(inv));
            } else {
                std::cerr << "hookinvols need --content, or --size and --length\n";
                return 2;
            }
        } else if (kind == "oscillating") {
            if (size <= 0 || length <= 0) {
                std::cerr << "oscillating needs --size and --length\n";
                return 2;
            }
            for (const auto& t : enumerate_oscillating(size, length)) emit(json(t));
        } else {
            std::cerr << "unknown kind " << kind << "\n";
            return 2;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (count_only) std::cout << count << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, int max_size, int max_len, long long step_cap,
               bool negative_control) {
    verify::Bounds bounds;
    bounds.max_size = max_size;
    bounds.max_len = max_len;
    bounds.step_cap = step_cap;
    std::vector<std::string> names;
    if (negative_control)
        names = {"control"};
    else if (suite == "all")
        names = verify::suite_names();
    else
        names = {suite};
    bool all = true;
    for (const std::string& name : names) {
        std::vector<verify::Check> checks;
        try {
            checks = verify::suite(name, bounds);
        } catch (const std::invalid_argument& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        for (const auto& c : checks) {
            all = all && c.pass;
            std::cout << (c.pass ? "PASS" : "FAIL") << " " << name << ": " << c.name
                      << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
        }
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ribbonweave: signed Schensted correspondences for ribbon tableaux"};
    app.require_subcommand(1);
    const long long env_cap = step_cap_from_env();

    std::string shape, content, mu_text, method = "formula";
    auto* c_char = app.add_subcommand("char", "character value of shape at content");
    c_char->add_option("--shape", shape, "partition, e.g. 2,1")->required();
    c_char->add_option("--content", content, "composition, e.g. 3 or 2,1")->required();

    std::string sigma_text;
    auto* c_colsum = app.add_subcommand("colsum", "column sum C(mu) of the character table");
    c_colsum->add_option("--mu", mu_text, "partition");
    c_colsum->add_option("--sigma", sigma_text, "permutation in one-line notation, e.g. \"5 7 4 3 8 9 2 1 6\"");
    c_colsum->add_option("--method", method, "formula|tableaux|roots|spec|all");

    std::string input = "-", order_name = "row";
    bool invert = false, half = false, trace = false;
    long long step_cap = env_cap;
    auto* c_sch = app.add_subcommand("schensted", "run the growth correspondence on JSON input");
    c_sch->add_option("--input", input, "path or - for stdin");
    c_sch->add_option("--order", order_name, "row|col");
    c_sch->add_flag("--invert", invert, "walk backward from tableaux");
    c_sch->add_flag("--half", half, "hook involutions <-> single tableaux");
    c_sch->add_flag("--trace", trace, "stream rule lines to stderr");
    c_sch->add_option("--step-cap", step_cap, "walk step cap");

    std::string kind;
    int size = 0, length = 0;
    bool count_only = false;
    auto* c_enum = app.add_subcommand("enumerate", "stream objects as JSON lines");
    c_enum->add_option("--kind", kind, "tableaux|hookperms|hookinvols|oscillating")->required();
    c_enum->add_option("--shape", shape, "partition");
    c_enum->add_option("--content", content, "composition");
    c_enum->add_option("--size", size, "total size");
    c_enum->add_option("--length", length, "number of steps");
    c_enum->add_flag("--count", count_only, "print only the count");

    std::string suite = "all";
    int max_size = 8, max_len = 3;
    bool negative_control = false;
    long long vcap = env_cap;
    auto* c_ver = app.add_subcommand("verify", "run a check suite");
    c_ver->add_option("--suite", suite, "core|local|global|characters|operators|extensions|all");
    c_ver->add_option("--max-size", max_size, "size bound");
    c_ver->add_option("--max-len", max_len, "length bound");
    c_ver->add_option("--step-cap", vcap, "walk step cap");
    c_ver->add_flag("--negative-control", negative_control, "run the deliberately failing check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_char->parsed()) return cmd_char(shape, content);
        if (c_colsum->parsed()) return cmd_colsum(mu_text, sigma_text, method);
        if (c_sch->parsed()) return cmd_schensted(input, order_name, invert, half, trace, step_cap);
        if (c_enum->parsed()) return cmd_enumerate(kind, shape, content, size, length, count_only);
        if (c_ver->parsed()) return cmd_verify(suite, max_size, max_len, vcap, negative_control);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
