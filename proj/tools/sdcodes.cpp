// sdcodes: command-line front end for the self-dual code toolkit.
//
// Exit status: 0 definitive result, 1 inconclusive or incomplete, 2 bad input.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdc/analysis.hpp"
#include "sdc/codes.hpp"
#include "sdc/constructions.hpp"
#include "sdc/modrep.hpp"
#include "sdc/perms.hpp"
#include "sdc/search.hpp"

using nlohmann::ordered_json;
using namespace sdc;

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5dc0de;

struct Globals {
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    std::string isa = "auto";
};

struct Report {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json results = ordered_json::object();
    bool definitive = true;
};

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void note_input(Report& r, const std::string& path) { r.inputs[path] = "fnv1a:" + fnv1a_hex(slurp(path)); }

EnumerationOptions enumeration(const Globals& g) {
    EnumerationOptions opt;
    opt.threads = g.threads;
    if (g.isa == "scalar") {
        opt.isa = kernels::Isa::scalar;
    } else if (g.isa == "avx2") {
        if (!kernels::isa_supported(kernels::Isa::avx2)) throw std::invalid_argument("--isa avx2: not supported on this machine");
        opt.isa = kernels::Isa::avx2;
    } else if (g.isa != "auto") {
        throw std::invalid_argument("--isa must be auto, scalar or avx2");
    }
    return opt;
}

ordered_json to_json(const WeightEnumerator& we) {
    ordered_json j = ordered_json::object();
    for (std::size_t w = 0; w < we.counts.size(); ++w)
        if (we.counts[w] != 0) j[std::to_string(w)] = we.counts[w];
    return j;
}

ordered_json to_json(const ExclusionReport& r) {
    ordered_json premises = ordered_json::array();
    for (const auto& p : r.premises) premises.push_back({{"fact", p.fact}, {"source", p.source}});
    ordered_json trail = ordered_json::array();
    for (const auto& s : r.trail) trail.push_back({{"step", s.to_string()}, {"holds", s.holds()}});
    ordered_json j{{"claim", r.claim}, {"verdict", to_string(r.verdict)}, {"premises", premises}, {"trail", trail},
                   {"replays", r.replay()}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ordered_json code_params(const LinearCode& c) {
    return {{"n", c.length()}, {"k", c.dimension()}};
}

void print_text(const ordered_json& j, const std::string& indent, std::ostream& out) {
    for (const auto& [key, val] : j.items()) {
        if (val.is_object()) {
            out << indent << key << ":\n";
            print_text(val, indent + "  ", out);
        } else if (val.is_array() && !val.empty() && val.front().is_object()) {
            out << indent << key << ":\n";
            for (const auto& item : val) {
                out << indent << "  -\n";
                print_text(item, indent + "    ", out);
            }
        } else {
            out << indent << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
        }
    }
}

// ---------------------------------------------------------------------------

Report cmd_info(const std::string& path, const Globals& g) {
    Report r;
    note_input(r, path);
    const LinearCode c = read_code_file(path);
    r.results = code_params(c);
    r.results["self_dual"] = is_self_dual(c);
    r.results["doubly_even"] = is_doubly_even(c);
    if (c.dimension() == 0) {
        r.results["min_distance"] = nullptr;
        r.results["note"] = "zero code has no minimum distance";
    } else if (c.dimension() <= kMinDistanceMaxDim) {
        r.results["min_distance"] = min_distance(c, enumeration(g));
    } else {
        r.results["min_distance"] = nullptr;
        r.results["note"] = "dimension above enumeration budget " + std::to_string(kMinDistanceMaxDim);
        r.definitive = false;
    }
    return r;
}

Report cmd_decompose(const std::string& code_path, const std::string& perm_path, unsigned p) {
    Report r;
    note_input(r, code_path);
    note_input(r, perm_path);
    const LinearCode c = read_code_file(code_path);
    const Perm s = Perm::parse(slurp(perm_path), c.length());
    const ModuleDecomposition d = decompose(c, s, p);
    const Perm h = power(s, p);

    r.results["p"] = p;
    r.results["type"] = aut_type(s, p).to_string();
    r.results["s_p"] = d.s;
    r.results["nu"] = d.nu;
    r.results["x"] = d.x;
    r.results["w"] = d.w;
    std::vector<std::string> factors;
    for (const auto& f : d.factors) factors.push_back(f.to_string());
    r.results["factors"] = factors;
    r.results["y"] = d.y;
    r.results["z"] = d.z;
    r.results["quotient_dimension"] = quotient_dimension(d);
    r.results["dim_C_h"] = d.socle_dimension();
    if (c.dimension() % 2 == 0) {
        const bool projective = is_projective(c, s, p);
        r.results["projective"] = projective;
        if (is_self_dual(c)) {
            const LinearCode proj = orbit_projection(fixed_subcode(c, h), h);
            const bool proj_sd = is_self_dual(proj);
            r.results["projection_self_dual"] = proj_sd;
            r.results["theorem1_consistent"] = projective == proj_sd;
            r.results["constraint_violations"] = self_dual_constraint_violations(d);
        }
    } else {
        r.results["projective"] = nullptr;
        r.results["note"] = "odd dimension: projectivity undefined";
    }
    return r;
}

Report cmd_exclude(const std::string& target, const std::string& table_path, std::size_t d_min) {
    Report r;
    if (target == "38") {
        BestKnownTable table;
        if (!table_path.empty()) {
            note_input(r, table_path);
            table = BestKnownTable::load(table_path);
        }
        const ExclusionReport e = exclude_order_38(table);
        r.results = to_json(e);
        r.definitive = e.verdict != Verdict::inconclusive;
    } else if (target.rfind("2p2:", 0) == 0) {
        const unsigned p = static_cast<unsigned>(std::stoul(target.substr(4)));
        const ExclusionReport e = exclude_order_2p_at_boundary(p, d_min);
        r.results = to_json(e);
        r.definitive = e.verdict != Verdict::inconclusive;
    } else if (target.rfind("prime-bound:", 0) == 0) {
        const std::uint64_t m = std::stoull(target.substr(12));
        r.results["m"] = m;
        r.results["length"] = 24 * m;
        r.results["crude"] = corollary_prime_bound(m, PrimeBoundMode::crude);
        r.results["refined"] = corollary_prime_bound(m, PrimeBoundMode::refined);
    } else {
        throw std::invalid_argument("unknown exclusion target '" + target + "' (use 38, 2p2:<p> or prime-bound:<m>)");
    }
    return r;
}

struct Order58Flags {
    bool heavy = false;
    unsigned shard_index = 0;
    unsigned shard_count = 1;
    std::uint64_t budget = 0;
    std::size_t d_target = 12;
};

Report cmd_order58(const std::string& check, const Order58Flags& f, const Globals& g) {
    Report r;
    if (check == "enumerate") {
        const SearchOutcome o = enumerate_selfdual_8_4_4();
        const LinearCode h3 = extended_hamming8();
        std::size_t equivalent = 0, doubly_even = 0;
        for (const auto& cert : o.certificates) {
            equivalent += cert.witness.has_value();
            doubly_even += cert.doubly_even;
        }
        const std::uint64_t aut = aut_order_small(h3);
        r.results["candidates_examined"] = o.examined;
        r.results["self_dual_8_4"] = o.note;
        r.results["codes"] = o.survivors.size();
        r.results["equivalent_to_hamming8"] = equivalent;
        r.results["doubly_even"] = doubly_even;
        r.results["aut_order_hamming8"] = aut;
        r.results["s8_over_aut"] = 40320 / aut;
        r.definitive = o.complete;
    } else if (check == "pullback") {
        const SearchOutcome o = enumerate_selfdual_8_4_4();
        const Perm g58 = build_g58();
        const Perm alt = build_g58_interleaved();
        std::vector<std::size_t> dims, alt_dims;
        std::size_t max_all = 0, max_admissible = 0, admissible = 0;
        ordered_json exceptional = ordered_json::array();
        for (const auto& a : o.survivors) {
            const std::size_t d = pullback_fixed_dim(a, g58);
            dims.push_back(d);
            alt_dims.push_back(pullback_fixed_dim(a, alt));
            max_all = std::max(max_all, d);
            const std::size_t lift_d = pullback_min_distance(a, g58);
            if (lift_d >= 24) {
                ++admissible;
                max_admissible = std::max(max_admissible, d);
            }
            if (d > 2) {
                std::vector<std::string> rows;
                for (const auto& row : a.generator().row_list()) rows.push_back(row.to_string());
                exceptional.push_back({{"generator", rows}, {"fixed_dim", d}, {"lift_min_distance", lift_d}});
            }
        }
        r.results["g"] = g58.to_string();
        r.results["type"] = aut_type(g58, 29).to_string();
        r.results["dims"] = dims;
        r.results["max_all"] = max_all;
        r.results["codes_with_lift_distance_ge_24"] = admissible;
        r.results["max_lift_distance_ge_24"] = max_admissible;
        r.results["above_2"] = exceptional;
        std::vector<std::size_t> a_sorted = dims, b_sorted = alt_dims;
        std::sort(a_sorted.begin(), a_sorted.end());
        std::sort(b_sorted.begin(), b_sorted.end());
        r.results["interleaved_alignment_same_multiset"] = a_sorted == b_sorted;
        ordered_json cases = ordered_json::array();
        for (const auto& sc : order58_structure_cases(max_admissible)) {
            ordered_json trail = ordered_json::array();
            for (const auto& s : sc.trail) trail.push_back(s.to_string());
            cases.push_back({{"case", sc.label}, {"y", sc.y}, {"z", sc.z}, {"dim_B", sc.dim_b},
                             {"admissible", sc.admissible}, {"trail", trail}});
        }
        r.results["structure_cases"] = cases;
        r.results["unverified_premises"] = {"Aut(B) has exactly 14 conjugacy classes of elements of type 29-(2,2)"};
    } else if (check == "dc-search") {
        if (!f.heavy)
            throw std::invalid_argument("dc-search is a long-running search; pass --heavy to run it");
        DcSearchOptions opt;
        opt.d_target = f.d_target;
        opt.budget = f.budget;
        opt.shard_index = f.shard_index;
        opt.shard_count = f.shard_count;
        opt.enumeration = enumeration(g);
        const SearchOutcome o = search_bordered_dc_60(opt);
        const Perm shift = bordered_dc_shift(29);
        ordered_json survivors = ordered_json::array();
        for (std::size_t i = 0; i < o.survivors.size(); ++i) {
            const auto& cert = o.certificates[i];
            survivors.push_back({{"code", cert.note},
                                 {"min_distance", cert.min_distance},
                                 {"doubly_even", cert.doubly_even},
                                 {"shift_automorphism", is_automorphism(o.survivors[i], shift)},
                                 {"weights", to_json(cert.weights)}});
        }
        ordered_json classes = ordered_json::array();
        for (const auto& we : weight_classes(o)) classes.push_back(to_json(we));
        r.inputs["shard"] = std::to_string(f.shard_index) + "/" + std::to_string(f.shard_count);
        r.results["d_target"] = f.d_target;
        r.results["first_rows_examined"] = o.examined;
        r.results["complete"] = o.complete;
        if (!o.note.empty()) r.results["note"] = o.note;
        r.results["shift_type"] = aut_type(shift, 29).to_string();
        r.results["survivors"] = survivors;
        r.results["weight_classes"] = classes;
        if (o.complete) {
            const DcClassification cls = classify_bordered_dc(o, 29, opt.enumeration);
            r.results["classification"] = {{"weight_classes", cls.weight_classes},
                                           {"multiplier_orbits", cls.multiplier_orbits},
                                           {"invariant_classes", cls.invariant_classes},
                                           {"equivalence_classes", cls.exact() ? ordered_json(cls.multiplier_orbits)
                                                                               : ordered_json(nullptr)},
                                           {"class_of", cls.class_of}};
        }
        r.definitive = o.complete;
    } else {
        throw std::invalid_argument("unknown order58 check '" + check + "' (use enumerate, pullback or dc-search)");
    }
    return r;
}

Report cmd_gen_code(const std::string& name, const std::string& out_path) {
    Report r;
    LinearCode c;
    if (name == "golay24") {
        c = golay24();
    } else if (name == "hamming8") {
        c = extended_hamming8();
    } else if (name.rfind("xqr:", 0) == 0) {
        c = xqr(std::stoull(name.substr(4)));
    } else {
        throw std::invalid_argument("unknown code '" + name + "' (use golay24, hamming8 or xqr:<q>)");
    }
    std::ostringstream text;
    write_code(text, c, name);
    if (out_path.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream(out_path) << text.str();
    }
    r.results = code_params(c);
    r.results["name"] = name;
    r.results["digest"] = "fnv1a:" + fnv1a_hex(text.str());
    return r;
}

Report cmd_gen_perm(std::uint64_t q, std::uint64_t target, const std::string& out_path, const Globals& g) {
    Report r;
    const auto found = find_element_of_order(psl2_generators(q), target, g.seed, 10000);
    r.results["q"] = q;
    r.results["order"] = target;
    r.results["seed"] = g.seed;
    if (!found) {
        r.results["found"] = false;
        r.definitive = false;
        return r;
    }
    const std::string text = "deg=" + std::to_string(found->degree()) + " " + found->to_string() + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream(out_path) << text;
    }
    r.results["found"] = true;
    r.results["perm"] = found->to_string();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sdcodes: binary self-dual codes, automorphisms and module structure"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--seed", g.seed, "Seed for randomized subroutines")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads for enumeration (0 = all cores)");
    app.add_option("--isa", g.isa, "Enumeration kernel: auto, scalar or avx2")->capture_default_str();

    std::string code_path, perm_path, table_path, target, check, name, out_path;
    unsigned p = 0;
    std::size_t d_min = 0;
    std::uint64_t q = 0, perm_order = 0;
    Order58Flags o58;
    std::string shard = "0/1";

    auto* info = app.add_subcommand("info", "Parameters of a code file");
    info->add_option("code", code_path, "Code file")->required();

    auto* dec = app.add_subcommand("decompose", "Module structure under an automorphism of order 2p");
    dec->add_option("code", code_path, "Code file")->required();
    dec->add_option("perm", perm_path, "Permutation file")->required();
    dec->add_option("-p,--p", p, "Odd prime p")->required();

    auto* exc = app.add_subcommand("exclude", "Exclusion arguments");
    exc->add_option("target", target, "38 | 2p2:<p> | prime-bound:<m>")->required();
    exc->add_option("--table", table_path, "Best-known distance table (CSV n,k,d_upper)");
    exc->add_option("--d-min", d_min, "Minimum distance for 2p2:<p>");

    auto* o58cmd = app.add_subcommand("order58", "Computations for an automorphism of order 58 at length 120");
    o58cmd->add_option("check", check, "enumerate | pullback | dc-search")->required();
    o58cmd->add_flag("--heavy", o58.heavy, "Allow the long-running dc-search");
    o58cmd->add_option("--shard", shard, "Shard i/N of the first-row range")->capture_default_str();
    o58cmd->add_option("--budget", o58.budget, "Stop after this many first rows (0 = no limit)");
    o58cmd->add_option("--d-target", o58.d_target, "Minimum distance kept by dc-search")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Write fixtures");
    gen->require_subcommand(1);
    gen->fallthrough();
    auto* gcode = gen->add_subcommand("code", "Named code");
    gcode->add_option("name", name, "golay24 | hamming8 | xqr:<q>")->required();
    gcode->add_option("-o,--output", out_path, "Output file (default stdout)");
    auto* gperm = gen->add_subcommand("perm", "Element of given order in PSL(2,q) on the projective line");
    gperm->add_option("--q", q, "Prime q")->required();
    gperm->add_option("--order", perm_order, "Element order")->required();
    gperm->add_option("-o,--output", out_path, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    std::ostringstream echo;
    for (int i = 0; i < argc; ++i) echo << (i ? " " : "") << argv[i];

    const auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        if (info->parsed()) {
            report = cmd_info(code_path, g);
        } else if (dec->parsed()) {
            report = cmd_decompose(code_path, perm_path, p);
        } else if (exc->parsed()) {
            report = cmd_exclude(target, table_path, d_min);
        } else if (o58cmd->parsed()) {
            char slash = 0;
            std::istringstream ss(shard);
            if (!(ss >> o58.shard_index >> slash >> o58.shard_count) || slash != '/' || o58.shard_count == 0 ||
                o58.shard_index >= o58.shard_count)
                throw std::invalid_argument("--shard must be i/N with 0 <= i < N");
            report = cmd_order58(check, o58, g);
        } else if (gcode->parsed()) {
            report = cmd_gen_code(name, out_path);
        } else if (gperm->parsed()) {
            report = cmd_gen_perm(q, perm_order, out_path, g);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    ordered_json doc{{"command", echo.str()},
                     {"inputs", report.inputs},
                     {"seed", g.seed},
                     {"results", report.results},
                     {"definitive", report.definitive},
                     {"timing_ms", ms}};
    // gen writes its payload to stdout unless -o is given; keep the report off stdout then.
    const bool payload_on_stdout = (gcode->parsed() || gperm->parsed()) && out_path.empty();
    std::ostream& out = payload_on_stdout ? std::cerr : std::cout;
    if (g.json) {
        out << doc.dump(2) << "\n";
    } else {
        print_text(doc, "", out);
    }
    return report.definitive ? 0 : 1;
}
