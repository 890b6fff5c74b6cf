// macc: multi-access coded caching pipeline driver.
//
// Subcommands: place, deliver, decode, verify, sweep, demo. Exit status
// is 0 iff the command ran without errors and without failures.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macc/cyclic.hpp"
#include "macc/errors.hpp"
#include "macc/io.hpp"

namespace {

struct ParamFlags {
    int file_count = 0;
    int cache_count = 0;
    int access_span = 0;
    int subfile_bits = 64;
    std::uint64_t seed = 0;
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags, bool with_params = true) {
    if (with_params) {
        cmd->add_option("-N,--files", flags.file_count, "number of files")->required();
        cmd->add_option("-K,--caches", flags.cache_count, "number of caches (= users)")->required();
        cmd->add_option("-L,--span", flags.access_span, "caches each user reads")->required();
        cmd->add_option("--subfile-bits", flags.subfile_bits, "bits per subfile")
            ->capture_default_str();
    }
    cmd->add_option("--seed", flags.seed, "store generator seed")->capture_default_str();
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw macc::Error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw macc::Error("read failed on " + path);
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw macc::Error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw macc::Error("write failed on " + path);
}

macc::DemandVector parse_demand(const std::string& text) {
    macc::DemandVector demand;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            demand.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw macc::ParamError("demand entry '" + item + "' is not an integer");
        }
    }
    if (demand.empty()) throw macc::ParamError("empty demand vector");
    return demand;
}

std::vector<std::array<int, 3>> parse_grid(const std::string& text) {
    std::vector<std::array<int, 3>> grid;
    std::istringstream in(text);
    std::string triple;
    while (std::getline(in, triple, ';')) {
        std::istringstream t(triple);
        std::array<int, 3> nkl{};
        std::string item;
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(t, item, ','))
                throw macc::ParamError("grid triple '" + triple + "' needs N,K,L");
            try {
                nkl[static_cast<std::size_t>(i)] = std::stoi(item);
            } catch (const std::exception&) {
                throw macc::ParamError("grid entry '" + item + "' is not an integer");
            }
        }
        if (std::getline(t, item, ','))
            throw macc::ParamError("grid triple '" + triple + "' has more than N,K,L");
        grid.push_back(nkl);
    }
    if (grid.empty()) throw macc::ParamError("empty sweep grid");
    return grid;
}

std::string subfile_label(int file, int position) {
    return "W_{" + std::to_string(file) + "," + std::to_string(position) + "}";
}

std::string coded_label(int position, int file_count) {
    std::string s;
    for (int n = 1; n <= file_count; ++n) {
        if (n > 1) s += "^";
        s += subfile_label(n, position);
    }
    return s;
}

int run_place(const ParamFlags& flags, const std::string& out_path) {
    const macc::SystemParams p = macc::validate_params(flags.file_count, flags.cache_count,
                                                       flags.access_span, flags.subfile_bits);
    const macc::CacheArray caches = macc::place(macc::generate_store(p, flags.seed));
    write_file(out_path, macc::serialize_caches(caches));
    std::cout << "wrote cache image: " << out_path << " (M = " << p.memory.str()
              << " file units per cache)\n";
    return 0;
}

int run_deliver(const ParamFlags& flags, const std::string& demand_text,
                const std::string& out_path) {
    const macc::SystemParams p = macc::validate_params(flags.file_count, flags.cache_count,
                                                       flags.access_span, flags.subfile_bits);
    const macc::DemandVector demand = parse_demand(demand_text);
    const macc::Transcript t = macc::deliver(demand, macc::generate_store(p, flags.seed));
    write_file(out_path, macc::serialize_transcript(t));
    std::cout << "wrote transcript: " << out_path << " (" << t.entries.size()
              << " subfiles, rate " << macc::rate_of(t).str() << " file units)\n";
    return 0;
}

int run_decode(std::uint64_t seed, const std::string& cache_path, const std::string& transcript_path,
               int user) {
    if (cache_path == transcript_path)
        throw macc::ParamError("cache image and transcript paths must be distinct");
    const macc::CacheArray caches = macc::deserialize_caches(read_file(cache_path));
    const macc::Transcript t = macc::deserialize_transcript(read_file(transcript_path));
    if (!(caches.params == t.params))
        throw macc::IntegrityError("cache image and transcript disagree on (N,K,L,subfile_bits)");
    const macc::SystemParams& p = caches.params;
    const macc::FileStore store = macc::generate_store(p, seed);

    int first = user == 0 ? 1 : user;
    int last = user == 0 ? p.cache_count : user;
    if (first < 1 || last > p.cache_count) throw macc::ParamError("user index out of range");

    bool all_ok = true;
    for (int k = first; k <= last; ++k) {
        const int want = t.demand[static_cast<std::size_t>(k - 1)];
        const macc::BitString got = macc::decode_user(macc::build_user_view(k, caches, t));
        const bool ok = got == store.files[static_cast<std::size_t>(want - 1)];
        all_ok = all_ok && ok;
        std::cout << "user " << k << " wants file " << want << ": "
                  << (ok ? "bit-exact" : "MISMATCH") << "\n";
    }
    return all_ok ? 0 : 1;
}

int run_verify(const ParamFlags& flags, std::uint64_t budget) {
    const macc::SystemParams p = macc::validate_params(flags.file_count, flags.cache_count,
                                                       flags.access_span, flags.subfile_bits);
    const macc::VerificationReport report = macc::verify_all_demands(p, flags.seed, budget);
    std::cout << macc::render_report(report);
    return report.ok() ? 0 : 1;
}

int run_sweep(const std::string& grid_text, int subfile_bits, std::uint64_t seed,
              std::uint64_t budget, const std::string& out_path) {
    const std::vector<macc::SweepRow> rows =
        macc::sweep(parse_grid(grid_text), subfile_bits, seed, budget);
    const std::string csv = macc::emit_sweep_csv(rows);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        write_file(out_path, std::vector<std::uint8_t>(csv.begin(), csv.end()));
        std::cout << "wrote sweep: " << out_path << "\n";
    }
    for (const macc::SweepRow& row : rows)
        if (row.valid && row.failures != 0) return 1;
    return 0;
}

int run_demo(const ParamFlags& flags, const std::string& demand_text) {
    const macc::SystemParams p = macc::validate_params(flags.file_count, flags.cache_count,
                                                       flags.access_span, flags.subfile_bits);
    std::cout << "multi-access coded caching, N=" << p.file_count << " K=" << p.cache_count
              << " L=" << p.access_span << "\n";
    std::cout << "per-cache memory M = " << p.memory.str() << " file units ("
              << p.coded_per_cache << " coded files of size 1/" << p.cache_count << ")\n\n";

    std::cout << "cache contents:\n";
    for (int k = 1; k <= p.cache_count; ++k) {
        std::cout << "  Z_" << k << ":";
        for (int j : macc::cache_content_indices(k, p))
            std::cout << "  " << coded_label(j, p.file_count);
        std::cout << "\n";
    }

    std::cout << "\naccessible coded files per user (missing one in brackets):\n";
    for (int k = 1; k <= p.cache_count; ++k) {
        std::cout << "  U_" << k << ":";
        for (int j : macc::accessible_coded_indices(k, p)) std::cout << " F_" << j;
        std::cout << "  [F_" << macc::mod_index(k - 1, p.cache_count) << "]\n";
    }

    std::vector<macc::DemandVector> demos;
    if (!demand_text.empty()) {
        demos.push_back(parse_demand(demand_text));
    } else if (p.file_count == 2 && p.cache_count == 5 && p.access_span == 2) {
        demos = {{1, 2, 1, 2, 2}, {1, 1, 2, 2, 2}, {1, 2, 2, 2, 2}};
    } else if (p.file_count == 3 && p.cache_count == 5 && p.access_span == 2) {
        demos = {{1, 2, 3, 1, 2}};
    } else {
        macc::DemandVector d(static_cast<std::size_t>(p.cache_count));
        for (int k = 1; k <= p.cache_count; ++k)
            d[static_cast<std::size_t>(k - 1)] = macc::mod_index(k, p.file_count);
        demos.push_back(std::move(d));
    }

    const macc::FileStore store = macc::generate_store(p, flags.seed);
    std::cout << "\ntransmissions (rate N-1 = " << p.file_count - 1 << " file units):\n";
    for (const macc::DemandVector& d : demos) {
        const macc::Transcript t = macc::deliver(d, store);
        std::cout << "  d=(";
        for (std::size_t i = 0; i < d.size(); ++i) std::cout << (i == 0 ? "" : ",") << d[i];
        std::cout << "):";
        for (const macc::TranscriptEntry& e : t.entries)
            std::cout << " " << subfile_label(e.file, e.position);
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-access coded caching: coded placement at M=(K-1)/(KL), delivery at rate N-1"};
    app.require_subcommand(1);

    ParamFlags flags;
    std::string demand_text;
    std::string grid_text;
    std::string cache_path;
    std::string transcript_path;
    std::string out_path;
    std::uint64_t budget = 100000;
    int user = 0;

    CLI::App* place = app.add_subcommand("place", "fill caches and write a cache image");
    add_param_flags(place, flags);
    place->add_option("-o,--out", out_path, "cache image path")->required();

    CLI::App* deliver = app.add_subcommand("deliver", "broadcast for a demand vector");
    add_param_flags(deliver, flags);
    deliver->add_option("-d,--demand", demand_text, "comma-separated demand vector")->required();
    deliver->add_option("-o,--out", out_path, "transcript path")->required();

    CLI::App* decode = app.add_subcommand("decode", "decode users from cache image + transcript");
    add_param_flags(decode, flags, false);
    decode->add_option("--cache-image", cache_path, "cache image path")->required();
    decode->add_option("--transcript", transcript_path, "transcript path")->required();
    decode->add_option("-u,--user", user, "user to decode (default: all)");

    CLI::App* verify = app.add_subcommand("verify", "sweep demand vectors and verify decoding");
    add_param_flags(verify, flags);
    verify->add_option("--budget", budget, "max demand vectors to check")->capture_default_str();

    CLI::App* sweep = app.add_subcommand("sweep", "rate/memory table over a parameter grid");
    sweep->add_option("--grid", grid_text, "semicolon-separated N,K,L triples")->required();
    sweep->add_option("--subfile-bits", flags.subfile_bits)->capture_default_str();
    sweep->add_option("--seed", flags.seed)->capture_default_str();
    sweep->add_option("--budget", budget)->capture_default_str();
    sweep->add_option("-o,--out", out_path, "CSV path (default: stdout)");

    CLI::App* demo = app.add_subcommand("demo", "print placement and transmissions symbolically");
    add_param_flags(demo, flags);
    demo->add_option("-d,--demand", demand_text, "demand vector to demonstrate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (place->parsed()) return run_place(flags, out_path);
        if (deliver->parsed()) return run_deliver(flags, demand_text, out_path);
        if (decode->parsed()) return run_decode(flags.seed, cache_path, transcript_path, user);
        if (verify->parsed()) return run_verify(flags, budget);
        if (sweep->parsed()) return run_sweep(grid_text, flags.subfile_bits, flags.seed, budget, out_path);
        if (demo->parsed()) return run_demo(flags, demand_text);
    } catch (const macc::ParamError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const macc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
