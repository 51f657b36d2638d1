// pacsim — CLI front end: Monte-Carlo FER simulation, decoding time-step
// reports, rate-profile export, and encoder self-checks.
// Exit codes: 0 success, 1 failed self-check, 2 parameter error, 3 I/O error.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pac/pac.hpp"

namespace {

pac::BitVector parse_conv(const std::string& text) {
    pac::BitVector c;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "0")
            c.push_back(0);
        else if (tok == "1")
            c.push_back(1);
        else
            throw pac::ParamError("--conv: expected comma-separated 0/1 bits, got '" + tok + "'");
    }
    if (c.empty()) throw pac::ParamError("--conv: empty impulse response");
    if (c.front() != 1 || c.back() != 1)
        throw pac::ParamError("--conv: impulse response must start and end with 1");
    return c;
}

std::vector<double> parse_ebn0(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw pac::ParamError("--ebn0: expected <value> or <start:step:stop>, got '" + text + "'");
        }
    }
    if (parts.size() == 1) return {parts[0]};
    if (parts.size() != 3)
        throw pac::ParamError("--ebn0: expected <value> or <start:step:stop>, got '" + text + "'");
    const double start = parts[0], step = parts[1], stop = parts[2];
    if (stop < start) throw pac::ParamError("--ebn0: stop must not be below start");
    if (step <= 0.0) {
        if (stop == start) return {start};
        throw pac::ParamError("--ebn0: step must be positive");
    }
    const double count = std::floor((stop - start) / step + 1e-9) + 1;
    if (count > 100000) throw pac::ParamError("--ebn0: too many points");
    std::vector<double> points;
    for (double i = 0; i < count; ++i) points.push_back(start + i * step);
    return points;
}

// Resolve --n/--k/--profile into a profile; "rm" derives it, "file:PATH" loads
// and cross-checks against any explicitly given --n/--k.
pac::CodeConfig build_config(std::size_t n, std::size_t k, const std::string& profile,
                             const pac::BitVector& conv) {
    std::vector<std::size_t> A;
    if (profile == "rm") {
        if (n == 0) throw pac::ParamError("--n is required with --profile rm");
        A = pac::rm_profile(n, k).info_indices();
    } else if (profile.rfind("file:", 0) == 0) {
        const pac::ProfileFile pf = pac::load_profile_file(profile.substr(5));
        if (n != 0 && n != pf.N)
            throw pac::ParamError("--n disagrees with the profile file's N");
        if (k != 0 && k != pf.K)
            throw pac::ParamError("--k disagrees with the profile file's K");
        n = pf.N;
        k = pf.K;
        A = pf.A;
    } else {
        throw pac::ParamError("--profile: expected 'rm' or 'file:PATH', got '" + profile + "'");
    }
    return pac::make_config(n, k, std::move(A), conv);
}

pac::Variant parse_variant(const std::string& text) {
    const auto v = pac::variant_from_string(text);
    if (!v) throw pac::ParamError("--variant: expected list, fast3, or fast4, got '" + text + "'");
    return *v;
}

// Writes to the path when given, else to stdout.
void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw pac::IoError("cannot open output file: " + out_path);
    os << payload;
    if (!os) throw pac::IoError("failed writing output file: " + out_path);
}

struct SimulateArgs {
    std::size_t n = 0, k = 0;
    std::string profile = "rm";
    std::string conv = "1,0,1,1,0,1,1";
    std::size_t list_size = 0;
    std::string variant;
    std::string ebn0;
    std::uint64_t min_errors = 500;
    std::uint64_t max_frames = 10000000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::string out;
    std::string format = "csv";
};

int cmd_simulate(const SimulateArgs& a) {
    const pac::CodeConfig cfg = build_config(a.n, a.k, a.profile, parse_conv(a.conv));
    const pac::Variant variant = parse_variant(a.variant);
    const std::vector<double> points = parse_ebn0(a.ebn0);
    if (a.format != "csv" && a.format != "json")
        throw pac::ParamError("--format: expected csv or json, got '" + a.format + "'");
    if (a.list_size < 1) throw pac::ParamError("--list-size must be at least 1");

    const std::vector<pac::FerRecord> records = pac::run_fer(
        cfg, a.list_size, variant, points, a.min_errors, a.max_frames, a.seed, a.workers);

    if (a.format == "csv") {
        std::ostringstream os;
        pac::write_fer_csv(os, records, variant, cfg.N, cfg.K, a.list_size, a.seed);
        emit(a.out, os.str());
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const pac::FerRecord& r : records) {
            arr.push_back({{"ebn0_db", r.ebn0_db},
                           {"frames", r.frames},
                           {"errors", r.errors},
                           {"fer", r.fer},
                           {"variant", pac::to_string(variant)},
                           {"n", cfg.N},
                           {"k", cfg.K},
                           {"list_size", a.list_size},
                           {"seed", a.seed},
                           {"wall_time_s", r.wall_time_s}});
        }
        emit(a.out, arr.dump(2) + "\n");
    }
    return 0;
}

struct LatencyArgs {
    std::size_t n = 0, k = 0;
    std::string profile = "rm";
    std::size_t list_size = 0;
    std::string variant;
    std::string format = "text";
    std::string out;
};

int cmd_latency(const LatencyArgs& a) {
    // the impulse response does not affect step counts; any valid one will do
    const pac::CodeConfig cfg = build_config(a.n, a.k, a.profile, pac::BitVector{1, 1, 1});
    const pac::Variant variant = parse_variant(a.variant);
    if (a.list_size < 1) throw pac::ParamError("--list-size must be at least 1");
    const pac::TimeStepReport rep = pac::total_time_steps(cfg, a.list_size, variant);
    if (a.format == "text") {
        emit(a.out, pac::format_report_text(rep));
    } else if (a.format == "json") {
        const nlohmann::json j = {
            {"variant", pac::to_string(rep.variant)},
            {"N", rep.N},
            {"K", rep.K},
            {"L", rep.L},
            {"traversal", rep.traversal},
            {"splits", rep.splits},
            {"perKind",
             {{"Rate0", rep.per_kind[0]},
              {"Rate1", rep.per_kind[1]},
              {"Rev", rep.per_kind[2]},
              {"SPC", rep.per_kind[3]}}},
            {"total", rep.total}};
        emit(a.out, j.dump(2) + "\n");
    } else {
        throw pac::ParamError("--format: expected text or json, got '" + a.format + "'");
    }
    return 0;
}

struct ProfileArgs {
    std::size_t n = 0, k = 0;
    std::string profile = "rm";
    std::string out;
};

int cmd_profile(const ProfileArgs& a) {
    const pac::CodeConfig cfg = build_config(a.n, a.k, a.profile, pac::BitVector{1, 1, 1});
    std::ostringstream os;
    pac::format_profile_text(os, cfg.N, cfg.A);
    emit(a.out, os.str());
    return 0;
}

struct EncodeCheckArgs {
    std::size_t n = 64, k = 32;
    std::string profile = "rm";
    std::string conv = "1,0,1,1,0,1,1";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
};

int cmd_encode_check(const EncodeCheckArgs& a) {
    const pac::CodeConfig cfg = build_config(a.n, a.k, a.profile, parse_conv(a.conv));
    bool all_ok = true;
    const auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << " (" << a.trials << " trials)\n";
        all_ok = all_ok && ok;
    };

    bool loopback = true, involution = true, roundtrip = true, linear = true;
    for (std::uint64_t t = 0; t < a.trials; ++t) {
        pac::CounterRng rng(a.seed, t, pac::kStreamData);
        pac::BitVector d(cfg.K);
        for (pac::Bit& b : d) b = rng.next_bit();
        const pac::BitVector x = pac::pac_encode(d, cfg);
        pac::LlrVector llr(cfg.N);
        for (std::size_t i = 0; i < cfg.N; ++i) llr[i] = x[i] ? -20.0 : 20.0;
        if (pac::decode_list(llr, cfg, 1).info_bits != d) loopback = false;

        pac::BitVector r(cfg.N), r2(cfg.N);
        for (std::size_t i = 0; i < cfg.N; ++i) r[i] = rng.next_bit();
        for (std::size_t i = 0; i < cfg.N; ++i) r2[i] = rng.next_bit();
        if (pac::polar_transform(pac::polar_transform(r)) != r) involution = false;
        if (pac::conv_decode(pac::conv_encode(r, cfg.c), cfg.c) != r) roundtrip = false;
        pac::BitVector sum(cfg.N);
        for (std::size_t i = 0; i < cfg.N; ++i) sum[i] = r[i] ^ r2[i];
        const pac::BitVector ea = pac::conv_encode(r, cfg.c);
        const pac::BitVector eb = pac::conv_encode(r2, cfg.c);
        pac::BitVector esum = pac::conv_encode(sum, cfg.c);
        for (std::size_t i = 0; i < cfg.N; ++i) esum[i] ^= ea[i] ^ eb[i];
        if (esum != pac::BitVector(cfg.N, 0)) linear = false;
    }
    report("noiseless encode/decode loopback", loopback);
    report("polar transform involution", involution);
    report("convolution round trip", roundtrip);
    report("convolution linearity", linear);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pacsim — PAC code construction, list decoding, and FER simulation"};
    app.require_subcommand(1);

    SimulateArgs sa;
    CLI::App* sim = app.add_subcommand("simulate", "Monte-Carlo frame-error-rate simulation");
    sim->add_option("--n", sa.n, "codeword length (power of two)");
    sim->add_option("--k", sa.k, "information length");
    sim->add_option("--profile", sa.profile, "rate profile: rm or file:PATH")->capture_default_str();
    sim->add_option("--conv", sa.conv, "impulse response bits, comma-separated")->capture_default_str();
    sim->add_option("--list-size", sa.list_size, "list size L")->required();
    sim->add_option("--variant", sa.variant, "decoder: list, fast3, or fast4")->required();
    sim->add_option("--ebn0", sa.ebn0, "Eb/N0 in dB: <value> or <start:step:stop>")->required();
    sim->add_option("--min-errors", sa.min_errors, "error frames to collect per point")
        ->capture_default_str();
    sim->add_option("--max-frames", sa.max_frames, "frame budget per point")->capture_default_str();
    sim->add_option("--seed", sa.seed, "master seed")->capture_default_str();
    sim->add_option("--workers", sa.workers, "worker threads (results are worker-independent)")
        ->capture_default_str();
    sim->add_option("--out", sa.out, "output path (default: stdout)");
    sim->add_option("--format", sa.format, "output format: csv or json")->capture_default_str();

    LatencyArgs la;
    CLI::App* lat = app.add_subcommand("latency", "decoding time-step report");
    lat->add_option("--n", la.n, "codeword length (power of two)");
    lat->add_option("--k", la.k, "information length");
    lat->add_option("--profile", la.profile, "rate profile: rm or file:PATH")->capture_default_str();
    lat->add_option("--list-size", la.list_size, "list size L")->required();
    lat->add_option("--variant", la.variant, "decoder: list, fast3, or fast4")->required();
    lat->add_option("--format", la.format, "output format: text or json")->capture_default_str();
    lat->add_option("--out", la.out, "output path (default: stdout)");

    ProfileArgs pa;
    CLI::App* prof = app.add_subcommand("profile", "emit a rate profile as text");
    prof->add_option("--n", pa.n, "codeword length (power of two)");
    prof->add_option("--k", pa.k, "information length");
    prof->add_option("--profile", pa.profile, "rate profile: rm or file:PATH")->capture_default_str();
    prof->add_option("--out", pa.out, "output path (default: stdout)");

    EncodeCheckArgs ea;
    CLI::App* enc = app.add_subcommand("encode-check", "encoder self-checks (exit 1 on failure)");
    enc->add_option("--n", ea.n, "codeword length (power of two)")->capture_default_str();
    enc->add_option("--k", ea.k, "information length")->capture_default_str();
    enc->add_option("--profile", ea.profile, "rate profile: rm or file:PATH")->capture_default_str();
    enc->add_option("--conv", ea.conv, "impulse response bits, comma-separated")->capture_default_str();
    enc->add_option("--trials", ea.trials, "random trials per check")->capture_default_str();
    enc->add_option("--seed", ea.seed, "master seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sa);
        if (lat->parsed()) return cmd_latency(la);
        if (prof->parsed()) return cmd_profile(pa);
        if (enc->parsed()) return cmd_encode_check(ea);
        std::cerr << "pacsim: no subcommand given\n";
        return 2;
    } catch (const pac::IoError& e) {
        std::cerr << "pacsim: " << e.what() << "\n";
        return 3;
    } catch (const pac::ParamError& e) {
        std::cerr << "pacsim: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "pacsim: " << e.what() << "\n";
        return 2;
    }
}
