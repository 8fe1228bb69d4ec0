// Command line front end: embed two secret-image keys into a cover,
// extract them back, measure quality, and run the two-cover benchmark.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "iwtsteg/imageio.hpp"
#include "iwtsteg/pipeline.hpp"

using namespace iwtsteg;

namespace {

// Bad arguments that CLI11 cannot catch (key material, value combinations).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(errc c) {
    switch (c) {
        case errc::io: return 2;
        case errc::dimension: return 3;
        case errc::capacity: return 4;
        case errc::self_check: return 5;
        case errc::payload_corrupt: return 6;
        case errc::wrong_key: return 7;
        case errc::format: return 8;
        case errc::mode_mismatch:
        case errc::internal: return 9;
    }
    return 9;
}

std::string fmt_db(double v, int digits = 2) {
    if (std::isinf(v)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// --key beats --key-file when both are given (documented in --help).
XorKey resolve_key(const std::string& hex, const std::string& file,
                   const char* fallback = nullptr) {
    XorKey k;
    if (!hex.empty()) {
        if (hex.size() % 2 != 0)
            throw UsageError("--key needs an even number of hex digits");
        for (std::size_t i = 0; i < hex.size(); i += 2) {
            auto nib = [&](char c) -> int {
                if (c >= '0' && c <= '9') return c - '0';
                if (c >= 'a' && c <= 'f') return c - 'a' + 10;
                if (c >= 'A' && c <= 'F') return c - 'A' + 10;
                throw UsageError(std::string("--key: '") + c + "' is not a hex digit");
            };
            k.bytes.push_back(static_cast<std::uint8_t>(nib(hex[i]) * 16 + nib(hex[i + 1])));
        }
        return k;
    }
    if (!file.empty()) {
        std::ifstream in(file, std::ios::binary);
        if (!in) raise(errc::io, file + ": cannot open key file");
        char c;
        while (in.get(c)) k.bytes.push_back(static_cast<std::uint8_t>(c));
        if (k.bytes.empty()) throw UsageError(file + ": key file is empty");
        return k;
    }
    if (fallback) {
        for (const char* p = fallback; *p; ++p)
            k.bytes.push_back(static_cast<std::uint8_t>(*p));
        return k;
    }
    throw UsageError("a key is required: pass --key HEX or --key-file PATH");
}

ConversionMode parse_mode(const std::string& name) {
    try {
        return mode_from_name(name);
    } catch (const StegoError&) {
        throw UsageError("--mode must be 'reversible' or 'bt601'");
    }
}

constexpr const char* kCsvHeader =
    "cover,secrets,stego_psnr_db,secret1_psnr_db,secret2_psnr_db";

struct RunRow {
    std::string cover, secrets;
    double stego_db, s1_db, s2_db;
};

void print_rows(const std::vector<RunRow>& rows, bool csv) {
    if (csv) {
        std::printf("%s\n", kCsvHeader);
        for (const RunRow& r : rows)
            std::printf("%s,%s,%s,%s,%s\n", r.cover.c_str(), r.secrets.c_str(),
                        fmt_db(r.stego_db, 4).c_str(), fmt_db(r.s1_db, 4).c_str(),
                        fmt_db(r.s2_db, 4).c_str());
        return;
    }
    std::printf("%-12s %-18s %12s %14s %14s\n", "cover", "secrets", "stego PSNR",
                "secret1 PSNR", "secret2 PSNR");
    for (const RunRow& r : rows)
        std::printf("%-12s %-18s %9s dB %11s dB %11s dB\n", r.cover.c_str(),
                    r.secrets.c_str(), fmt_db(r.stego_db).c_str(), fmt_db(r.s1_db).c_str(),
                    fmt_db(r.s2_db).c_str());
}

// ---------------------------------------------------------------- embed ---

struct EmbedArgs {
    std::string cover, secret1, secret2, out;
    std::string key_hex, key_file, mode = "reversible", report = "text";
};

int cmd_embed(const EmbedArgs& a) {
    XorKey xk = resolve_key(a.key_hex, a.key_file);
    ConversionMode mode = parse_mode(a.mode);

    RgbImage cover = load_rgb(a.cover);
    PixelPlane s1 = load_gray(a.secret1);
    PixelPlane s2 = load_gray(a.secret2);

    EncodeResult res = encode(cover, s1, s2, xk, mode);
    save_rgb(a.out, res.stego);

    // The extracted-secret quality is known at embed time too: decode our
    // own stego and compare against the secrets we were given.
    DecodeResult dec = decode(res.stego, xk, mode);
    RunRow row{a.cover, a.secret1 + "+" + a.secret2, res.report.psnr_db,
               psnr(s1, dec.secret1), psnr(s2, dec.secret2)};

    if (a.report == "csv") {
        print_rows({row}, true);
        return 0;
    }
    std::printf("wrote %s (%dx%d, mode %s)\n", a.out.c_str(), res.stego.cols(),
                res.stego.rows(), mode_name(mode));
    std::printf("stego PSNR vs cover: %s dB\n", fmt_db(res.report.psnr_db).c_str());
    std::printf("extracted-secret PSNR: %s dB / %s dB\n", fmt_db(row.s1_db).c_str(),
                fmt_db(row.s2_db).c_str());
    std::printf("payload: %zu + %zu bits, capacity %zu bits per channel\n",
                res.digest.payload1_bits, res.digest.payload2_bits,
                res.digest.capacity_bits);
    std::printf("cover samples conditioned: %zu\n", res.digest.conditioned_samples);
    std::printf("self-check: %s\n", res.digest.verified ? "passed" : "FAILED");
    return 0;
}

// -------------------------------------------------------------- extract ---

struct ExtractArgs {
    std::string stego, out1, out2, orig1, orig2;
    std::string key_hex, key_file, mode = "reversible", report = "text";
};

int cmd_extract(const ExtractArgs& a) {
    XorKey xk = resolve_key(a.key_hex, a.key_file);
    ConversionMode mode = parse_mode(a.mode);

    RgbImage stego = load_rgb(a.stego);
    DecodeResult dec = decode(stego, xk, mode);
    save_gray(a.out1, dec.secret1);
    save_gray(a.out2, dec.secret2);

    std::printf("wrote %s (%dx%d, %zu blocks, payload %zu bits%s)\n", a.out1.c_str(),
                dec.secret1.cols(), dec.secret1.rows(), dec.diag1.entry_count,
                dec.diag1.payload_bits, dec.diag1.body_rle ? ", rle" : "");
    std::printf("wrote %s (%dx%d, %zu blocks, payload %zu bits%s)\n", a.out2.c_str(),
                dec.secret2.cols(), dec.secret2.rows(), dec.diag2.entry_count,
                dec.diag2.payload_bits, dec.diag2.body_rle ? ", rle" : "");
    if (!a.orig1.empty())
        std::printf("secret1 PSNR vs %s: %s dB\n", a.orig1.c_str(),
                    fmt_db(psnr(load_gray(a.orig1), dec.secret1)).c_str());
    if (!a.orig2.empty())
        std::printf("secret2 PSNR vs %s: %s dB\n", a.orig2.c_str(),
                    fmt_db(psnr(load_gray(a.orig2), dec.secret2)).c_str());
    return 0;
}

// ----------------------------------------------------------------- psnr ---

struct PsnrArgs {
    std::string ref, test, report = "text";
};

int cmd_psnr(const PsnrArgs& a) {
    LoadedImage ref = load_image(a.ref);
    LoadedImage test = load_image(a.test);
    QualityReport q;
    if (ref.kind == ImageKind::gray && test.kind == ImageKind::gray)
        q = plane_quality(ref.gray, test.gray);
    else
        q = rgb_quality(load_rgb(a.ref), load_rgb(a.test));

    if (a.report == "csv") {
        std::printf("ref,test,mse,psnr_db\n%s,%s,%s,%s\n", a.ref.c_str(), a.test.c_str(),
                    fmt_db(q.mse, 6).c_str(), fmt_db(q.psnr_db, 4).c_str());
        return 0;
    }
    std::printf("PSNR: %s dB (MSE %s over %zu samples)\n", fmt_db(q.psnr_db).c_str(),
                fmt_db(q.mse, 4).c_str(), q.sample_count);
    return 0;
}

// ------------------------------------------------------------ reproduce ---

struct ReproduceArgs {
    std::string corpus, out_dir;
    std::string key_hex, key_file, mode = "reversible", report = "text";
};

const char* kCorpusHelp =
    "expected corpus layout (PNG or binary PNM):\n"
    "  <dir>/peppers.png    256x256 color cover\n"
    "  <dir>/baboon.png     256x256 color cover\n"
    "  <dir>/earth.png      128x128 grayscale secret\n"
    "  <dir>/football.png   128x128 grayscale secret\n"
    "  <dir>/moon.png       128x128 grayscale secret\n"
    "these standard test images are not shipped with the tool";

// Returns the path of the first existing <dir>/<base>.<ext>, or "".
std::string find_corpus_file(const std::string& dir, const std::string& base) {
    for (const char* ext : {".png", ".pnm", ".pgm", ".ppm"}) {
        std::string p = dir + "/" + base + ext;
        if (std::ifstream(p).good()) return p;
    }
    return {};
}

int cmd_reproduce(const ReproduceArgs& a) {
    XorKey xk = resolve_key(a.key_hex, a.key_file, "steg");
    ConversionMode mode = parse_mode(a.mode);

    struct Pair {
        const char* cover;
        const char* s1;
        const char* s2;
    };
    // Cover/secret pairings of the benchmark tables.
    const Pair pairs[] = {{"peppers", "football", "earth"}, {"baboon", "earth", "moon"}};

    std::vector<RunRow> rows;
    std::string missing;
    for (const Pair& p : pairs) {
        std::string cover_path = find_corpus_file(a.corpus, p.cover);
        std::string s1_path = find_corpus_file(a.corpus, p.s1);
        std::string s2_path = find_corpus_file(a.corpus, p.s2);
        if (cover_path.empty() || s1_path.empty() || s2_path.empty()) {
            // Incomplete pair: run whatever the corpus does cover, complain
            // only if nothing at all is runnable.
            for (const char* base : {p.cover, p.s1, p.s2})
                if (find_corpus_file(a.corpus, base).empty())
                    missing += std::string(missing.empty() ? "" : ", ") + base;
            continue;
        }
        RgbImage cover = load_rgb(cover_path);
        PixelPlane s1 = load_gray(s1_path);
        PixelPlane s2 = load_gray(s2_path);

        EncodeResult res = encode(cover, s1, s2, xk, mode);
        DecodeResult dec = decode(res.stego, xk, mode);

        if (!a.out_dir.empty()) {
            save_rgb(a.out_dir + "/" + p.cover + "_stego.png", res.stego);
            save_gray(a.out_dir + "/" + p.cover + "_" + p.s1 + "_out.png", dec.secret1);
            save_gray(a.out_dir + "/" + p.cover + "_" + p.s2 + "_out.png", dec.secret2);
        }
        rows.push_back({p.cover, std::string(p.s1) + "+" + p.s2, res.report.psnr_db,
                        psnr(s1, dec.secret1), psnr(s2, dec.secret2)});
    }
    if (rows.empty())
        raise(errc::io, a.corpus + ": no complete cover/secret pair (missing: " + missing +
                            ")\n" + kCorpusHelp);
    if (!missing.empty())
        std::fprintf(stderr, "note: skipped incomplete pairs, missing: %s\n",
                     missing.c_str());
    print_rows(rows, a.report == "csv");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hide two secret-image keys inside a color cover image"};
    app.require_subcommand(1);

    EmbedArgs em;
    CLI::App* embed = app.add_subcommand("embed", "build keys for two secrets and embed them");
    embed->add_option("--cover", em.cover, "color cover image")->required();
    embed->add_option("--secret1", em.secret1, "first secret (grayscale)")->required();
    embed->add_option("--secret2", em.secret2, "second secret (grayscale)")->required();
    embed->add_option("--out", em.out, "stego output (.png/.pnm, lossless only)")->required();
    embed->add_option("--key", em.key_hex, "XOR key as hex digits (wins over --key-file)");
    embed->add_option("--key-file", em.key_file, "XOR key as a raw byte file");
    embed->add_option("--mode", em.mode, "color transform: reversible|bt601");
    embed->add_option("--report", em.report, "report format: text|csv")
        ->check(CLI::IsMember({"text", "csv"}));

    ExtractArgs ex;
    CLI::App* extract = app.add_subcommand("extract", "recover both secrets from a stego image");
    extract->add_option("--stego", ex.stego, "stego image")->required();
    extract->add_option("--out1", ex.out1, "first recovered secret")->required();
    extract->add_option("--out2", ex.out2, "second recovered secret")->required();
    extract->add_option("--orig1", ex.orig1, "original secret 1, for a PSNR report");
    extract->add_option("--orig2", ex.orig2, "original secret 2, for a PSNR report");
    extract->add_option("--key", ex.key_hex, "XOR key as hex digits (wins over --key-file)");
    extract->add_option("--key-file", ex.key_file, "XOR key as a raw byte file");
    extract->add_option("--mode", ex.mode, "color transform: reversible|bt601");

    PsnrArgs ps;
    CLI::App* psnr_cmd = app.add_subcommand("psnr", "peak signal-to-noise ratio of two images");
    psnr_cmd->add_option("ref", ps.ref, "reference image")->required();
    psnr_cmd->add_option("test", ps.test, "image to compare")->required();
    psnr_cmd->add_option("--report", ps.report, "report format: text|csv")
        ->check(CLI::IsMember({"text", "csv"}));

    ReproduceArgs rp;
    CLI::App* repro = app.add_subcommand("reproduce", "run the two-cover benchmark table");
    repro->add_option("--corpus", rp.corpus, "directory with the standard test images")
        ->required();
    repro->add_option("--out-dir", rp.out_dir, "also write stego and recovered images here");
    repro->add_option("--key", rp.key_hex, "XOR key as hex digits (default: 'steg' bytes)");
    repro->add_option("--key-file", rp.key_file, "XOR key as a raw byte file");
    repro->add_option("--mode", rp.mode, "color transform: reversible|bt601");
    repro->add_option("--report", rp.report, "report format: text|csv")
        ->check(CLI::IsMember({"text", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // normalize all usage failures to 1
    }

    try {
        if (embed->parsed()) return cmd_embed(em);
        if (extract->parsed()) return cmd_extract(ex);
        if (psnr_cmd->parsed()) return cmd_psnr(ps);
        return cmd_reproduce(rp);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const StegoError& e) {
        std::fprintf(stderr, "error (%s): %s\n", errc_name(e.code()), e.what());
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 9;
    }
}
