// Command-line front end: hide a message in a PGM cover, reveal it again,
// or compare two images. Exit codes: 0 success, 2 bad arguments,
// 3 capacity/format errors, 4 integrity failures (wrong keys/corruption).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stegodct/error.hpp"
#include "stegodct/pgm.hpp"
#include "stegodct/pipeline.hpp"

namespace {

int exit_code_for(stegodct::ErrorKind kind) {
  using stegodct::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return 2;
    case ErrorKind::MalformedHex:
    case ErrorKind::DimensionNotMultipleOf8:
    case ErrorKind::NonFiniteCoefficient:
    case ErrorKind::InsufficientCapacity:
    case ErrorKind::NotFound:
    case ErrorKind::BadMagic:
    case ErrorKind::MaxvalNot255:
    case ErrorKind::TruncatedData:
    case ErrorKind::TooSmall:
    case ErrorKind::IoFailure:
    case ErrorKind::KeyfileMalformed:
      return 3;
    case ErrorKind::InvalidPadding:
    case ErrorKind::LengthMismatch:
    case ErrorKind::CharsetViolation:
    case ErrorKind::PlanPlaneMismatch:
    case ErrorKind::DimensionMismatch:
      return 4;
  }
  return 3;
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    stegodct::raise(stegodct::ErrorKind::NotFound, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_bytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    stegodct::raise(stegodct::ErrorKind::IoFailure, "cannot open " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out)
    stegodct::raise(stegodct::ErrorKind::IoFailure, "write failed on " + path);
}

std::string quality_line(const stegodct::QualityReport& q) {
  const std::string db = std::isinf(q.psnr_db)
                             ? "inf"
                             : stegodct::format_decimal(q.psnr_db);
  return "MSE=" + stegodct::format_decimal(q.mse) + " PSNR_DB=" + db +
         " CHANGED=" + std::to_string(q.changed_pixels);
}

struct HideArgs {
  std::string cover, out, msg, msg_file, key1, key2, keys_out;
  double d = stegodct::kDefaultPersistence;
  std::optional<double> t;
};

int run_hide(const HideArgs& args, bool msg_given) {
  const stegodct::AesKey key1 = stegodct::AesKey::from_hex(args.key1);
  const stegodct::ScrambleKey key2 = stegodct::ScrambleKey::from_hex(args.key2);
  const std::string message =
      msg_given ? args.msg : read_file_bytes(args.msg_file);
  const double t = args.t.value_or(2.0 * args.d);

  const stegodct::GrayImage cover = stegodct::load_pgm(args.cover);
  const stegodct::HideResult result =
      stegodct::hide_message(message, cover, key1, key2, args.d, t);

  stegodct::save_pgm(result.stego, args.out);
  write_file_bytes(args.keys_out, stegodct::serialize_key_file(result.keys));
  std::cout << quality_line(result.quality) << "\n";
  return 0;
}

struct RevealArgs {
  std::string cover, stego, key1, key2, keys;
};

int run_reveal(const RevealArgs& args) {
  const stegodct::AesKey key1 = stegodct::AesKey::from_hex(args.key1);
  const stegodct::ScrambleKey key2 = stegodct::ScrambleKey::from_hex(args.key2);
  const stegodct::KeyFile keys =
      stegodct::parse_key_file(read_file_bytes(args.keys));

  const stegodct::GrayImage cover = stegodct::load_pgm(args.cover);
  const stegodct::GrayImage stego = stegodct::load_pgm(args.stego);

  const stegodct::RevealResult result =
      stegodct::reveal_message(stego, cover, key1, key2, keys);
  for (int site : result.weak_sites)
    std::cerr << "warning: weak coefficient difference at site " << site
              << " (|diff| < d/2)\n";
  std::cout << result.plaintext << "\n";
  return 0;
}

int run_psnr(const std::string& a_path, const std::string& b_path) {
  const stegodct::GrayImage a = stegodct::load_pgm(a_path);
  const stegodct::GrayImage b = stegodct::load_pgm(b_path);
  std::cout << quality_line(stegodct::psnr(a, b)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DCT-domain steganography for AES-encrypted text"};
  app.require_subcommand(1);

  HideArgs hide_args;
  CLI::App* hide = app.add_subcommand("hide", "Embed a message in a cover image");
  hide->add_option("--cover", hide_args.cover, "cover PGM (P5)")->required();
  hide->add_option("--out", hide_args.out, "stego PGM output path")->required();
  CLI::Option* msg_opt = hide->add_option("--msg", hide_args.msg, "message text");
  CLI::Option* msg_file_opt =
      hide->add_option("--msg-file", hide_args.msg_file, "message file (bytes)");
  msg_opt->excludes(msg_file_opt);
  hide->add_option("--key1", hide_args.key1, "AES key, 32 hex chars")->required();
  hide->add_option("--key2", hide_args.key2, "scramble key, 16 hex chars")->required();
  hide->add_option("--keys-out", hide_args.keys_out, "key file output path")->required();
  hide->add_option("--d", hide_args.d, "persistence factor (default 30)");
  double t_value = 0.0;
  CLI::Option* t_opt =
      hide->add_option("--t", t_value, "selection threshold (default 2*d)");

  RevealArgs reveal_args;
  CLI::App* reveal =
      app.add_subcommand("reveal", "Recover a message from a stego image");
  reveal->add_option("--cover", reveal_args.cover, "original cover PGM")->required();
  reveal->add_option("--stego", reveal_args.stego, "stego PGM")->required();
  reveal->add_option("--key1", reveal_args.key1, "AES key, 32 hex chars")->required();
  reveal->add_option("--key2", reveal_args.key2, "scramble key, 16 hex chars")->required();
  reveal->add_option("--keys", reveal_args.keys, "key file from the hide run")->required();

  std::string psnr_a, psnr_b;
  CLI::App* psnr_cmd = app.add_subcommand("psnr", "Compare two PGM images");
  psnr_cmd->add_option("a", psnr_a, "first image")->required();
  psnr_cmd->add_option("b", psnr_b, "second image")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (hide->parsed()) {
      if (msg_opt->count() == 0 && msg_file_opt->count() == 0) {
        std::cerr << "error: one of --msg or --msg-file is required\n";
        return 2;
      }
      if (t_opt->count() > 0) hide_args.t = t_value;
      return run_hide(hide_args, msg_opt->count() > 0);
    }
    if (reveal->parsed()) return run_reveal(reveal_args);
    return run_psnr(psnr_a, psnr_b);
  } catch (const stegodct::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
