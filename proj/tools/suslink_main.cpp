#include "suslink/suslink.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <limits>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace suslink;

struct Flags {
  long long r = 2;
  bool keep_arrows = false;
  bool blow_down = false;
  bool no_compare = false;
  std::string format = "text";
  std::string side = "fg";
  std::string output;
  unsigned jobs = 1;
  std::vector<std::string> inputs;

  CLI::Option* r_opt = nullptr;
  CLI::Option* keep_opt = nullptr;
  CLI::Option* blow_opt = nullptr;
  CLI::Option* side_opt = nullptr;
  CLI::Option* compare_opt = nullptr;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Stage::io, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

// Applies a flag given on the command line; refuses when the stage that
// consumes it is already present in the bundle with a different value.
template <class T>
void apply(T& slot, const T& value, bool given, bool consumed, const char* flag) {
  if (!given || slot == value) return;
  if (consumed) throw Error(Stage::io, std::string("input was already computed with a different ") + flag);
  slot = value;
}

Bundle load(const std::string& path, const Flags& f) {
  std::string text = slurp(path);
  Bundle b;
  if (looks_like_json(text)) {
    b = bundle_from_json(text);
    if (!b.input && !b.step1) throw Error(Stage::io, "document carries no pipeline data");
  } else {
    b.input = parse_resolution(text);
  }
  PipelineOptions& o = b.options;
  apply(o.side, parse_side(f.side), f.side_opt->count() > 0, b.step1.has_value(), "--side");
  apply(o.r, Integer(f.r), f.r_opt->count() > 0, b.powered.has_value(), "-r");
  apply(o.keep_arrows, f.keep_arrows, f.keep_opt->count() > 0, b.tree.has_value(), "--keep-arrows");
  apply(o.blow_down, f.blow_down, f.blow_opt->count() > 0, b.tree.has_value(), "--blow-down");
  apply(o.compare_holomorphic, !f.no_compare, f.compare_opt->count() > 0, b.report.has_value(), "--no-compare");
  return b;
}

std::string render(const Bundle& b, StageId stage, bool full, const std::string& format) {
  if (format == "json") return to_json(b);
  if (format == "dot") return to_dot(b, stage, full);
  return to_text(b, stage, full);
}

std::string process(const std::string& path, StageId stage, bool full, const Flags& f) {
  Bundle b = load(path, f);
  if (stage != StageId::input) advance(b, stage);
  return render(b, stage, full, f.format);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Stage::io, "cannot write '" + path + "'");
  out << text;
}

int run(StageId stage, bool full, const Flags& f) {
  if (f.inputs.size() == 1) {
    try {
      emit(process(f.inputs.front(), stage, full, f), f.output);
      return 0;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  // Batch: independent inputs, optionally in parallel; output order follows input order.
  std::vector<std::string> results(f.inputs.size());
  std::vector<std::string> errors(f.inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < f.inputs.size();) {
      try {
        results[i] = process(f.inputs[i], stage, full, f);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(f.jobs, static_cast<unsigned>(f.inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int status = 0;
  std::string ext = f.format == "json" ? ".json" : (f.format == "dot" ? ".dot" : ".txt");
  if (!f.output.empty()) std::filesystem::create_directories(f.output);
  std::ostringstream combined;
  for (std::size_t i = 0; i < f.inputs.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "error: " << f.inputs[i] << ": " << errors[i] << "\n";
      status = 1;
      continue;
    }
    if (!f.output.empty()) {
      auto name = std::filesystem::path(f.inputs[i]).stem().string() + ext;
      emit(results[i], (std::filesystem::path(f.output) / name).string());
    } else if (f.format == "text") {
      combined << "### " << f.inputs[i] << "\n" << results[i];
    } else if (f.format == "dot") {
      combined << "// " << f.inputs[i] << "\n" << results[i];
    } else {
      combined << results[i];
    }
  }
  std::cout << combined.str();
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plumbing description of the link of f.g-bar + z^r from a decorated resolution graph"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    StageId stage;
    bool full;
  };
  const Sub subs[] = {
      {"step1", "multiplicities, fibredness and orientation flips", StageId::step1, false},
      {"nielsen", "Nielsen graph N(h) of the monodromy", StageId::nielsen, false},
      {"power", "Nielsen graph N(h^r)", StageId::power, false},
      {"waldhausen", "Waldhausen graph of the open book on the link", StageId::waldhausen, false},
      {"plumbing", "plumbing graph of the link", StageId::plumbing, false},
      {"invariants", "canonical class, Euler characteristics, Laufer-Steenbrink test", StageId::invariants, false},
      {"pipeline", "all steps and invariants", StageId::invariants, true},
  };

  Flags flags;
  const Sub* chosen = nullptr;
  for (const auto& s : subs) {
    auto* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("inputs", flags.inputs, "resolution graph file or JSON document from an earlier stage ('-' for stdin)")
        ->required();
    flags.r_opt = sc->add_option("-r", flags.r, "exponent r of z^r (default 2)")->check(CLI::Range(1LL, std::numeric_limits<long long>::max()));
    flags.keep_opt = sc->add_flag("--keep-arrows", flags.keep_arrows, "keep binding arrows and multiplicities on the output graph");
    flags.blow_opt = sc->add_flag("--blow-down", flags.blow_down, "blow down -1 vertices of valence <= 2");
    sc->add_option("--format", flags.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    flags.side_opt = sc->add_option("--side", flags.side, "fg (f.g-bar), f, g or sum (holomorphic fg)")
                         ->check(CLI::IsMember({"fg", "f", "g", "sum"}));
    flags.compare_opt = sc->add_flag("--no-compare", flags.no_compare, "skip the comparison with the holomorphic product");
    sc->add_option("-o,--output", flags.output, "output file (directory for several inputs)");
    sc->add_option("--jobs", flags.jobs, "parallel workers for several inputs")->check(CLI::Range(1, 256));
    sc->callback([&chosen, &s] { chosen = &s; });
  }

  // Every subcommand shares the same Flags; rebind the presence probes to the chosen one.
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  auto* sc = app.get_subcommand(chosen->name);
  flags.r_opt = sc->get_option("-r");
  flags.keep_opt = sc->get_option("--keep-arrows");
  flags.blow_opt = sc->get_option("--blow-down");
  flags.side_opt = sc->get_option("--side");
  flags.compare_opt = sc->get_option("--no-compare");
  return run(chosen->stage, chosen->full, flags);
}
