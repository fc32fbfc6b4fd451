// arcmatch command-line tool. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arcmatch/arcmatch.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Failure {
  int exit_code;
};

[[noreturn]] void die(const std::string& message, int code = 1) {
  std::cerr << "arcmatch: " << message << "\n";
  throw Failure{code};
}

void check(am_status status) {
  if (status != AM_OK) die(std::string(am_status_name(status)) + ": " + am_last_error());
}

struct MatchingDeleter {
  void operator()(am_matching* m) const { am_matching_free(m); }
};
using MatchingPtr = std::unique_ptr<am_matching, MatchingDeleter>;

struct FreeDeleter {
  void operator()(void* p) const { am_free(p); }
};

std::string take_string(char* s) {
  std::unique_ptr<char, FreeDeleter> guard(s);
  return s ? std::string(s) : std::string();
}

std::vector<int32_t> take_edges(int32_t* flat, size_t pairs) {
  std::unique_ptr<int32_t, FreeDeleter> guard(flat);
  return std::vector<int32_t>(flat, flat + 2 * pairs);
}

std::string edges_text(const std::vector<int32_t>& flat) {
  std::string out;
  for (size_t i = 0; i + 1 < flat.size(); i += 2) {
    if (!out.empty()) out += ' ';
    out += std::to_string(flat[i]) + "-" + std::to_string(flat[i + 1]);
  }
  return out;
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream in(path);
  if (!in) die("cannot open " + path);
  return read_all(in);
}

// The matching argument, or standard input when it is empty or "-".
MatchingPtr load_matching(const std::string& arg) {
  std::string text = arg;
  if (text.empty() || text == "-") {
    text = read_all(std::cin);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  }
  am_matching* m = nullptr;
  check(am_matching_parse(text.c_str(), &m));
  return MatchingPtr(m);
}

std::string format(const am_matching* m, am_text_form form) {
  char* out = nullptr;
  check(am_matching_format(m, form, &out));
  return take_string(out);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) die("cannot write " + path);
  out << text;
}

std::vector<int32_t> parse_edge_option(const std::string& text) {
  int a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d-%d%c", &a, &b, &tail) != 2) die("expected an edge a-b, got '" + text + "'");
  return {a, b};
}

// ---------------------------------------------------------------------------

void cmd_check(const std::string& arg) {
  auto m = load_matching(arg);
  int indecomposable = 0;
  check(am_is_indecomposable(m.get(), &indecomposable));
  int32_t* flat = nullptr;
  size_t count = 0;
  check(am_find_intervals(m.get(), &flat, &count));
  const auto intervals = take_edges(flat, count);
  std::cout << "matching: " << format(m.get(), AM_FORM_EDGE_LIST) << "\n";
  std::cout << "edges: " << am_matching_edge_count(m.get()) << "\n";
  std::cout << "indecomposable: " << (indecomposable ? "yes" : "no") << "\n";
  std::cout << "intervals:";
  if (intervals.empty()) std::cout << " none";
  for (size_t i = 0; i < intervals.size(); i += 2) std::cout << " [" << intervals[i] << "," << intervals[i + 1] << "]";
  std::cout << "\n";
}

std::string flags_text(unsigned flags) {
  std::string out;
  auto add = [&](const char* s) { out += out.empty() ? s : std::string(" ") + s; };
  if (flags & AM_FLAG_PIN_SEQUENCE) add("pin_sequence");
  if (flags & AM_FLAG_PROPER) add("proper");
  if (flags & AM_FLAG_RIGHT_REACHING) add("right_reaching");
  return out.empty() ? "none" : out;
}

void cmd_pins(const std::string& arg, const std::string& start) {
  auto m = load_matching(arg);
  std::vector<int32_t> starts;
  if (!start.empty()) {
    starts = parse_edge_option(start);
  } else {
    int32_t* flat = nullptr;
    size_t count = 0;
    check(am_matching_edges(m.get(), &flat, &count));
    starts = take_edges(flat, count);
  }
  for (size_t i = 0; i < starts.size(); i += 2) {
    int32_t* flat = nullptr;
    size_t count = 0;
    check(am_grow_right_reaching(m.get(), starts[i], starts[i + 1], &flat, &count));
    const auto grown = take_edges(flat, count);
    check(am_properize(m.get(), grown.data(), grown.size() / 2, &flat, &count));
    const auto proper = take_edges(flat, count);
    unsigned grown_flags = 0, proper_flags = 0;
    check(am_classify_sequence(m.get(), grown.data(), grown.size() / 2, &grown_flags));
    check(am_classify_sequence(m.get(), proper.data(), proper.size() / 2, &proper_flags));
    std::cout << "start " << starts[i] << "-" << starts[i + 1] << "\n";
    std::cout << "  grown:      " << edges_text(grown) << "  [" << flags_text(grown_flags) << "]\n";
    std::cout << "  properized: " << edges_text(proper) << "  [" << flags_text(proper_flags) << "]\n";
  }
  uint64_t total = 0;
  check(am_count_proper_rr_sequences(m.get(), &total));
  std::cout << "proper right-reaching pin sequences: " << total << "\n";
}

std::string json_edges_text(const json& edges) {
  std::vector<int32_t> flat;
  for (const auto& e : edges) {
    flat.push_back(e.at(0).get<int32_t>());
    flat.push_back(e.at(1).get<int32_t>());
  }
  return edges_text(flat);
}

void cmd_witness(const std::string& arg, size_t k, bool as_json) {
  auto m = load_matching(arg);
  char* out = nullptr;
  check(am_witness_certificate(m.get(), k, &out));
  const std::string cert = take_string(out);
  if (as_json) {
    std::cout << cert;
    return;
  }
  const json doc = json::parse(cert);
  const std::string kind = doc["kind"];
  if (kind == "below_threshold") {
    std::cout << "below threshold: " << doc["edge_count"].get<size_t>() << " edges < tree bound "
              << doc["bounds"]["tree_bound"].get<std::string>() << "\n";
    if (!doc["edges"].empty()) std::cout << "longest proper right-reaching pin sequence: " << json_edges_text(doc["edges"]) << "\n";
    return;
  }
  std::cout << kind;
  if (doc.contains("side")) std::cout << " (" << doc["side"].get<std::string>() << ")";
  std::cout << " with " << doc["edges"].size() << " edges: " << json_edges_text(doc["edges"]) << "\n";
}

void cmd_canonical(const std::string& kind_name, size_t k, bool chord) {
  am_pattern_kind kind{};
  check(am_pattern_kind_parse(kind_name.c_str(), &kind));
  if (chord) {
    am_matching* m = nullptr;
    check(am_canonical(kind, k, &m));
    MatchingPtr owned(m);
    std::cout << format(m, AM_FORM_CHORD_WORD) << "\n";
    return;
  }
  char* out = nullptr;
  check(am_canonical_text(kind, k, &out));
  std::cout << take_string(out) << "\n";
}

void cmd_census(size_t n_max, size_t jobs, bool force) {
  if (force) std::cerr << "arcmatch: warning: enumeration size cap overridden\n";
  // Fail on an oversized request before printing any rows.
  am_stream* probe = nullptr;
  check(am_stream_create(n_max, force, &probe));
  am_stream_free(probe);
  std::cout << "n\ttotal\tindecomposable\trecurrence\tagrees\n";
  bool all_agree = true;
  for (size_t n = 1; n <= n_max; ++n) {
    am_census_row row{};
    check(am_census(n, jobs, force, &row));
    all_agree = all_agree && row.agrees;
    std::cout << row.n << "\t" << row.total << "\t" << row.indecomposable << "\t" << row.recurrence_value << "\t"
              << (row.agrees ? "yes" : "NO") << "\n";
  }
  if (!all_agree) std::cout << "note: recurrence disagrees with enumeration (enumeration is authoritative)\n";
}

void cmd_scan(size_t n_max, size_t k, size_t jobs, bool force, bool as_json) {
  if (force) std::cerr << "arcmatch: warning: enumeration size cap overridden\n";
  char* out = nullptr;
  check(am_scan_avoiders(n_max, k, jobs, force, &out));
  const std::string text = take_string(out);
  if (as_json) {
    std::cout << text;
    return;
  }
  const json doc = json::parse(text);
  std::cout << "n\tindecomposable\tavoiders\texample\n";
  for (const auto& row : doc["rows"]) {
    std::cout << row["n"].get<size_t>() << "\t" << row["indecomposable"].get<uint64_t>() << "\t"
              << row["avoiders"].get<uint64_t>() << "\t"
              << (row["example"].is_null() ? "-" : row["example"].get<std::string>()) << "\n";
  }
  std::cout << "largest avoider for k=" << k << ": " << doc["max_avoider_size"].get<size_t>() << " edges\n";
}

int cmd_verify(size_t n_max, size_t k, size_t jobs, bool force, bool as_json) {
  if (force) std::cerr << "arcmatch: warning: enumeration size cap overridden\n";
  char* out = nullptr;
  int passed = 0;
  check(am_verify_theorem(n_max, k, jobs, force, &out, &passed));
  const std::string text = take_string(out);
  if (as_json) {
    std::cout << text;
  } else {
    const json doc = json::parse(text);
    std::cout << "k=" << k << "  crossing_threshold=" << doc["bounds"]["crossing_threshold"].get<std::string>()
              << "  tree_bound=" << doc["bounds"]["tree_bound"].get<std::string>()
              << "  stated=" << doc["bounds"]["stated"].get<std::string>() << "\n";
    std::cout << "n\tindecomposable\tinterleaving\tbroken_nesting\tpin_sequence\tbelow_threshold\n";
    for (const auto& row : doc["rows"]) {
      std::cout << row["n"].get<size_t>() << "\t" << row["indecomposable"].get<uint64_t>() << "\t"
                << row["interleaving"].get<uint64_t>() << "\t" << row["broken_nesting"].get<uint64_t>() << "\t"
                << row["proper_pin_sequence"].get<uint64_t>() << "\t" << row["below_threshold"].get<uint64_t>()
                << "\n";
    }
    for (const auto& f : doc["failures"]) std::cout << "FAIL " << f.get<std::string>() << "\n";
    std::cout << (passed ? "all consistent" : "INCONSISTENT") << "\n";
  }
  return passed ? 0 : 2;
}

int cmd_verify_cert(const std::string& path) {
  const std::string text = read_file(path);
  char* reason = nullptr;
  const am_status status = am_verify_certificate(text.c_str(), &reason);
  const std::string why = take_string(reason);
  if (status == AM_OK) {
    std::cout << "certificate valid\n";
    return 0;
  }
  if (status == AM_ERR_INVALID_CERTIFICATE) {
    std::cerr << "arcmatch: certificate invalid: " << why << "\n";
    return 2;
  }
  check(status);
  return 1;
}

void cmd_render(const std::string& arg, const std::string& output, const std::string& cert_path) {
  auto m = load_matching(arg);
  std::vector<int32_t> highlight;
  if (!cert_path.empty()) {
    const json doc = json::parse(read_file(cert_path), nullptr, false);
    if (doc.is_discarded() || !doc.contains("edges") || !doc.contains("host")) die("unreadable certificate " + cert_path);
    am_matching* host = nullptr;
    check(am_matching_parse(doc["host"].get<std::string>().c_str(), &host));
    MatchingPtr owned(host);
    int same = 0;
    check(am_matching_equal(host, m.get(), &same));
    if (!same) die("certificate host does not match the matching");
    for (const auto& e : doc["edges"]) {
      highlight.push_back(e.at(0).get<int32_t>());
      highlight.push_back(e.at(1).get<int32_t>());
    }
  }
  char* svg = nullptr;
  check(am_render_svg(m.get(), highlight.data(), highlight.size() / 2, &svg));
  write_output(output, take_string(svg));
}

void cmd_bounds(size_t k) {
  char* out = nullptr;
  check(am_bounds(k, &out));
  std::cout << take_string(out);
}

void cmd_format(const std::string& arg, const std::string& form) {
  auto m = load_matching(arg);
  if (form == "chord") std::cout << format(m.get(), AM_FORM_CHORD_WORD) << "\n";
  else if (form == "edges") std::cout << format(m.get(), AM_FORM_EDGE_LIST) << "\n";
  else die("unknown form '" + form + "' (expected edges or chord)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indecomposable matchings: intervals, pin sequences and certified witnesses"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(am_version()));

  std::string matching, start, output, cert, kind, form = "chord";
  size_t k = 2, n = 1, jobs = 1;
  bool as_json = false, force = false, chord = false;

  auto* check_cmd = app.add_subcommand("check", "Report indecomposability and nontrivial intervals");
  check_cmd->add_option("matching", matching, "Edge list (\"1-3 2-4\") or chord word (\"ABAB\"); '-' reads stdin");

  auto* pins_cmd = app.add_subcommand("pins", "Grow and properize right-reaching pin sequences");
  pins_cmd->add_option("matching", matching, "Matching text; '-' reads stdin");
  pins_cmd->add_option("--start", start, "Starting edge a-b (default: every edge)");

  auto* witness_cmd = app.add_subcommand("witness", "Find an interleaving, broken nesting or proper pin sequence");
  witness_cmd->add_option("matching", matching, "Matching text; '-' reads stdin");
  witness_cmd->add_option("-k", k, "Target size")->required();
  witness_cmd->add_flag("--json", as_json, "Emit the JSON certificate");

  auto* canonical_cmd = app.add_subcommand("canonical", "Print a canonical pattern");
  canonical_cmd->add_option("kind", kind, "interleaving | right_broken_nesting | left_broken_nesting | nesting")->required();
  canonical_cmd->add_option("-k", k, "Edge count")->required();
  canonical_cmd->add_flag("--chord", chord, "Print as a chord word");

  auto* census_cmd = app.add_subcommand("census", "Count matchings and indecomposable matchings for n = 1..N");
  census_cmd->add_option("-n", n, "Largest edge count")->required();
  census_cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_flag("--force", force, "Allow sizes above the enumeration cap");

  auto* scan_cmd = app.add_subcommand("scan", "Find indecomposable matchings avoiding all k-edge witnesses");
  scan_cmd->add_option("-n", n, "Largest edge count")->required();
  scan_cmd->add_option("-k", k, "Witness size")->required();
  scan_cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--force", force, "Allow sizes above the enumeration cap");
  scan_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive witness consistency run");
  verify_cmd->add_option("-n", n, "Largest edge count")->required();
  verify_cmd->add_option("-k", k, "Witness size")->required();
  verify_cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--force", force, "Allow sizes above the enumeration cap");
  verify_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* cert_cmd = app.add_subcommand("verify-cert", "Independently re-check a witness certificate");
  cert_cmd->add_option("file", cert, "Certificate path; '-' reads stdin")->required();

  auto* render_cmd = app.add_subcommand("render", "Draw an arc diagram as SVG");
  render_cmd->add_option("matching", matching, "Matching text; '-' reads stdin");
  render_cmd->add_option("-o", output, "Output file (default stdout)");
  render_cmd->add_option("--witness", cert, "Certificate whose edges are highlighted");

  auto* bounds_cmd = app.add_subcommand("bounds", "Print the exact bounds for k");
  bounds_cmd->add_option("-k", k, "Witness size")->required();

  auto* format_cmd = app.add_subcommand("format", "Convert between edge-list and chord-word text");
  format_cmd->add_option("matching", matching, "Matching text; '-' reads stdin");
  format_cmd->add_option("--form", form, "edges | chord");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*check_cmd) cmd_check(matching);
    else if (*pins_cmd) cmd_pins(matching, start);
    else if (*witness_cmd) cmd_witness(matching, k, as_json);
    else if (*canonical_cmd) cmd_canonical(kind, k, chord);
    else if (*census_cmd) cmd_census(n, jobs, force);
    else if (*scan_cmd) cmd_scan(n, k, jobs, force, as_json);
    else if (*verify_cmd) return cmd_verify(n, k, jobs, force, as_json);
    else if (*cert_cmd) return cmd_verify_cert(cert);
    else if (*render_cmd) cmd_render(matching, output, cert);
    else if (*bounds_cmd) cmd_bounds(k);
    else if (*format_cmd) cmd_format(matching, form);
  } catch (const Failure& f) {
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "arcmatch: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
