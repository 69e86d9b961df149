// bihom: batch CLI over the C API of the bihom shared library.
//
// Exit codes: 0 pass/success, 1 axiom or precondition violations,
// 2 malformed input (parse/shape errors, unknown names).

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bihom.h"

namespace {

struct RecordDeleter {
  void operator()(bh_record* r) const { bh_record_free(r); }
};
struct ReportDeleter {
  void operator()(bh_report* r) const { bh_report_free(r); }
};
using RecordPtr = std::unique_ptr<bh_record, RecordDeleter>;
using ReportPtr = std::unique_ptr<bh_report, ReportDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  bh_string_free(s);
  return out;
}

RecordPtr load_record(const std::string& path, int& exit_code) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    exit_code = 2;
    return nullptr;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  char* err = nullptr;
  RecordPtr rec(bh_record_parse(ss.str().c_str(), &err));
  if (!rec) {
    std::cerr << "error: " << path << ": " << take_string(err) << "\n";
    exit_code = 2;
  }
  return rec;
}

std::string report_string(const bh_report* rep, const std::string& format) {
  return take_string(format == "json" ? bh_report_to_json(rep) : bh_report_to_text(rep));
}

int cmd_check(const std::string& file, int max_witnesses, const std::string& format) {
  int ec = 0;
  RecordPtr rec = load_record(file, ec);
  if (!rec) return ec;
  char* err = nullptr;
  ReportPtr rep(bh_check(rec.get(), max_witnesses, &err));
  if (!rep) {
    std::cerr << "error: " << take_string(err) << "\n";
    return 2;
  }
  std::cout << report_string(rep.get(), format);
  return bh_report_passed(rep.get()) ? 0 : 1;
}

int cmd_construct(const std::string& op, const std::vector<std::string>& files,
                  const std::string& variant, const std::string& out_path,
                  int max_witnesses, const std::string& format) {
  int ec = 0;
  std::vector<RecordPtr> recs;
  std::vector<const bh_record*> raw;
  for (const auto& f : files) {
    RecordPtr r = load_record(f, ec);
    if (!r) return ec;
    raw.push_back(r.get());
    recs.push_back(std::move(r));
  }
  char* err = nullptr;
  bh_record* out = nullptr;
  bh_report* rep = nullptr;
  int status = bh_construct(op.c_str(), raw.data(), int(raw.size()),
                            variant.empty() ? nullptr : variant.c_str(), max_witnesses,
                            &out, &rep, &err);
  RecordPtr out_guard(out);
  ReportPtr rep_guard(rep);
  if (status == BH_ERROR) {
    std::cerr << "error: " << take_string(err) << "\n";
    return 2;
  }
  std::string record_json = out ? take_string(bh_record_serialize(out)) : "";
  if (!out_path.empty() && out) {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    os << record_json;
  }
  if (format == "json") {
    std::cout << "{\n  \"status\": " << status << ",\n  \"report\": ";
    std::string rj = report_string(rep, "json");
    while (!rj.empty() && (rj.back() == '\n')) rj.pop_back();
    std::cout << rj;
    if (out && out_path.empty()) {
      std::string recj = record_json;
      while (!recj.empty() && recj.back() == '\n') recj.pop_back();
      std::cout << ",\n  \"record\": " << recj;
    }
    std::cout << "\n}\n";
  } else {
    std::cout << report_string(rep, format);
    if (out && out_path.empty()) std::cout << record_json;
  }
  return status;
}

int cmd_catalog(const std::string& name, unsigned long long seed) {
  if (name.empty()) {
    std::cout << take_string(bh_catalog_list());
    return 0;
  }
  // random-<kind>-d<dim> generates a seeded candidate (see --seed)
  if (name.rfind("random-", 0) == 0) {
    auto dpos = name.rfind("-d");
    if (dpos == std::string::npos || dpos + 2 >= name.size()) {
      std::cerr << "error: random preset names look like random-algebra-d2\n";
      return 2;
    }
    std::string kind = name.substr(7, dpos - 7);
    int dim = std::atoi(name.c_str() + dpos + 2);
    char* err = nullptr;
    int passed = 0;
    RecordPtr rec(bh_random_structure(kind.c_str(), dim, seed, 3, &passed, &err));
    if (!rec) {
      std::cerr << "error: " << take_string(err) << "\n";
      return 2;
    }
    std::cout << take_string(bh_record_serialize(rec.get()));
    std::cerr << "candidate passed its checker: " << (passed ? "yes" : "no") << "\n";
    return 0;
  }
  char* err = nullptr;
  RecordPtr rec(bh_catalog_get(name.c_str(), &err));
  if (!rec) {
    std::cerr << "error: " << take_string(err);
    return 2;
  }
  std::cout << take_string(bh_record_serialize(rec.get()));
  return 0;
}

int cmd_residual(const std::string& file, const std::string& format) {
  int ec = 0;
  RecordPtr rec = load_record(file, ec);
  if (!rec) return ec;
  char* err = nullptr;
  char* json = nullptr;
  int status = bh_residual(rec.get(), &json, &err);
  if (status == BH_ERROR) {
    std::cerr << "error: " << take_string(err) << "\n";
    return 2;
  }
  std::string js = take_string(json);
  if (format == "json") {
    std::cout << js;
  } else {
    std::cout << (status == BH_OK ? "residual is zero\n" : "residual is NONZERO\n") << js;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(bh_version()) +
               " - exact checks and constructions for BiHom-algebraic structures"};
  app.require_subcommand(1);
  app.fallthrough();

  int max_witnesses = 16;
  unsigned long long seed = 0;
  std::string format = "text";
  app.add_option("--max-witnesses", max_witnesses, "witness cap per axiom (default 16)");
  app.add_option("--seed", seed, "seed for randomized generation (default 0)");
  app.add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string check_file;
  auto* check = app.add_subcommand("check", "verify all axioms of a structure file");
  check->add_option("file", check_file, "structure JSON file")->required();

  std::string op, variant, out_path;
  std::vector<std::string> construct_files;
  auto* construct =
      app.add_subcommand("construct", "run a construction and re-validate its output");
  construct->add_option("op", op, "construction name")->required();
  construct->add_option("file", construct_files, "input structure file(s)")->required();
  construct->add_option("--variant", variant, "left|right (rb-to-dendriform)")
      ->check(CLI::IsMember({"left", "right"}));
  construct->add_option("--out", out_path, "write the constructed record here");

  std::string preset;
  auto* catalog = app.add_subcommand("catalog", "list presets or print one");
  catalog->add_option("name", preset,
                      "preset name (also random-<kind>-d<dim>, seeded by --seed)");

  std::string residual_file;
  auto* residual =
      app.add_subcommand("residual", "Yang-Baxter residual of a qt/coqt file");
  residual->add_option("file", residual_file, "qt or coqt JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // --help is a success
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad arguments are input errors
  }

  try {
    if (check->parsed()) return cmd_check(check_file, max_witnesses, format);
    if (construct->parsed())
      return cmd_construct(op, construct_files, variant, out_path, max_witnesses, format);
    if (catalog->parsed()) return cmd_catalog(preset, seed);
    if (residual->parsed()) return cmd_residual(residual_file, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
