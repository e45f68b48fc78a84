// Command-line front end: build catalog tonnetzes, verify documents, print
// chord reports, search transposition symmetries, export DOT/SVG.
//
// Exit codes: 0 success, 1 verification failure / negative result,
// 2 usage or schema error. Diagnostics go to stderr.

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "tonnetz/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::string cycle_string(const std::vector<int>& perm,
                         const std::function<std::string(int)>& name) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
    if (seen[i] || perm[i] == i) {
      seen[i] = 1;
      continue;
    }
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      out += (first ? "" : " ") + name(j);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

void print_automorphism(const tonnetz::SimplicialSurface& s,
                        const tonnetz::ComplexAutomorphism& phi, std::ostream& os) {
  os << "order: " << phi.order() << "\n";
  os << "vertices: "
     << cycle_string(phi.vertex_perm, [&](int i) { return s.vertex_name(i); }) << "\n";
  os << "edges:    "
     << cycle_string(phi.edge_perm, [&](int i) { return s.edge_name(i); }) << "\n";
  os << "faces:    "
     << cycle_string(phi.face_perm, [&](int i) { return s.face_name(i); }) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"generalized tonnetzes on triangulated surfaces"};
  app.require_subcommand(1);

  // build
  auto* cmd_build = app.add_subcommand("build", "construct a catalog tonnetz");
  std::string build_key;
  std::string build_out = "-";
  cmd_build->add_option("key", build_key, "catalog key (see `list`)")->required();
  cmd_build->add_option("-o,--output", build_out, "output file, - for stdout");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "check the coherence axioms");
  std::string verify_in;
  cmd_verify->add_option("file", verify_in, "document, - for stdin")->required();

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "print the chord of every face");
  std::string classify_in;
  bool classify_unchecked = false;
  cmd_classify->add_option("file", classify_in, "document, - for stdin")->required();
  cmd_classify->add_flag("--unchecked", classify_unchecked,
                         "proceed even if the document fails verification");

  // report
  auto* cmd_report = app.add_subcommand("report", "full chord inventory");
  std::string report_in, report_format = "text";
  bool report_unchecked = false;
  cmd_report->add_option("file", report_in, "document, - for stdin")->required();
  cmd_report->add_option("--format", report_format, "text|data")
      ->check(CLI::IsMember({"text", "data"}));
  cmd_report->add_flag("--unchecked", report_unchecked,
                       "proceed even if the document fails verification");

  // table7
  auto* cmd_table = app.add_subcommand("table7", "overview table for b2/c2/g2/g2_dual");
  std::string table_format = "text";
  cmd_table->add_option("--format", table_format, "text|data")
      ->check(CLI::IsMember({"text", "data"}));

  // symmetry
  auto* cmd_sym = app.add_subcommand("symmetry", "find a transposition symmetry");
  std::string sym_in;
  int sym_interval = 0;
  cmd_sym->add_option("file", sym_in, "document, - for stdin")->required();
  cmd_sym->add_option("--interval", sym_interval, "semitone shift (mod 12)")->required();

  // export
  auto* cmd_export = app.add_subcommand("export", "write DOT or SVG");
  std::string export_in, export_dot_path, export_svg_path;
  cmd_export->add_option("file", export_in, "document, - for stdin")->required();
  auto* dot_opt = cmd_export->add_option("--dot", export_dot_path, "dual graph DOT file");
  auto* svg_opt =
      cmd_export->add_option("--svg", export_svg_path, "fundamental-domain net SVG file");

  // list
  app.add_subcommand("list", "print the catalog keys");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (app.got_subcommand("list")) {
    for (const auto& [key, name] : tonnetz::catalog_key_names())
      std::cout << name << "\n";
    return kOk;
  }

  if (app.got_subcommand(cmd_build)) {
    const auto key = tonnetz::parse_catalog_key(build_key);
    if (!key) {
      std::cerr << "unknown catalog key '" << build_key << "'; try `tonnetz list`\n";
      return kUsage;
    }
    tonnetz::save(tonnetz::document_for(tonnetz::build(*key)), build_out);
    return kOk;
  }

  if (app.got_subcommand(cmd_verify)) {
    const auto result = tonnetz::load_file(verify_in, /*checked=*/false);
    bool ok = true;
    if (!result.validation.ok) {
      ok = false;
      for (const auto& issue : result.validation.issues)
        std::cerr << "surface: " << issue.message << "\n";
    }
    if (!result.verification.ok) {
      ok = false;
      for (const auto& fail : result.verification.failures)
        std::cerr << "coherence: " << fail.message << "\n";
    }
    if (!ok) {
      std::cout << "FAIL\n";
      return kVerifyFailed;
    }
    const auto k = tonnetz::kind(result.document.tonnetz);
    std::cout << "OK";
    if (k.is_vertex_tonnetz) std::cout << " vertex-tonnetz";
    if (k.is_edge_tonnetz) std::cout << " edge-tonnetz";
    if (k.is_complete_major_minor)
      std::cout << " complete-major/minor";
    else if (k.is_major_minor)
      std::cout << " major/minor";
    std::cout << "\n";
    return kOk;
  }

  if (app.got_subcommand(cmd_classify)) {
    const auto result = tonnetz::load_file(classify_in, !classify_unchecked);
    const auto& t = result.document.tonnetz;
    for (int f = 0; f < t.surface().face_count(); ++f)
      std::cout << t.surface().face_name(f) << ": "
                << tonnetz::classify(t.label(tonnetz::face_id(f))).str() << "\n";
    return kOk;
  }

  if (app.got_subcommand(cmd_report)) {
    const auto result = tonnetz::load_file(report_in, !report_unchecked);
    const auto inv = tonnetz::inventory(result.document.tonnetz);
    if (report_format == "data")
      std::cout << tonnetz::inventory_to_json(inv).dump(2) << "\n";
    else
      std::cout << tonnetz::render_inventory(inv);
    return kOk;
  }

  if (app.got_subcommand(cmd_table)) {
    const auto table = tonnetz::section7_table();
    if (table_format == "data")
      std::cout << tonnetz::section7_to_json(table).dump(2) << "\n";
    else
      std::cout << tonnetz::render_section7(table);
    return kOk;
  }

  if (app.got_subcommand(cmd_sym)) {
    const auto result = tonnetz::load_file(sym_in);
    const auto phi = tonnetz::find_transposition_symmetry(result.document.tonnetz,
                                                          tonnetz::Interval(sym_interval));
    if (!phi) {
      std::cout << "none\n";
      return kVerifyFailed;
    }
    print_automorphism(result.document.tonnetz.surface(), *phi, std::cout);
    return kOk;
  }

  if (app.got_subcommand(cmd_export)) {
    if (dot_opt->count() == 0 && svg_opt->count() == 0) {
      std::cerr << "export: need --dot and/or --svg\n";
      return kUsage;
    }
    const auto result = tonnetz::load_file(export_in, /*checked=*/false);
    auto open_out = [](const std::string& path) {
      auto os = std::make_unique<std::ofstream>(path);
      if (!*os) throw std::runtime_error("cannot write " + path);
      return os;
    };
    if (dot_opt->count() > 0) {
      if (export_dot_path == "-") {
        tonnetz::export_dot(result.document.tonnetz, std::cout);
      } else {
        auto os = open_out(export_dot_path);
        tonnetz::export_dot(result.document.tonnetz, *os);
      }
    }
    if (svg_opt->count() > 0) {
      if (!result.document.layout) {
        std::cerr << "export: document carries no layout; SVG needs catalog layout "
                     "hints (use `build`)\n";
        return kUsage;
      }
      if (export_svg_path == "-") {
        tonnetz::export_svg(result.document.tonnetz, *result.document.layout, std::cout);
      } else {
        auto os = open_out(export_svg_path);
        tonnetz::export_svg(result.document.tonnetz, *result.document.layout, *os);
      }
    }
    return kOk;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tonnetz::VerificationError& ex) {
    std::cerr << "verification failed: " << ex.what() << "\n";
    return kVerifyFailed;
  } catch (const tonnetz::SchemaError& ex) {
    std::cerr << "schema error: " << ex.what() << "\n";
    return kUsage;
  } catch (const tonnetz::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  }
}
