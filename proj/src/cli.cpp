#include "mendel/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mendel/construct.hpp"
#include "mendel/enumerate.hpp"
#include "mendel/io.hpp"
#include "mendel/numbers.hpp"

namespace mendel {

namespace {

const char* tf(bool b) { return b ? "true" : "false"; }

std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (item.empty()) fail(errc::parse_error, "empty item in list: " + text);
    out.push_back(std::stoi(item));
  }
  if (out.empty()) fail(errc::parse_error, "empty list: " + text);
  return out;
}

Matrix parse_matrix(const std::string& text) {
  Matrix rows;
  std::string row;
  std::istringstream in(text);
  while (std::getline(in, row, ';')) rows.push_back(parse_int_list(row, ','));
  for (auto& r : rows)
    if (r.size() != rows.size()) fail(errc::parse_error, "matrix is not square: " + text);
  return rows;
}

struct Globals {
  int threads = 1;
  long long budget = kDefaultBudget;
  bool strict = false;
  bool allow_any_order = false;
};

int map_construct_error(const Error& e, std::ostream& err) {
  err << e.what() << "\n";
  return e.code() == errc::parse_error ? 1 : 2;
}

void summarize_quasigroup(const CayleyTable& q, const OrientedTripleSystem& mts,
                          const Globals& g, std::ostream& out, bool with_anti,
                          size_t blocks_written = 0) {
  PropertyReport pr = predicate_suite(q, g.threads);
  out << "v=" << q.n << " blocks=" << (blocks_written ? blocks_written : mts.blocks.size())
      << " proper=" << tf(is_proper(mts))
      << " idempotent=" << tf(pr.idempotent) << " semisymmetric=" << tf(pr.semisymmetric)
      << " medial=" << tf(pr.medial) << " distributive=" << tf(pr.distributive);
  if (with_anti) {
    auto anti = is_antidistributive(q, g.strict, g.threads);
    out << " antidistributive=" << tf(anti.antidistributive);
  }
  out << "\n";
}

int do_construct(const std::string& kind, long long p, int d, int n, long long v,
                 const std::string& factors, const std::string& kmat, const std::string& input,
                 const std::string& orientation, const std::string& output,
                 const std::string& format, const Globals& g, std::ostream& out,
                 std::ostream& err) {
  try {
    if (kind == "projective" || kind == "netto") {
      UnorderedTripleSystem sts =
          kind == "projective" ? projective_sts(n) : netto_sts(p, d);
      save_file(output, to_text(sts));
      out << "v=" << sts.v << " blocks=" << sts.blocks.size()
          << " antimitre=" << tf(!find_mitre(sts, g.threads).has_value()) << "\n";
      return 0;
    }
    if (kind == "double") {
      ParsedFile f = load_file(input, g.allow_any_order);
      if (f.kind != FileKind::sts) fail(errc::parse_error, "double needs an STS input file");
      std::optional<std::vector<std::array<int, 3>>> orient;
      if (!orientation.empty()) {
        ParsedFile of = load_file(orientation, true);
        if (of.kind != FileKind::mts)
          fail(errc::parse_error, "orientation file must be an MTS-format block list");
        orient = of.mts->blocks;
      }
      OrientedTripleSystem mts = anti_double(*f.sts, orient ? &*orient : nullptr);
      save_file(output, to_text(mts));
      summarize_quasigroup(mts_to_quasigroup(mts), mts, g, out, true);
      return 0;
    }

    CayleyTable q = [&] {
      if (kind == "affine") {
        AbelianGroup group = make_abelian_group(parse_int_list(factors, ','));
        return affine_mendelsohn(group, check_automorphism(group, parse_matrix(kmat)));
      }
      if (kind == "field") return field_mendelsohn(p, d);
      if (kind == "char2") return char2_mendelsohn(d);
      if (kind == "steiner") return steiner_affine(d);
      return spectrum_construct(v);  // kind == "spectrum"
    }();
    OrientedTripleSystem mts = quasigroup_to_mts(q);
    size_t written = 0;
    if (kind == "steiner" && format != "table") {
      // totally symmetric, so the natural block file is the Steiner system
      UnorderedTripleSystem sts = quasigroup_to_sts(q);
      written = sts.blocks.size();
      save_file(output, to_text(sts));
    } else {
      save_file(output, format == "table" ? to_text(q) : to_text(mts));
    }
    summarize_quasigroup(q, mts, g, out, false, written);
    return 0;
  } catch (const Error& e) {
    return map_construct_error(e, err);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

int do_verify(const std::string& input, const std::string& properties, const Globals& g,
              std::ostream& out, std::ostream& err) {
  ParsedFile f;
  try {
    f = load_file(input, g.allow_any_order);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }

  std::optional<CayleyTable> q;
  if (f.kind == FileKind::quasigroup) q = f.table;
  if (f.kind == FileKind::mts) q = mts_to_quasigroup(*f.mts);
  if (f.kind == FileKind::sts) q = sts_to_quasigroup(*f.sts);

  std::optional<PropertyReport> pr;
  auto report = [&]() -> PropertyReport& {
    if (!pr) pr = predicate_suite(*q, g.threads);
    return *pr;
  };

  bool all_ok = true;
  try {
    std::string prop;
    std::istringstream list(properties);
    while (std::getline(list, prop, ',')) {
      if (prop == "valid") {
        out << "valid=true\n";
        continue;
      }
      if (prop == "cml") {
        if (f.kind != FileKind::loop) fail(errc::parse_error, "cml applies to LOOP files");
        bool ok = is_commutative_moufang(*f.loop);
        out << "cml=" << tf(ok) << "\n";
        all_ok = all_ok && ok;
        continue;
      }
      if (prop == "proper") {
        if (f.kind != FileKind::mts) fail(errc::parse_error, "proper applies to MTS files");
        bool ok = is_proper(*f.mts);
        out << "proper=" << tf(ok) << "\n";
        all_ok = all_ok && ok;
        continue;
      }
      if (prop == "antimitre") {
        if (f.kind != FileKind::sts) fail(errc::parse_error, "antimitre applies to STS files");
        auto mitre = find_mitre(*f.sts, g.threads);
        out << "antimitre=" << tf(!mitre.has_value());
        if (mitre)
          out << " witness=(" << mitre->triple[0] << "," << mitre->triple[1] << ","
              << mitre->triple[2] << ")";
        out << "\n";
        all_ok = all_ok && !mitre.has_value();
        continue;
      }
      if (!q) fail(errc::parse_error, "property " + prop + " needs a quasigroup-like input");
      if (prop == "antidistributive") {
        try {
          auto anti = is_antidistributive(*q, g.strict, g.threads);
          out << "antidistributive=" << tf(anti.antidistributive);
          if (anti.witness)
            out << " witness=(" << (*anti.witness)[0] << "," << (*anti.witness)[1] << ","
                << (*anti.witness)[2] << ")";
          out << "\n";
          all_ok = all_ok && anti.antidistributive;
        } catch (const Error& e) {
          if (e.code() != errc::not_mendelsohn) throw;
          out << "antidistributive=false (" << e.what() << ")\n";
          all_ok = false;
        }
        continue;
      }

      bool value = false;
      std::string witness;
      auto& r = report();
      auto triple = [](const std::array<int, 3>& w) {
        return " witness=(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
               std::to_string(w[2]) + ")";
      };
      if (prop == "idempotent") {
        value = r.idempotent;
        if (r.idempotent_witness) witness = " witness=(" + std::to_string(*r.idempotent_witness) + ")";
      } else if (prop == "commutative") {
        value = r.commutative;
        if (r.commutative_witness)
          witness = " witness=(" + std::to_string((*r.commutative_witness)[0]) + "," +
                    std::to_string((*r.commutative_witness)[1]) + ")";
      } else if (prop == "semisymmetric") {
        value = r.semisymmetric;
        if (r.semisymmetric_witness)
          witness = " witness=(" + std::to_string((*r.semisymmetric_witness)[0]) + "," +
                    std::to_string((*r.semisymmetric_witness)[1]) + ")";
      } else if (prop == "totally_symmetric") {
        value = r.totally_symmetric;
      } else if (prop == "medial") {
        value = r.medial;
        if (r.medial_witness)
          witness = " witness=(" + std::to_string((*r.medial_witness)[0]) + "," +
                    std::to_string((*r.medial_witness)[1]) + "," +
                    std::to_string((*r.medial_witness)[2]) + "," +
                    std::to_string((*r.medial_witness)[3]) + ")";
      } else if (prop == "left_distributive") {
        value = r.left_distributive;
        if (r.left_distributive_witness) witness = triple(*r.left_distributive_witness);
      } else if (prop == "right_distributive") {
        value = r.right_distributive;
        if (r.right_distributive_witness) witness = triple(*r.right_distributive_witness);
      } else if (prop == "distributive") {
        value = r.distributive;
        if (r.left_distributive_witness) witness = triple(*r.left_distributive_witness);
        else if (r.right_distributive_witness) witness = triple(*r.right_distributive_witness);
      } else {
        fail(errc::parse_error, "unknown property: " + prop);
      }
      out << prop << "=" << tf(value) << (value ? "" : witness) << "\n";
      all_ok = all_ok && value;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == errc::search_budget_exceeded ? 4 : 1;
  }
  return all_ok ? 0 : 3;
}

int do_enumerate(long long v, const std::string& emit_dir, const std::vector<std::string>& loops,
                 bool brute, const Globals& g, std::ostream& out, std::ostream& err) {
  try {
    SolveOptions opt;
    opt.brute_force = brute;
    opt.budget = g.budget;
    EnumerationReport report = count_affine(v, opt);

    std::vector<CayleyTable> loop_reps;
    if (!loops.empty()) {
      std::vector<LoopTable> tables;
      for (const auto& path : loops) {
        ParsedFile f = load_file(path, g.allow_any_order);
        if (f.kind != FileKind::loop) fail(errc::parse_error, path + " is not a LOOP file");
        if (f.loop->n != v)
          fail(errc::parse_error, path + " has order " + std::to_string(f.loop->n) +
                                      ", expected " + std::to_string(v));
        tables.push_back(*f.loop);
      }
      LoopEnumeration le = distributive_from_loops(tables, g.budget);
      report.b = le.b;
      report.d = report.a + le.b;
      loop_reps = std::move(le.representatives);
    }
    out << report_to_text(report);

    if (!emit_dir.empty()) {
      std::filesystem::create_directories(emit_dir);
      for (const auto& gc : report.per_group) {
        std::string gname;
        for (size_t i = 0; i < gc.group.factors.size(); ++i)
          gname += (i ? "x" : "") + std::to_string(gc.group.factors[i]);
        if (gname.empty()) gname = "1";
        for (size_t i = 0; i < gc.representatives.size(); ++i) {
          CayleyTable q = affine_mendelsohn(gc.group, gc.representatives[i]);
          save_file(emit_dir + "/aff_" + std::to_string(v) + "_" + gname + "_" +
                        std::to_string(i) + ".qg",
                    to_text(q));
        }
      }
      for (size_t i = 0; i < loop_reps.size(); ++i)
        save_file(emit_dir + "/loop_" + std::to_string(v) + "_" + std::to_string(i) + ".qg",
                  to_text(loop_reps[i]));
    }
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.code() == errc::search_budget_exceeded) return 4;
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

int do_spectrum(long long v, std::ostream& out, std::ostream& err) {
  try {
    auto off = spectrum_offender(v);
    if (off)
      out << "v=" << v << " member=false offender=" << off->first << "^" << off->second << "\n";
    else
      out << "v=" << v << " member=true\n";
    return 0;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner and Mendelsohn triple system toolkit"};
  app.name("mendel");
  app.fallthrough();  // global flags may follow the subcommand

  Globals g;
  if (const char* env = std::getenv("MENDEL_BUDGET")) g.budget = std::atoll(env);
  app.add_option("--threads", g.threads, "worker count for parallel scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "backtracking node budget")->check(CLI::PositiveNumber);
  app.add_flag("--strict", g.strict, "check both distributive laws in anti-distributivity scans");
  app.add_flag("--allow-any-order", g.allow_any_order, "skip the order sanity check on imports");

  auto* construct = app.add_subcommand("construct", "build a system and write it to a file");
  construct->require_subcommand(1);
  long long p = 0, v = 0;
  int d = 0, n = 0;
  std::string factors, kmat, input, orientation, output, format = "blocks";
  struct KindSpec {
    const char* name;
    const char* help;
  };
  std::vector<CLI::App*> kinds;
  for (auto [name, help] : {KindSpec{"affine", "Aff(G,k) from factors and a matrix"},
                            KindSpec{"field", "order p^d = 1 (mod 6) field construction"},
                            KindSpec{"char2", "order 2^(2d) construction"},
                            KindSpec{"steiner", "Steiner quasigroup over (Z_3)^d"},
                            KindSpec{"spectrum", "medial Mendelsohn quasigroup of order v"},
                            KindSpec{"netto", "Netto system of order p^d = 7 (mod 12)"},
                            KindSpec{"projective", "PG(n-1,2) of order 2^n-1"},
                            KindSpec{"double", "proper MTS(2u+1) from an STS(u)"}}) {
    auto* k = construct->add_subcommand(name, help);
    k->add_option("--output", output, "output file")->required();
    if (std::string(name) == "affine") {
      k->add_option("--factors", factors, "cyclic factor list, e.g. 3,3")->required();
      k->add_option("--k", kmat, "automorphism matrix, rows ;-separated, e.g. 2,1;0,2")
          ->required();
      k->add_option("--format", format, "blocks|table");
    } else if (std::string(name) == "field" || std::string(name) == "netto") {
      k->add_option("--p", p, "prime")->required();
      k->add_option("--d", d, "degree")->required();
      if (std::string(name) == "field") k->add_option("--format", format, "blocks|table");
    } else if (std::string(name) == "char2" || std::string(name) == "steiner") {
      k->add_option("--d", d, "degree")->required();
      k->add_option("--format", format, "blocks|table");
    } else if (std::string(name) == "spectrum") {
      k->add_option("--v", v, "order")->required();
      k->add_option("--format", format, "blocks|table");
    } else if (std::string(name) == "projective") {
      k->add_option("--n", n, "dimension, order 2^n-1")->required();
    } else {  // double
      k->add_option("--input", input, "STS file")->required();
      k->add_option("--orientation", orientation, "optional oriented base blocks (MTS format)");
    }
    kinds.push_back(k);
  }

  auto* verify = app.add_subcommand("verify", "check properties of a file");
  std::string vinput, properties = "valid";
  verify->add_option("--input", vinput, "QG/MTS/STS/LOOP file")->required();
  verify->add_option("--properties", properties, "comma-separated property list");

  auto* enumerate = app.add_subcommand("enumerate", "count affine Mendelsohn quasigroups");
  long long ev = 0;
  std::string emit_dir;
  std::vector<std::string> loop_paths;
  bool brute = false;
  enumerate->add_option("--v", ev, "order")->required();
  enumerate->add_option("--emit-representatives", emit_dir, "write one table file per class");
  enumerate->add_option("--loops", loop_paths, "LOOP files for the non-affine count");
  enumerate->add_flag("--brute", brute, "force the brute-force cross-check solver");

  auto* spectrum = app.add_subcommand("spectrum", "distributive existence spectrum membership");
  long long sv = 0;
  spectrum->add_option("--v", sv, "order")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  if (construct->parsed()) {
    for (auto* k : kinds)
      if (k->parsed())
        return do_construct(k->get_name(), p, d, n, v, factors, kmat, input, orientation, output,
                            format, g, out, err);
    return 1;
  }
  if (verify->parsed()) return do_verify(vinput, properties, g, out, err);
  if (enumerate->parsed()) return do_enumerate(ev, emit_dir, loop_paths, brute, g, out, err);
  if (spectrum->parsed()) return do_spectrum(sv, out, err);
  err << app.help();
  return 1;
}

}  // namespace mendel
