// perob: command-line front end.
//
// Data sets are given in tuple notation, e.g. "(6,0;(1,2),(1,3),(1,6))",
// as an argument, with "-" (or nothing) for stdin, or as JSON via --file.
// Exit status: 0 success, 1 domain error, 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "perob/perob.hpp"

namespace {

using namespace perob;

struct Output {
  bool json = false;
};

// Usage problems discovered after CLI11 parsing (missing input and such).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string slurp(std::istream& is) {
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return slurp(f);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what(), e.byte);
  }
}

// Text argument, "-" or empty for stdin; JSON when it starts with '{'.
ParsedDataSet load_data_set(const std::string& arg, const std::string& file = "") {
  std::string text;
  if (!file.empty()) {
    text = read_file(file);
  } else if (arg.empty() || arg == "-") {
    text = slurp(std::cin);
  } else {
    text = arg;
  }
  text = trim(text);
  if (text.empty()) throw UsageError("no data set given");
  if (text.front() == '{') return data_set_from_json(parse_json_text(text));
  return parse_data_set(text);
}

DataSet load_plain(const std::string& arg, const std::string& file = "") {
  ParsedDataSet v = load_data_set(arg, file);
  if (auto* d = std::get_if<DataSet>(&v)) return *d;
  return std::get<MarkedDataSet>(v).base;
}

MarkedDataSet load_marked(const std::string& arg, const std::string& file = "") {
  ParsedDataSet v = load_data_set(arg, file);
  if (auto* m = std::get_if<MarkedDataSet>(&v)) return *m;
  throw InvalidInput("expected a marked data set such as (5_+,0;(1,5),(3,5),(1,5),[1,3])");
}

void require_valid(const DataSet& d) {
  const ValidationReport rep = validate(d);
  if (!rep.valid())
    throw InvalidInput(format(d) + " is invalid: condition " + rep.violations.front().condition + ": " +
                       rep.violations.front().detail);
}

void emit(const Output& out, const Json& j, const std::string& text) {
  if (out.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::string pairing_text(const PolygonPresentation& p) {
  std::string s;
  for (int side = 1; side <= p.sides; ++side) {
    const int t = p.partner_of(side);
    if (side < t) s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(side) + "," + std::to_string(t) + ")";
  }
  return s;
}

std::string descriptor_text(const OpenBookDescriptor& d) {
  std::ostringstream os;
  os << "page genus " << d.page_genus << ", " << d.boundary_circles() << " boundary circle"
     << (d.boundary_circles() == 1 ? "" : "s") << '\n';
  for (const auto& b : d.boundaries) {
    os << "  b" << b.id << ": slope " << b.full_period_slope.str();
    if (b.orbit_size > 1) os << " over " << b.orbit_size << " circles (per period " << b.per_period_slope.str() << ")";
    if (b.fdtc()) os << ", fdtc " << b.fdtc()->str();
    if (b.resolved_from) os << ", from b" << b.resolved_from;
    os << '\n';
  }
  os << "  monodromy " << format(d.monodromy) << '\n';
  return os.str();
}

std::string verdict_block(const FillabilityVerdict& v) {
  std::string s = verdict_text(v);
  if (!v.note.empty()) s += "\n  " + v.note;
  for (const auto& h : v.hypotheses) s += "\n  " + std::string(h.holds ? "[x] " : "[ ] ") + h.name;
  return s;
}

// Pieces as arguments plus "(i:a)~(j:b)" edges; an edge with both ends on
// one piece is a self gluing.
Assembly build_assembly(const std::vector<std::string>& pieces, const std::vector<std::string>& edges,
                        const std::vector<int>& additions, const std::string& file) {
  Assembly a;
  if (!file.empty()) {
    a = assembly_from_json(parse_json_text(read_file(file)));
  } else {
    for (const auto& p : pieces) a.pieces.push_back(load_marked(p));
  }
  for (const auto& e : edges) {
    const auto [i, pa, j, pb] = parse_edge_notation(e);
    if (pa == pb)
      a.self_edges.push_back({pa, i, j});
    else
      a.edges.push_back({{pa, i}, {pb, j}});
  }
  for (int g : additions) a.permutation_additions.push_back(g);
  if (a.pieces.empty()) throw UsageError("assembly needs pieces (arguments or --file)");
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic surface maps, rational open books and fillability"};
  app.require_subcommand(1);
  Output out;
  if (const char* env = std::getenv("PEROB_OUTPUT")) out.json = std::string(env) == "json";
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default from PEROB_OUTPUT=json)");

  std::string arg, arg2, file, at, svg_path;

  auto data_command = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("data", arg, "data set in tuple notation, '-' for stdin");
    c->add_option("--file", file, "read the data set as JSON from a file");
    c->add_flag("--json", json_flag, "JSON output");
    return c;
  };

  CLI::App* c_validate = data_command("validate", "check every defining condition");
  CLI::App* c_genus = data_command("genus", "genus from Riemann-Hurwitz");
  CLI::App* c_classify = data_command("classify", "rotational / type1 / type2");
  CLI::App* c_polygon = data_command("polygon", "side-paired polygon of an irreducible Type 1 set");
  c_polygon->add_option("--svg", svg_path, "write an SVG drawing");

  CLI::App* c_glue = app.add_subcommand("glue", "glue two data sets at compatible cone points");
  c_glue->add_option("first", arg)->required();
  c_glue->add_option("second", arg2)->required();
  c_glue->add_option("--at", at, "i:j, 1-based cone indices");
  c_glue->add_flag("--json", json_flag, "JSON output");
  bool list_pairs = false;
  c_glue->add_flag("--list", list_pairs, "list compatible index pairs instead of gluing");

  CLI::App* c_self = data_command("self-glue", "glue two cone points of one data set");
  c_self->add_option("--at", at, "r:s, 1-based cone indices")->required();

  std::vector<std::string> pieces, edges;
  std::vector<int> additions;
  auto assembly_command = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("pieces", pieces, "marked pieces in tuple notation");
    c->add_option("--edge", edges, "(i:a)~(j:b): cone i of piece a to cone j of piece b");
    c->add_option("--add", additions, "permutation addition of genus g'");
    c->add_option("--file", file, "assembly JSON");
    c->add_flag("--json", json_flag, "JSON output");
    return c;
  };
  CLI::App* c_assemble = assembly_command("assemble", "glue marked pieces into one marked data set");

  CLI::App* c_page = data_command("page", "page, boundary orbits and monodromy of a marked data set");
  CLI::App* c_veering = data_command("veering", "right/left veering of a marked data set");
  bool veer_resolved = false;
  c_veering->add_flag("--resolved", veer_resolved, "use the integral resolution");
  CLI::App* c_surgery = data_command("surgery", "surgery coefficients on the binding");
  CLI::App* c_resolve = data_command("resolve", "integral resolution of -1/p boundaries");

  CLI::App* c_fill = assembly_command("fill", "fillability verdict for a marked data set or assembly");
  bool positive_word = false;
  c_fill->add_flag("--positive-word", positive_word, "apply the positive-word rule to the page");

  int p = 5, q = 1, grid = 1024;
  double K = 0, H = 0, tol = 1e-9;
  std::string csv_path;
  CLI::App* c_profile = app.add_subcommand("profile", "build and check a boundary profile (f0, g0)");
  c_profile->add_option("-p", p, "p > 0")->required();
  c_profile->add_option("-q", q, "q, coprime to p")->required();
  c_profile->add_option("--K", K, "default: smallest working integer + 1");
  c_profile->add_option("--H", H, "default: 1 + max(1, f0(1))");
  c_profile->add_option("--grid", grid, "samples")->check(CLI::Range(64, 10000000));
  c_profile->add_option("--tol", tol, "tolerance");
  c_profile->add_option("--csv", csv_path, "write r,f0,g0");
  c_profile->add_flag("--json", json_flag, "JSON output");

  int degree = 0, genus_value = -1, min_genus = -1, max_genus = -1, max_degree = 0;
  unsigned threads = 0;
  bool oracle = false;
  std::string class_name, out_path, in_path;
  CLI::App* c_enum = app.add_subcommand("enumerate", "all data sets of one degree and genus");
  c_enum->add_option("--degree,-n", degree)->required()->check(CLI::PositiveNumber);
  c_enum->add_option("--genus,-g", genus_value)->required()->check(CLI::NonNegativeNumber);
  c_enum->add_flag("--oracle", oracle, "use the brute-force oracle");
  c_enum->add_flag("--json", json_flag, "JSON output");

  CLI::App* c_census = app.add_subcommand("census", "census records as JSONL");
  c_census->add_option("--genus,-g", genus_value, "exact genus")->check(CLI::NonNegativeNumber);
  c_census->add_option("--min-genus", min_genus)->check(CLI::NonNegativeNumber);
  c_census->add_option("--max-genus", max_genus)->check(CLI::NonNegativeNumber);
  c_census->add_option("--degree,-n", degree)->check(CLI::PositiveNumber);
  c_census->add_option("--max-degree", max_degree)->check(CLI::PositiveNumber);
  c_census->add_option("--class", class_name, "rotational, type1, type1-irreducible, type2");
  c_census->add_flag("--oracle", oracle, "use the brute-force oracle");
  c_census->add_option("--threads", threads, "worker threads, default all cores");
  c_census->add_option("--out", out_path, "write JSONL to a file instead of stdout");
  c_census->add_option("--read", in_path, "read a JSONL census and re-validate it");
  c_census->add_flag("--json", json_flag, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (json_flag) out.json = true;

  try {
    if (c_validate->parsed()) {
      ParsedDataSet v = load_data_set(arg, file);
      const ValidationReport rep =
          std::visit([](const auto& x) { return validate(x); }, v);
      std::string text = rep.valid() ? "valid" : "invalid";
      for (const auto& x : rep.violations) text += "\n  (" + x.condition + ") " + x.detail;
      emit(out, to_json(rep), text);
      return rep.valid() ? 0 : 1;
    }
    if (c_genus->parsed()) {
      const DataSet d = load_plain(arg, file);
      const int g = genus(d);
      const ValidationReport rep = validate(d);
      if (!rep.valid())
        std::cerr << "warning: " << format(d) << " fails condition " << rep.violations.front().condition << '\n';
      emit(out, Json{{"genus", g}, {"valid", rep.valid()}}, std::to_string(g));
      return 0;
    }
    if (c_classify->parsed()) {
      const DataSet d = load_plain(arg, file);
      require_valid(d);
      const ActionClass c = classify(d);
      emit(out, to_json(c), c.name());
      return 0;
    }
    if (c_polygon->parsed()) {
      const DataSet d = load_plain(arg, file);
      const PolygonPresentation pp = polygon_realization(d);
      const RealizationReport rep = verify_realization(pp, d);
      if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        if (!f) throw UsageError("cannot write '" + svg_path + "'");
        write_polygon_svg(f, pp);
      }
      std::ostringstream os;
      os << pp.sides << "-gon, q=" << pp.q << " j=" << pp.j << " z-offset=" << pp.z_offset
         << " rotation step=" << pp.rotation_step << '\n'
         << "  pairing " << pairing_text(pp) << '\n'
         << "  euler genus " << rep.euler_genus << ", R-H genus " << rep.rh_genus << ", involution "
         << (rep.involution_ok ? "ok" : "FAILED") << ", equivariance " << (rep.equivariance_ok ? "ok" : "FAILED");
      if (pp.outside_hypotheses) os << "\n  note: genus below 2, construction used outside its usual range";
      emit(out, Json{{"polygon", to_json(pp)}, {"report", to_json(rep)}}, os.str());
      return rep.ok() ? 0 : 1;
    }
    if (c_glue->parsed()) {
      const DataSet a = load_plain(arg), b = load_plain(arg2);
      if (list_pairs) {
        Json j = Json::array();
        std::string text;
        for (auto [i, k] : compatible_pairs(a, b)) {
          j.push_back({i, k});
          text += std::to_string(i) + ":" + std::to_string(k) + "\n";
        }
        emit(out, Json{{"compatible_pairs", j}}, text);
        return 0;
      }
      if (at.empty()) throw UsageError("glue needs --at i:j (or --list)");
      require_valid(a);
      require_valid(b);
      const auto [i, k] = parse_index_pair(at);
      const DataSet r = canonicalize(glue(a, b, i, k)).data;
      emit(out, Json{{"result", to_json(r)}, {"genus", genus(r)}}, format(r));
      return 0;
    }
    if (c_self->parsed()) {
      const DataSet d = load_plain(arg, file);
      require_valid(d);
      const auto [r, s] = parse_index_pair(at);
      const DataSet res = canonicalize(self_glue(d, r, s)).data;
      emit(out, Json{{"result", to_json(res)}, {"genus", genus(res)}}, format(res));
      return 0;
    }
    if (c_assemble->parsed()) {
      const Assembly a = build_assembly(pieces, edges, additions, file);
      const AssemblyResult r = assemble(a);
      std::ostringstream os;
      os << format(r.marked) << "\n  genus " << genus(r.marked.base) << "\n  monodromy " << format(r.word);
      if (r.mixed_signs) os << "\n  note: pieces carry different signs";
      for (const auto& l : r.ledger) {
        os << "\n  piece " << l.piece << ": surviving marks [";
        for (std::size_t k = 0; k < l.surviving_marks.size(); ++k)
          os << (k ? "," : "") << l.surviving_marks[k];
        os << "]";
      }
      emit(out, to_json(r), os.str());
      return 0;
    }
    if (c_page->parsed()) {
      const OpenBookDescriptor d = page_descriptor(load_marked(arg, file));
      emit(out, to_json(d), descriptor_text(d));
      return 0;
    }
    if (c_veering->parsed()) {
      OpenBookDescriptor d = page_descriptor(load_marked(arg, file));
      if (veer_resolved) d = integral_resolution(d);
      const Veering v = veering(d);
      emit(out, Json{{"veering", veering_name(v)}}, veering_name(v));
      return 0;
    }
    if (c_surgery->parsed()) {
      const SurgeryDescription s = surgery_description(page_descriptor(load_marked(arg, file)));
      std::string text;
      for (const auto& b : s.boundaries) {
        text += "b" + std::to_string(b.boundary) + ": slope " + b.slope.str() + ": ";
        if (b.kind == SurgeryKind::None) {
          text += "no surgery\n";
        } else if (b.kind == SurgeryKind::Integral) {
          text += "integral open book, no surgery\n";
        } else {
          text += "topological " + b.topological->str() + ", " + contact_surgery_text(*b.contact) +
                  (b.legendrian_realizable ? ", Legendrian realizable" : "") + "\n";
        }
      }
      emit(out, to_json(s), text);
      return 0;
    }
    if (c_resolve->parsed()) {
      const OpenBookDescriptor d = integral_resolution(page_descriptor(load_marked(arg, file)));
      emit(out, to_json(d), descriptor_text(d) + "  veering " + veering_name(veering(d)));
      return 0;
    }
    if (c_fill->parsed()) {
      FillabilityVerdict v;
      if (!edges.empty() || !file.empty() || pieces.size() > 1) {
        v = classify_assembly(build_assembly(pieces, edges, additions, file));
      } else if (pieces.size() == 1 || pieces.empty()) {
        const MarkedDataSet m = load_marked(pieces.empty() ? "" : pieces.front());
        v = positive_word ? classify_positive_word(page_descriptor(m)) : classify_irreducible(m);
      }
      emit(out, to_json(v), verdict_block(v));
      return 0;
    }
    if (c_profile->parsed()) {
      const double k = K > 0 ? K : default_K(p, q);
      const double h = H > 0 ? H : default_H(p, q, k);
      const ProfilePair pp = build_profile(p, q, k, h, grid);
      const ConditionReport rep = verify_profile(pp, tol);
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw UsageError("cannot write '" + csv_path + "'");
        write_profile_csv(f, pp);
      }
      std::ostringstream os;
      os << "p=" << p << " q=" << q << " K=" << k << " H=" << h << " grid=" << grid << '\n'
         << "  contact " << (rep.contact_ok ? "ok" : "violated") << ", symplectic "
         << (rep.symplectic_ok ? "ok" : "violated") << ", inconclusive samples " << rep.inconclusive;
      if (rep.first_violation)
        os << "\n  first violation: " << rep.first_violation->condition << " at r=" << rep.first_violation->r
           << " value " << rep.first_violation->value;
      Json j = to_json(rep);
      j["K"] = k;
      j["H"] = h;
      emit(out, j, os.str());
      return 0;
    }
    if (c_enum->parsed()) {
      const std::vector<DataSet> ds = oracle ? enumerate_oracle(degree, genus_value) : enumerate(degree, genus_value);
      Json j = Json::array();
      std::string text;
      for (const auto& d : ds) {
        j.push_back(to_json(d));
        text += format(d) + "\n";
      }
      emit(out, j, text);
      return 0;
    }
    if (c_census->parsed()) {
      if (!in_path.empty()) {
        const auto recs = read_census(in_path);
        std::size_t bad = 0;
        for (const auto& r : recs)
          if (!validate(r.data).valid() || make_record(r.data) != r) ++bad;
        emit(out, Json{{"records", recs.size()}, {"mismatched", bad}},
             std::to_string(recs.size()) + " records, " + std::to_string(bad) + " mismatched");
        return bad == 0 ? 0 : 1;
      }
      CensusQuery cq;
      if (genus_value >= 0) {
        cq.min_genus = cq.max_genus = genus_value;
      } else {
        if (min_genus < 0 && max_genus < 0) throw UsageError("census needs --genus or --min-genus/--max-genus");
        cq.min_genus = min_genus < 0 ? 0 : min_genus;
        cq.max_genus = max_genus < 0 ? cq.min_genus : max_genus;
      }
      if (degree > 0) cq.degree = degree;
      if (max_degree > 0) cq.max_degree = max_degree;
      if (!class_name.empty()) cq.action_class = ActionClass::from_name(class_name);
      cq.use_oracle = oracle;
      cq.threads = threads;
      const auto recs = census(cq);
      if (!out_path.empty()) {
        write_census(out_path, recs);
        std::cerr << recs.size() << " records written to " << out_path << '\n';
      } else if (out.json) {
        write_census(std::cout, recs);
      } else {
        for (const auto& r : recs) {
          std::cout << "g=" << r.genus << ' ' << r.action_class.name() << ' ' << format(r.data);
          if (r.polygon_verified) std::cout << (*r.polygon_verified ? " polygon-ok" : " polygon-FAILED");
          std::cout << '\n';
        }
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "perob: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "perob: parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "perob: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
