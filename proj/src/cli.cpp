#include "kqm/cli.hpp"

#include "kqm/chow.hpp"
#include "kqm/collection.hpp"
#include "kqm/quiver.hpp"
#include "kqm/rep_geometry.hpp"
#include "kqm/strata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kqm {

namespace {

using nlohmann::json;

// malformed user input, exit code 2
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InputError(std::string("bad integer list for ") + what + ": '" + s + "'");
    }
  }
  if (v.empty()) throw InputError(std::string("empty integer list for ") + what);
  return v;
}

json coords(const ChowElement& x) {
  json j = json::object();
  for (int i = 0; i < kChowRank; ++i) j[kChowNames[i]] = to_string(x[i]);
  return j;
}

json parts_json(const HNType& t) {
  json j = json::array();
  for (const auto& p : t.parts) j.push_back(p);
  return j;
}

json one_ps_json(const OnePS& s) {
  json j = json::array();
  for (const auto& v : s.blocks) {
    json blocks = json::array();
    for (const auto& b : v) blocks.push_back({b.weight, b.mult});
    j.push_back(blocks);
  }
  return j;
}

json record_json(const TelemanRecord& r) {
  return {{"hn_type", parts_json(r.hn_type)},
          {"eta", r.eta},
          {"max_weight", r.max_weight},
          {"margin", r.margin},
          {"pass", r.pass}};
}

json sl3_json(const Sl3Element& m) {
  json j = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    j.push_back(r);
  }
  return j;
}

std::string tensor_string(const Tensor21& t) {
  static const char* vars[] = {"x", "y", "z"};
  std::string s;
  for (int q = 0; q < 6; ++q)
    for (int v = 0; v < 3; ++v) {
      Rational c = t[q][v];
      if (c == 0) continue;
      if (c < 0) s += "-";
      else if (!s.empty()) s += "+";
      if (c < 0) c = -c;
      if (c != 1) s += to_string(c) + "*";
      s += std::string(kQuadricMonomials[q]) + "(x)" + vars[v];
    }
  return s.empty() ? "0" : s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string quiver = "kronecker:3";
  std::string dim = "2,3";
  std::string theta = "3,-2";
  std::string twist = "1,-1";
  std::string expr;
  std::string matrix;
  std::string file;
  std::string collection = "1exc";
  bool pretty = false;
};

TelemanContext context(const Options& o) {
  TelemanContext c;
  c.quiver = Quiver::parse(o.quiver);
  c.d = parse_ints(o.dim, "--dim");
  c.theta = parse_ints(o.theta, "--theta");
  c.twist = parse_ints(o.twist, "--twist");
  if (static_cast<int>(c.d.size()) != c.quiver.vertex_count || c.theta.size() != c.d.size() ||
      c.twist.size() != c.d.size())
    throw InputError("--dim, --theta and --twist must have one entry per vertex");
  return c;
}

int cmd_hn_types(const Options& o, json& out) {
  auto c = context(o);
  json arr = json::array();
  for (const auto& t : enumerate_hn_types(c.quiver, c.d, c.theta)) {
    OnePS s = one_ps_from_hn(t, c.theta);
    json e = {{"parts", parts_json(t)},
              {"unstable", t.parts.size() > 1},
              {"codim", hn_stratum_codim(c.quiver, t)},
              {"one_ps", one_ps_json(s)},
              {"eta", eta(c.quiver, s)},
              {"shift", twist_shift(s, c.twist)},
              {"weights", universal_weights(s, c.twist)}};
    arr.push_back(e);
  }
  out = {{"count", arr.size()}, {"hn_types", arr}};
  return 0;
}

int cmd_teleman(const Options& o, json& out) {
  auto c = context(o);
  auto e = parse_expr(o.expr);
  auto rep = teleman_certify(e, c);
  json recs = json::array();
  for (const auto& r : rep.records) recs.push_back(record_json(r));
  out = {{"expr", e.str()}, {"pass", rep.pass}, {"strata", recs}};
  return rep.pass ? 0 : 1;
}

int cmd_chi(const Options& o, json& out) {
  auto e = parse_expr(o.expr);
  out = {{"expr", e.str()}, {"chi", chi(e)}};
  return 0;
}

int cmd_ch(const Options& o, json& out) {
  auto e = parse_expr(o.expr);
  auto x = ch_of(e);
  out = {{"expr", e.str()}, {"rank", rank_of(e)}, {"ch", coords(x)}};
  return 0;
}

int cmd_chow_eval(const Options& o, json& out) {
  auto x = parse_chow_poly(o.expr);
  out = {{"class", coords(x)}, {"integral", to_string(integral(x))}};
  return 0;
}

int cmd_stability(const Options& o, json& out) {
  auto r = LinearFormMatrix::parse(o.matrix);
  bool st = is_stable(r);
  auto h = minors(r);
  json ms = json::array();
  for (const auto& q : h) ms.push_back(to_string(q));
  bool abelian = st && commutes(to_sl3_plane(r));
  out = {{"matrix", r.str()}, {"stable", st}, {"minors", ms}, {"minor_span", span_dimension(h)}, {"abelian_plane", abelian}};
  return 0;
}

int cmd_syzygies(const Options& o, json& out) {
  auto r = LinearFormMatrix::parse(o.matrix);
  auto s = syzygies(r);
  out = {{"matrix", r.str()},
         {"stable", !s.degenerate},
         {"tensors", {tensor_string(s.tensors[0]), tensor_string(s.tensors[1])}}};
  if (s.degenerate) {
    out["warning"] = s.warning;
  } else {
    auto p = std::make_pair(tensor_to_sl3(s.tensors[0]), tensor_to_sl3(s.tensors[1]));
    out["sl3"] = {sl3_json(p.first), sl3_json(p.second)};
    out["commutes"] = commutes(p);
  }
  return 0;
}

int cmd_verify(const Options& o, json& out) {
  auto c = context(o);
  CollectionSpec spec = o.file.empty() ? builtin_collection(o.collection) : CollectionSpec::from_json(read_file(o.file));
  auto m = verify_collection(spec, c);
  json labels = json::array();
  for (const auto& ob : spec.objects) labels.push_back({{"label", ob.label}, {"expr", ob.expr.str()}});
  json rows = json::array();
  std::map<std::string, long> counts;
  for (size_t i = 0; i < m.n; ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.n; ++j) {
      const auto& p = m.at(i, j);
      json e = {{"i", p.i}, {"j", p.j}, {"chi", p.chi}, {"teleman_pass", p.teleman_pass}, {"verdict", to_string(p.verdict)}};
      if (p.blocking) e["blocking"] = record_json(*p.blocking);
      if (p.i < p.j && p.verdict == Verdict::StrongExt) e["hom_dim"] = p.chi;
      ++counts[to_string(p.verdict)];
      row.push_back(e);
    }
    rows.push_back(row);
  }
  json und = json::array();
  for (auto [i, j] : m.undetermined()) und.push_back({i, j});
  out = {{"objects", labels},
         {"matrix", rows},
         {"summary",
          {{"size", m.n},
           {"counts", counts},
           {"undetermined", und},
           {"consistent", m.consistent()},
           {"notice", "fullness is not certified by this check"}}}};
  return m.consistent() ? 0 : 1;
}

int cmd_ledger(const Options&, json& out) {
  bool ok = true;
  auto dump = [&](const std::vector<CheckResult>& v) {
    json a = json::array();
    for (const auto& r : v) {
      ok = ok && r.holds;
      json e = {{"name", r.name}, {"holds", r.holds}};
      if (!r.detail.empty()) e["detail"] = r.detail;
      a.push_back(e);
    }
    return a;
  };
  auto l = mutation_ledger();
  out = {{"identities", dump(check_ch_identities())},
         {"ledger", dump(mutation_ledger_check())},
         {"classes",
          {{"L6[-3]", coords(l.L6)}, {"L5[-2]", coords(l.L5)}, {"L4[-2]", coords(l.L4)}, {"L3[-1]", coords(l.L3)}, {"L2[-1]", coords(l.L2)}}}};
  out["pass"] = ok;
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the (2,3) moduli space of the 3-Kronecker quiver", "kqm"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "indent JSON output");

  auto ctx_opts = [&](CLI::App* s) {
    s->add_option("--quiver", o.quiver, "quiver as JSON or kronecker:m")->capture_default_str();
    s->add_option("--dim", o.dim, "dimension vector, e.g. 2,3")->capture_default_str();
    s->add_option("--theta", o.theta, "stability parameter")->capture_default_str();
    s->add_option("--twist", o.twist, "twist vector a")->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&, json&)>> cmds;
  auto add = [&](const char* name, const char* help, int (*f)(const Options&, json&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_flag("--pretty", o.pretty, "indent JSON output");
    s->add_flag("--json", "JSON output (default)");
    cmds.emplace_back(s, f);
    return s;
  };

  ctx_opts(add("hn-types", "HN types with 1-PS, eta and universal weights", cmd_hn_types));
  auto t = add("teleman", "Teleman quantization certificate for a bundle", cmd_teleman);
  ctx_opts(t);
  t->add_option("--expr", o.expr, "bundle expression")->required();
  add("chi", "Euler characteristic by HRR", cmd_chi)->add_option("--expr", o.expr, "bundle expression")->required();
  add("ch", "Chern character in the Chow basis", cmd_ch)->add_option("--expr", o.expr, "bundle expression")->required();
  add("chow-eval", "evaluate a polynomial in c1,c2,c3,d1,d2", cmd_chow_eval)
      ->add_option("--expr", o.expr, "polynomial, e.g. c1^6")
      ->required();
  add("stability", "stability of a 2x3 matrix of linear forms", cmd_stability)
      ->add_option("--matrix", o.matrix, "rows separated by ';', e.g. x,y,0;0,y,z")
      ->required();
  add("syzygies", "syzygy pair and its sl3 plane", cmd_syzygies)
      ->add_option("--matrix", o.matrix, "rows separated by ';'")
      ->required();
  auto v = add("verify-collection", "pairwise certification of a collection", cmd_verify);
  ctx_opts(v);
  v->add_option("--file", o.file, "CollectionSpec JSON file");
  v->add_option("--collection", o.collection, "built-in collection name")->capture_default_str();
  add("ledger-check", "Chern character identities and mutation ledger", cmd_ledger);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }

  for (auto& [sub, f] : cmds) {
    if (!sub->parsed()) continue;
    json result;
    int code;
    try {
      code = f(o, result);
    } catch (const RingInconsistency& e) {
      err << json{{"error", e.what()}}.dump() << "\n";
      return 1;
    } catch (const std::exception& e) {
      err << json{{"error", e.what()}}.dump() << "\n";
      return 2;
    }
    out << (o.pretty ? result.dump(2) : result.dump()) << "\n";
    return code;
  }
  return 2;
}

}  // namespace kqm
