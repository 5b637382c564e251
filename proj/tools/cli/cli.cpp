#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "trisat/error.hpp"
#include "trisat/finite_oracle.hpp"
#include "trisat/ladder.hpp"
#include "trisat/rigidity.hpp"
#include "trisat/root_system.hpp"
#include "trisat/table_generation.hpp"
#include "trisat/torus_delta.hpp"
#include "trisat/weil.hpp"

namespace trisat::cli {

namespace {

using json = nlohmann::ordered_json;

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json error_object(std::string_view kind, const std::string& message) {
  json e;
  e["error"]["kind"] = kind;
  e["error"]["message"] = message;
  return e;
}

json triple_json(const HyperbolicTriple& t) { return json::array({t.a(), t.b(), t.c()}); }

json bound_json(const Bound& b) {
  json j;
  j["value"] = b.lo;
  j["open"] = b.open;
  return j;
}

json row_json(const TableRow& r) {
  json j;
  j["family"] = r.family;
  j["ranks"] = r.ranks.encode();
  j["rank_list"] = r.ranks.any ? json(nullptr) : json(r.ranks.ranks);
  j["pattern"] = r.pattern.str();
  j["a"] = bound_json(r.pattern.a);
  j["b"] = bound_json(r.pattern.b);
  j["c"] = bound_json(r.pattern.c);
  j["provenance"] = r.provenance;
  return j;
}

json classification_json(const TripleClassification& k) {
  json j;
  j["kind"] = kind_name(k.kind);
  j["deltas"] = k.deltas;
  j["delta_sum"] = k.delta_sum();
  j["threshold"] = k.threshold;
  return j;
}

// Positional arguments shared by h1, classify, saturation and marion.
struct TypeTriple {
  std::string type;
  std::array<int, 3> n{};

  void attach(CLI::App* sub) {
    sub->add_option("X", type, "Dynkin type, e.g. A_7, D_43, G_2")->required();
    sub->add_option("a", n[0], "order of x")->required();
    sub->add_option("b", n[1], "order of y")->required();
    sub->add_option("c", n[2], "order of z")->required();
  }
  DynkinType dynkin() const { return DynkinType::parse(type); }
  HyperbolicTriple triple() const { return validate_triple(n[0], n[1], n[2]); }
};

std::array<int, 3> parse_triple_list(const std::string& text) {
  std::array<int, 3> n{};
  std::istringstream in(text);
  char sep1 = 0, sep2 = 0;
  if (!(in >> n[0] >> sep1 >> n[1] >> sep2 >> n[2]) || sep1 != ',' || sep2 != ',' ||
      in.peek() != std::char_traits<char>::eof()) {
    throw InvalidArgument("malformed triple '" + text + "', expected a,b,c");
  }
  return n;
}

json cmd_roots(const std::string& type, bool list) {
  const RootSystem& rs = root_system(DynkinType::parse(type));
  json j;
  j["command"] = "roots";
  j["type"] = rs.dynkin.name();
  j["rank"] = rs.rank();
  j["dimension"] = rs.dimension;
  j["positive_roots"] = rs.positive_roots.size();
  j["exponents"] = rs.exponents;
  j["coxeter_number"] = rs.coxeter_number();
  j["cartan_det"] = rs.cartan_det;
  j["cartan_matrix"] = rs.cartan_matrix;
  j["highest_root"] = rs.highest_root();
  if (list) j["roots"] = rs.positive_roots;
  return j;
}

json cmd_h1(const TypeTriple& in) {
  const DynkinType x = in.dynkin();
  const HyperbolicTriple t = in.triple();
  const CohomologyReport r = principal_report(x, t);
  const auto c = ineq_case(x, t);
  json j;
  j["command"] = "h1";
  j["type"] = x.name();
  j["triple"] = triple_json(t);
  j["mu"] = t.mu().str();
  j["dim"] = r.inputs.d;
  j["fixed"] = {principal_fixed_count(x, t.a()), principal_fixed_count(x, t.b()),
                principal_fixed_count(x, t.c())};
  j["e"] = {r.inputs.e_x, r.inputs.e_y, r.inputs.e_z};
  j["dim_ptilde1"] = r.dim_ptilde1;
  j["dim_p1"] = r.dim_p1;
  j["h1"] = r.dim_p1;
  j["exceptional"] = c.has_value();
  j["case"] = c ? json(std::string(1, *c)) : json(nullptr);
  return j;
}

json cmd_delta(const std::string& type, int m) {
  const DynkinType x = DynkinType::parse(type);
  const DeltaResult d = delta(x, m);
  const RootSystem& rs = root_system(x);
  json j;
  j["command"] = "delta";
  j["type"] = x.name();
  j["m"] = d.m;
  j["delta"] = d.delta;
  j["centralizer_dim_min"] = d.centralizer_dim_min;
  j["witness"] = d.witness.coords;
  j["dimension"] = rs.dimension;
  j["rank"] = rs.rank();
  return j;
}

json cmd_classify(const TypeTriple& in) {
  const DynkinType x = in.dynkin();
  const HyperbolicTriple t = in.triple();
  json j;
  j["command"] = "classify";
  j["type"] = x.name();
  j["triple"] = triple_json(t);
  j.update(classification_json(classify(x, t)));
  return j;
}

json cmd_saturation(const TypeTriple& in) {
  const DynkinType x = in.dynkin();
  const HyperbolicTriple t = in.triple();
  const SaturationVerdict v = saturation(x, t);
  json j;
  j["command"] = "saturation";
  j["type"] = x.name();
  j["triple"] = triple_json(t);
  j["outcome"] = outcome_name(v.outcome);
  j["reason"] = reason_name(v.reason);
  j["failing_step"] = v.failing_step >= 0 ? json(v.failing_step) : json(nullptr);
  json chain = json::array();
  for (const DynkinType& s : v.chain.steps) chain.push_back(s.name());
  j["chain"] = chain;
  j["base"]["type"] = v.chain.steps.front().name();
  j["base"]["h1"] = v.base_h1;
  j["base"]["case"] = v.base_case ? json(std::string(1, *v.base_case)) : json(nullptr);
  json steps = json::array();
  for (const StepCriterion& s : v.steps) {
    json step;
    step["lower"] = s.lower.name();
    step["upper"] = s.upper.name();
    step["L"] = s.lhs;
    step["R"] = s.rhs;
    step["strict"] = s.strict;
    step["h1_lower"] = principal_h1(s.lower, t);
    step["h1_upper"] = principal_h1(s.upper, t);
    steps.push_back(step);
  }
  j["steps"] = steps;
  json failures = json::array();
  for (const Failure& f : v.failures) {
    json e;
    e["reason"] = reason_name(f.reason);
    if (f.step >= 0) e["step"] = f.step;
    failures.push_back(e);
  }
  j["failures"] = failures;
  return j;
}

std::string render_table(int which, int rank_cap, const std::string& format) {
  const std::vector<TableRow> rows = generate_table(which, rank_cap);
  if (format == "csv") return table_to_csv(rows);
  if (format == "md") return table_to_markdown(rows);
  json j;
  j["command"] = "table";
  j["which"] = which;
  j["rank_cap"] = rank_cap;
  json arr = json::array();
  for (const TableRow& r : rows) arr.push_back(row_json(r));
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read fixture " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json cmd_verify(const std::string& dir, int rank_cap, bool& all_match) {
  json j;
  j["command"] = "verify";
  j["fixtures"] = dir;
  j["rank_cap"] = rank_cap;
  json tables = json::array();
  all_match = true;
  for (int which = 1; which <= 4; ++which) {
    const std::string path = dir + "/tables/table" + std::to_string(which) + ".csv";
    const ParsedTable fixture = parse_table_csv(read_file(path));
    const TableDiff d = compare_tables(which, generate_table(which, rank_cap), fixture, rank_cap);
    json t;
    t["which"] = which;
    t["mode"] = d.extensional ? "extensional" : "rows";
    t["match"] = d.match;
    t["generated_rows"] = d.generated_rows;
    t["fixture_rows"] = d.fixture_rows;
    if (d.extensional) {
      t["cells"] = d.cells;
      t["window"] = d.window;
    }
    t["missing_count"] = d.missing_count;
    t["extra_count"] = d.extra_count;
    t["missing"] = d.missing;
    t["extra"] = d.extra;
    t["notes"] = d.notes;
    tables.push_back(t);
    all_match = all_match && d.match;
  }
  j["tables"] = tables;
  j["match"] = all_match;
  return j;
}

json cmd_epi(const std::string& triple, int q, const std::string& conj, bool exact) {
  const auto n = parse_triple_list(triple);
  const HyperbolicTriple t = validate_triple(n[0], n[1], n[2]);
  const Conjugation c = conj == "adjoint" ? Conjugation::Adjoint : Conjugation::Inner;
  const EpiCount e = epi_count(t, q, c, exact);
  json j;
  j["command"] = "epi";
  j["triple"] = triple_json(t);
  j["q"] = e.q;
  j["group_order"] = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1) / 2;
  j["conjugation"] = conjugation_name(e.conjugation);
  j["exact_orders"] = e.exact_orders;
  j["raw_count"] = e.raw_count;
  j["class_count"] = e.class_count;
  j["orbit_sizes"] = e.orbit_sizes;
  return j;
}

const std::array<const char*, 8> kDeviationColumns{"A", "B/C", "D", "E_6", "E_7", "E_8", "F_4", "G_2"};

Rational deviation_cell(const std::string& column, int n) {
  if (column == "A") return family_deviation_sup(ClassicalFamily::A, n);
  if (column == "B/C" || column == "BC" || column == "B" || column == "C") {
    return family_deviation_sup(ClassicalFamily::BC, n);
  }
  if (column == "D") return family_deviation_sup(ClassicalFamily::D, n);
  return type_deviation(DynkinType::parse(column), n);
}

json cmd_deviation(const std::optional<std::string>& family, const std::optional<int>& n) {
  json j;
  j["command"] = "deviation";
  if (family && n) {
    const bool classical = *family == "A" || *family == "B/C" || *family == "BC" ||
                           *family == "B" || *family == "C" || *family == "D";
    j["family"] = *family;
    j["n"] = *n;
    j["kind"] = classical ? "supremum" : "value";
    j["value"] = deviation_cell(*family, *n).str();
    return j;
  }
  if (family || n) throw InvalidArgument("deviation needs both --family and --n, or neither");
  j["columns"] = kDeviationColumns;
  json rows = json::array();
  for (int m = 2; m <= 7; ++m) {
    json row;
    row["n"] = m;
    for (const char* col : kDeviationColumns) row["values"][col] = deviation_cell(col, m).str();
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

json cmd_marion(const TypeTriple& in, int p) {
  const DynkinType x = in.dynkin();
  const HyperbolicTriple t = in.triple();
  const MarionVerdict v = marion_finiteness(x, t, p);
  json j;
  j["command"] = "marion";
  j["type"] = x.name();
  j["triple"] = triple_json(t);
  j["p"] = p;
  j["cartan_det"] = cartan_det(x);
  j["finite"] = v.finite;
  j["reason"] = v.reason;
  j["classification"] = classification_json(v.classification);
  return j;
}

json cmd_rigid_pairs(int rank_cap, int c_cap) {
  const RigidPairsReport r = rigid_pairs(rank_cap, c_cap);
  json j;
  j["command"] = "rigid-pairs";
  j["rank_cap"] = r.rank_cap;
  j["c_cap"] = r.c_cap;
  json types = json::array();
  for (const DynkinType& t : r.types) types.push_back(t.name());
  j["types"] = types;
  json rigid = json::array();
  for (const RigidPattern& p : r.rigid) {
    json row;
    row["type"] = p.type.name();
    row["pattern"] = p.pattern.str();
    row["open_beyond_cap"] = p.open_beyond_cap;
    rigid.push_back(row);
  }
  j["rigid"] = rigid;
  json reducible = json::array();
  for (const auto& [type, t] : r.reducible) {
    json row;
    row["type"] = type.name();
    row["triple"] = triple_json(t);
    reducible.push_back(row);
  }
  j["reducible"] = reducible;
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact case analysis for principal homomorphisms of hyperbolic triangle groups",
               "trisat"};
  app.require_subcommand(1);

  std::string roots_type;
  bool roots_list = false;
  auto* roots = app.add_subcommand("roots", "root system data of a Dynkin type");
  roots->add_option("X", roots_type, "Dynkin type")->required();
  roots->add_flag("--list", roots_list, "include every positive root");

  TypeTriple h1_in, classify_in, saturation_in, marion_in;
  auto* h1 = app.add_subcommand("h1", "principal H^1 dimension and exceptional-case flag");
  h1_in.attach(h1);

  std::string delta_type;
  int delta_m = 1;
  auto* delta_cmd = app.add_subcommand("delta", "dimension of the elements of order dividing m");
  delta_cmd->add_option("X", delta_type, "Dynkin type")->required();
  delta_cmd->add_option("m", delta_m, "order")->required()->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "reducible / rigid / nonrigid");
  classify_in.attach(classify_cmd);

  auto* saturation_cmd = app.add_subcommand("saturation", "ladder verdict with full trace");
  saturation_in.attach(saturation_cmd);

  int table_which = 0;
  int table_cap = kDefaultRankCap;
  std::string table_format = "json";
  auto* table = app.add_subcommand("table", "regenerate an exception table");
  table->add_option("--which", table_which, "table number")->required()->check(CLI::Range(1, 4));
  table->add_option("--format", table_format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  table->add_option("--rank-cap", table_cap, "largest rank considered");

  std::string fixtures;
  int verify_cap = kDefaultRankCap;
  auto* verify = app.add_subcommand("verify", "regenerate all tables and diff against fixtures");
  verify->add_option("--fixtures", fixtures, "directory containing tables/table{1..4}.csv")
      ->required();
  verify->add_option("--rank-cap", verify_cap, "largest rank considered");

  std::string epi_triple;
  int epi_q = 0;
  std::string epi_conj = "inner";
  bool epi_exact = false;
  auto* epi = app.add_subcommand("epi", "count epimorphisms onto PSL_2(q)");
  epi->add_option("--triple", epi_triple, "a,b,c")->required();
  epi->add_option("--q", epi_q, "odd prime")->required();
  epi->add_option("--conj", epi_conj, "inner or adjoint")
      ->check(CLI::IsMember({"inner", "adjoint"}));
  epi->add_flag("--exact-orders", epi_exact, "require orders exactly a, b, c");

  std::optional<std::string> dev_family;
  std::optional<int> dev_n;
  auto* deviation_cmd = app.add_subcommand("deviation", "exact deviation sums (whole table without options)");
  deviation_cmd->add_option("--family", dev_family, "A, B/C, D, E_6, E_7, E_8, F_4 or G_2");
  deviation_cmd->add_option("--n", dev_n, "modulus")->check(CLI::Range(2, 1000));

  int marion_p = 0;
  auto* marion = app.add_subcommand("marion", "arithmetic finiteness hypothesis");
  marion_in.attach(marion);
  marion->add_option("--p", marion_p, "prime")->required();

  int rp_rank = 4;
  int rp_c = 20;
  auto* rp = app.add_subcommand("rigid-pairs", "scan for rigid triples");
  rp->add_option("--rank-cap", rp_rank, "largest rank");
  rp->add_option("--c-cap", rp_c, "largest triple entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit(err, error_object("usage", e.what()));
    return kUsage;
  }

  try {
    if (*roots) emit(out, cmd_roots(roots_type, roots_list));
    if (*h1) emit(out, cmd_h1(h1_in));
    if (*delta_cmd) emit(out, cmd_delta(delta_type, delta_m));
    if (*classify_cmd) emit(out, cmd_classify(classify_in));
    if (*saturation_cmd) emit(out, cmd_saturation(saturation_in));
    if (*table) out << render_table(table_which, table_cap, table_format);
    if (*verify) {
      bool match = false;
      emit(out, cmd_verify(fixtures, verify_cap, match));
      if (!match) return kMismatch;
    }
    if (*epi) emit(out, cmd_epi(epi_triple, epi_q, epi_conj, epi_exact));
    if (*deviation_cmd) emit(out, cmd_deviation(dev_family, dev_n));
    if (*marion) emit(out, cmd_marion(marion_in, marion_p));
    if (*rp) emit(out, cmd_rigid_pairs(rp_rank, rp_c));
  } catch (const BudgetExceeded& e) {
    json j = error_object("budget", e.what());
    j["error"]["budget"] = e.budget();
    j["error"]["requested"] = e.requested();
    emit(err, j);
    return kBudget;
  } catch (const InvalidArgument& e) {
    emit(err, error_object("invalid_argument", e.what()));
    return kUsage;
  } catch (const std::domain_error& e) {
    emit(err, error_object("domain", e.what()));
    return kUsage;
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"trisat"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace trisat::cli
