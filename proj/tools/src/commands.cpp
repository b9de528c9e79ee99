/* Copyright 2026 The unitconv Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ucc/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ucc/card.hpp"
#include "ucc/repro.hpp"
#include "unitconv/design.hpp"
#include "unitconv/distance.hpp"
#include "unitconv/duality.hpp"
#include "unitconv/error.hpp"
#include "unitconv/groupring.hpp"

namespace ucc {

using namespace unitconv;

namespace {

constexpr const char* kToolName = "ucc 0.1.0";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  return out;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorCode::kParse, "bad " + what + " '" + s + "'");
  return v;
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_uint(part, "index"));
  return out;
}

// "p", "p,m" or "p,m,c0:c1:...:cm" (little-endian modulus).
Field parse_field_spec(const std::string& spec) {
  const auto parts = split(spec, ',');
  if (parts.empty() || parts.size() > 3) throw Error(ErrorCode::kParse, "bad field spec '" + spec + "'");
  const auto p = static_cast<std::uint32_t>(parse_uint(parts[0], "characteristic"));
  const auto m = parts.size() > 1 ? static_cast<std::uint32_t>(parse_uint(parts[1], "degree")) : 1u;
  if (parts.size() < 3) return make_field(p, m);
  std::vector<std::uint32_t> mod;
  for (const auto& c : split(parts[2], ':')) mod.push_back(static_cast<std::uint32_t>(parse_uint(c, "coefficient")));
  return make_field(p, m, mod);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
}

// Plain "key: value" lines unless JSON was asked for.
void emit(std::ostream& out, const json& j, bool as_json) {
  if (as_json) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

struct UnitArgs {
  std::size_t fourier = 0;
  bool germain = false;
  std::string field;
  std::uint32_t base = 0;
  std::string grouping_file;
  std::string matrix_file;
  bool orthogonal = false;
  std::size_t blocks = 0;
  std::size_t chebotarev_guard = 13;
};

void add_unit_options(CLI::App* app, UnitArgs& a, bool fourier_allowed = true) {
  if (fourier_allowed) {
    app->add_option("--fourier", a.fourier, "Fourier matrix of length N");
    app->add_flag("--germain", a.germain, "use Z_{2N+1} for a Germain prime N");
    app->add_option("--field", a.field, "field p[,m[,modulus]]");
    app->add_option("--base", a.base, "prime q for the cyclotomic field GF(q^(N-1))");
    app->add_option("--chebotarev-guard", a.chebotarev_guard, "largest n checked exhaustively");
  }
  app->add_option("--grouping-file", a.grouping_file, "group ring element file");
  app->add_option("--matrix-file", a.matrix_file, "matrix file holding U");
  app->add_flag("--orthogonal", a.orthogonal, "U from --matrix-file is orthogonal, V = U^T");
  app->add_option("--blocks", a.blocks, "number of row blocks");
}

Field fourier_field(const UnitArgs& a) {
  if (!a.field.empty()) return parse_field_spec(a.field);
  const auto n = static_cast<std::uint32_t>(a.fourier);
  if (a.germain) {
    const FourierField ff = fourier_field_for_length(n);
    if (ff.route != FieldRoute::kGermain) {
      throw Error(ErrorCode::kNoValidField, std::to_string(n) + " is not a Germain prime");
    }
    return ff.field;
  }
  if (a.base != 0) return fourier_field_for_length(n, a.base).field;
  return fourier_field_for_length(n).field;
}

// Builds the unit and records its source in the card.
UnitScheme build_unit(const UnitArgs& a, CodeCard& card) {
  const int sources = (a.fourier != 0) + !a.grouping_file.empty() + !a.matrix_file.empty();
  if (sources != 1) {
    throw Error(ErrorCode::kInvalidArgument, "give exactly one of --fourier, --grouping-file, --matrix-file");
  }
  UnitScheme unit;
  if (a.fourier != 0) {
    unit = UnitScheme::fourier(fourier_field(a), a.fourier, a.chebotarev_guard);
    card.unit.kind = "fourier";
    card.unit.fourier_n = a.fourier;
  } else if (!a.grouping_file.empty()) {
    const GroupRingElement v = read_group_ring_text(read_file(a.grouping_file));
    const auto u = gr_inverse(v);
    if (!u) throw Error(ErrorCode::kNotUnit, "group ring element is a zero divisor");
    unit = UnitScheme::from_inverse(to_matrix(*u), to_matrix(v),
                                    "group ring " + v.group().name() + " (" + a.grouping_file + ")");
    card.unit.kind = "group-ring";
    card.unit.element = v;
  } else {
    const Matrix m = read_matrix_text(read_file(a.matrix_file));
    unit = a.orthogonal ? UnitScheme::from_orthogonal(m, "orthogonal matrix " + a.matrix_file)
                        : UnitScheme::from_matrix(m, "matrix " + a.matrix_file);
    card.unit.kind = a.orthogonal ? "orthogonal" : "matrix";
    card.unit.matrix_path = a.matrix_file;
  }
  if (a.blocks != 0) {
    if (unit.n() % a.blocks != 0) {
      throw Error(ErrorCode::kNoBlockPartition, std::to_string(a.blocks) + " blocks do not divide n = " +
                                                    std::to_string(unit.n()));
    }
    card.unit.block_size = unit.n() / a.blocks;
    unit = unit.with_blocks(card.unit.block_size);
  }
  return unit;
}

// Matrix for the self-dual and dual-containing builders.
Matrix orthogonal_source(const UnitArgs& a, CodeCard& card) {
  if (a.grouping_file.empty() == a.matrix_file.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "give exactly one of --grouping-file, --matrix-file");
  }
  if (!a.grouping_file.empty()) {
    const GroupRingElement u = read_group_ring_text(read_file(a.grouping_file));
    card.unit.kind = "group-ring-orthogonal";
    card.unit.element = u;
    card.code.unit_provenance = "group ring " + u.group().name() + " (" + a.grouping_file + ")";
    return to_matrix(u);
  }
  card.unit.kind = "orthogonal";
  card.unit.matrix_path = a.matrix_file;
  card.code.unit_provenance = "orthogonal matrix " + a.matrix_file;
  return read_matrix_text(read_file(a.matrix_file));
}

struct DistanceArgs {
  std::uint64_t guard_states = std::uint64_t{1} << 22;
  std::size_t depth = 4;
  std::size_t support_cap = 3;
  unsigned jobs = 1;
  bool bounds_only = false;
  bool exact_only = false;
  bool skip = false;
};

void add_distance_options(CLI::App* app, DistanceArgs& d, bool allow_skip) {
  app->add_option("--guard-states", d.guard_states, "largest trellis state count");
  app->add_option("--depth", d.depth, "extra input degree for bounded searches");
  app->add_option("--support-cap", d.support_cap, "largest input support for bounded searches");
  app->add_option("--jobs", d.jobs, "worker threads");
  auto* bounds = app->add_flag("--bounds", d.bounds_only, "skip the exact trellis search");
  app->add_flag("--exact", d.exact_only, "require the exact trellis search (exit 2 past the guard)")->excludes(bounds);
  if (allow_skip) app->add_flag("--no-distance", d.skip, "do not compute distance bounds");
}

DistanceOptions distance_options(const DistanceArgs& d) {
  DistanceOptions o;
  o.state_guard = d.guard_states;
  o.search_depth = d.depth;
  o.support_cap = d.support_cap;
  o.jobs = std::max(1u, d.jobs);
  return o;
}

DistanceReport compute_distance(const ConvCode& code, const UnitScheme* unit, const DistanceArgs& d) {
  const DistanceOptions o = distance_options(d);
  if (d.exact_only) return free_distance_exact(code, o);
  if (!d.bounds_only) {
    try {
      return free_distance_exact(code, o);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGuardExceeded) throw;
    }
  }
  return free_distance_bounds(code, unit, o);
}

// Low density: no 4-cycle and column weight at most sqrt(n).
void attach_ldpc(CodeCard& card, const Matrix& m, const std::string& which) {
  const TannerReport t = tanner_diagnostics(m);
  LdpcReport r;
  r.matrix = which;
  r.has_4cycle = t.has_4cycle;
  r.max_column_weight = t.column_weights.empty() ? 0 : *std::max_element(t.column_weights.begin(), t.column_weights.end());
  r.min_column_weight = t.column_weights.empty() ? 0 : *std::min_element(t.column_weights.begin(), t.column_weights.end());
  r.max_row_weight = t.row_weights.empty() ? 0 : *std::max_element(t.row_weights.begin(), t.row_weights.end());
  card.ldpc = r;
  const auto limit = static_cast<std::size_t>(std::sqrt(static_cast<double>(m.rows())));
  card.code.flags.ldpc = !r.has_4cycle && r.max_column_weight <= limit;
}

json distance_summary(const DistanceReport& d) {
  return {{"lower", d.lower},
          {"lower_provenance", d.lower_provenance},
          {"upper", d.upper},
          {"upper_provenance", d.upper_provenance},
          {"exact", d.exact},
          {"method", distance_method_name(d.method)},
          {"work", d.work}};
}

json card_summary(const CodeCard& card) {
  const ConvCode& c = card.code;
  json j{{"parameters", c.parameters()},
         {"field", c.field.name()},
         {"unit", card.unit.kind},
         {"chebotarev", chebotarev_status_name(c.unit_status)},
         {"right_inverse", c.right_inverse ? c.right_inverse_method : "none"},
         {"check_matrix", c.check_matrix ? c.check_matrix_method : "none"}};
  if (card.block_tuples) {
    j["block_scheme"] = *card.block_tuples;
  } else if (c.scheme) {
    j["scheme"] = c.scheme->to_string();
  }
  if (c.distance) j["distance"] = distance_summary(*c.distance);
  if (c.duality) j["duality"] = duality_kind_name(c.duality->kind);
  if (card.ldpc) j["ldpc"] = c.flags.ldpc;
  return j;
}

// Writes the card to `path`, or to `out` when no path is given.
void deliver(const CodeCard& card, const std::string& path, std::ostream& out, bool as_json) {
  const std::string text = write_card(card);
  if (path.empty()) {
    out << text;
    return;
  }
  write_file(path, text);
  json s = card_summary(card);
  s["card"] = path;
  emit(out, s, as_json);
}

CodeCard new_card() {
  CodeCard card;
  card.created = timestamp_now();
  card.tool = kToolName;
  return card;
}

// In block mode a list without '/' names one block per power of z.
std::vector<std::vector<std::size_t>> parse_block_tuples(const std::string& text) {
  if (text.find('/') == std::string::npos) {
    std::vector<std::vector<std::size_t>> out;
    for (auto b : parse_index_list(text)) out.push_back({b});
    return out;
  }
  return SelectionScheme::parse(text).tuples();
}

// ---------------------------------------------------------------------------

int cmd_field(const std::string& spec, bool as_json, std::ostream& out) {
  const Field f = parse_field_spec(spec);
  emit(out,
       {{"name", f.name()},
        {"p", f.characteristic()},
        {"m", f.degree()},
        {"cardinality", f.cardinality()},
        {"modulus", f.modulus()},
        {"primitive_element", elem_to_json(f, f.primitive_element())}},
       as_json);
  return kExitOk;
}

int cmd_fourier(const UnitArgs& a, bool as_json, std::ostream& out) {
  if (a.fourier == 0) throw Error(ErrorCode::kInvalidArgument, "--fourier N is required");
  const Field f = fourier_field(a);
  const FourierPair fp = fourier_matrix(f, a.fourier);
  json rows = json::array();
  for (std::size_t i = 0; i < fp.U.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < fp.U.cols(); ++j) row.push_back(elem_to_json(f, fp.U(i, j)));
    rows.push_back(row);
  }
  emit(out,
       {{"field", f.name()},
        {"n", a.fourier},
        {"root", elem_to_json(f, fp.root.value())},
        {"inverse_verified", (fp.U * fp.V).is_identity()},
        {"matrix", rows}},
       as_json);
  return kExitOk;
}

int cmd_chebotarev(const UnitArgs& a, unsigned jobs, bool as_json, std::ostream& out) {
  if (a.fourier == 0) throw Error(ErrorCode::kInvalidArgument, "--fourier N is required");
  const Field f = fourier_field(a);
  const ChebotarevResult r = chebotarev_check(fourier_matrix(f, a.fourier).U, a.chebotarev_guard, jobs);
  json j{{"field", f.name()}, {"n", a.fourier}, {"holds", r.holds}, {"determinants", r.determinants}};
  if (!r.holds) {
    j["failing_rows"] = r.failing_rows;
    j["failing_cols"] = r.failing_cols;
  }
  emit(out, j, as_json);
  return kExitOk;
}

struct DesignArgs {
  UnitArgs unit;
  DistanceArgs dist;
  std::size_t rate = 0;
  std::size_t memory = 0;
  bool memory_set = false;
  std::string scheme;
  std::string out;
  bool as_json = false;
};

CodeCard design(const DesignArgs& a) {
  CodeCard card = new_card();
  const UnitScheme unit = build_unit(a.unit, card);
  SelectionScheme scheme;
  if (unit.block_size()) {
    std::vector<std::vector<std::size_t>> blocks;
    if (!a.scheme.empty()) {
      blocks = parse_block_tuples(a.scheme);
    } else {
      if (!a.memory_set) throw Error(ErrorCode::kInvalidArgument, "block designs need --scheme or --memory");
      for (std::size_t i = 0; i <= a.memory; ++i) blocks.push_back({i});
    }
    scheme = block_scheme(unit, blocks);
    card.block_tuples = blocks;
  } else if (!a.scheme.empty()) {
    scheme = SelectionScheme::parse(a.scheme);
  } else {
    if (a.rate == 0 || !a.memory_set) throw Error(ErrorCode::kInvalidArgument, "give --scheme or --rate and --memory");
    scheme = auto_design(unit, a.rate, a.memory);
  }
  if (a.rate != 0 && scheme.r() != a.rate) {
    throw Error(ErrorCode::kInvalidArgument, "scheme rate " + std::to_string(scheme.r()) + " != --rate");
  }
  card.code = build_generator(unit, scheme);
  certify(card.code, &unit);
  if (card.unit.kind == "group-ring") attach_ldpc(card, unit.V(), "V");
  if (!a.dist.skip) card.code.distance = compute_distance(card.code, &unit, a.dist);
  return card;
}

int cmd_ldpc_build(const DesignArgs& a, std::ostream& out) {
  const GroupRingElement v = read_group_ring_text(read_file(a.unit.grouping_file));
  const Matrix V = to_matrix(v);
  const TannerReport t = tanner_diagnostics(V);
  const auto u = gr_inverse(v);
  json diag{{"group", v.group().name()}, {"support", v.support()}, {"has_4cycle", t.has_4cycle},
            {"column_weights", json::array()}, {"unit", u.has_value()}};
  std::map<std::size_t, std::size_t> hist;
  for (auto w : t.column_weights) ++hist[w];
  for (auto [w, c] : hist) diag["column_weights"].push_back({w, c});
  if (!u) {
    emit(out, diag, a.as_json);
    throw Error(ErrorCode::kNotUnit, "group ring element is a zero divisor");
  }
  if (a.unit.blocks != 0) {
    const Matrix U = to_matrix(*u);
    const std::size_t b = V.rows() / a.unit.blocks;
    bool grid = V.rows() % a.unit.blocks == 0;
    for (std::size_t i = 0; grid && i < a.unit.blocks; ++i) {
      std::vector<std::size_t> rows(b);
      std::iota(rows.begin(), rows.end(), i * b);
      const Matrix Ai = U.select_rows(rows);
      for (std::size_t j = 0; grid && j < a.unit.blocks; ++j) {
        std::vector<std::size_t> cols(b);
        std::iota(cols.begin(), cols.end(), j * b);
        const Matrix p = Ai * V.select_cols(cols);
        grid = i == j ? p.is_identity() : p.is_zero();
      }
    }
    diag["block_grid_verified"] = grid;
    if (!grid) {
      emit(out, diag, a.as_json);
      throw Error(ErrorCode::kVerificationFailed, "A_i B_j != delta_ij I");
    }
  }
  DesignArgs d = a;
  if (d.scheme.empty() && !d.memory_set && a.unit.blocks != 0) {
    d.memory = a.unit.blocks - 1;
    d.memory_set = true;
  }
  const CodeCard card = design(d);
  if (a.out.empty()) {
    out << write_card(card);
    return kExitOk;
  }
  write_file(a.out, write_card(card));
  diag["card"] = a.out;
  diag["parameters"] = card.code.parameters();
  diag["right_inverse"] = card.code.right_inverse_method;
  emit(out, diag, a.as_json);
  return kExitOk;
}

CodeCard load_card(const std::string& path) { return read_card(read_file(path)); }

std::optional<UnitScheme> maybe_unit(const CodeCard& card) {
  if (card.unit.kind == "none") return std::nullopt;
  return rebuild_unit(card);
}

int cmd_load(const std::string& path, bool verify, bool as_json, std::ostream& out) {
  const std::string text = read_file(path);
  const CodeCard card = read_card(text);
  json j = card_summary(card);
  if (verify) {
    verify_certificates(card.code);
    if (card.code.scheme) {
      if (const auto unit = maybe_unit(card)) {
        if (!(build_generator(*unit, *card.code.scheme).G == card.code.G)) {
          throw Error(ErrorCode::kVerificationFailed, "generator does not match unit and scheme");
        }
      }
    }
    if (card.code.right_inverse && !(card.code.G * *card.code.right_inverse == PolyMatrix::identity(card.code.field, card.code.r))) {
      throw Error(ErrorCode::kVerificationFailed, "right inverse");
    }
    if (write_card(card) != text) throw Error(ErrorCode::kVerificationFailed, "card does not re-serialize bit-identically");
    j["verified"] = true;
  }
  emit(out, j, as_json);
  return kExitOk;
}

int cmd_export(const std::string& path, const std::string& format, const std::string& dest, std::ostream& out) {
  const CodeCard card = load_card(path);
  std::string text;
  if (format == "json") {
    text = card_to_json(card).dump(2) + "\n";
  } else if (format == "text") {
    std::ostringstream ss;
    const PolyMatrix& g = card.code.G;
    ss << "# generator " << card.code.parameters() << " over " << card.code.field.name() << "\n";
    for (std::size_t k = 0; k < g.blocks().size(); ++k) {
      ss << "# z^" << k << "\n" << write_matrix_text(g.blocks()[k]);
    }
    text = ss.str();
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown export format '" + format + "'");
  }
  if (dest.empty()) {
    out << text;
  } else {
    write_file(dest, text);
  }
  return kExitOk;
}

int exit_code_for(ErrorCode c) {
  return c == ErrorCode::kGuardExceeded || c == ErrorCode::kSearchLimitExceeded ? kExitGuard : kExitFailure;
}

void report_error(std::ostream& err, const std::string& code, const std::string& message) {
  err << json{{"code", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ucc: convolutional codes from unit schemes", "ucc"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string field_spec;
  auto* field = app.add_subcommand("field", "describe a finite field");
  field->add_option("--field", field_spec, "p[,m[,modulus]]")->required();

  UnitArgs fa;
  auto* fourier = app.add_subcommand("fourier", "print a Fourier matrix");
  add_unit_options(fourier, fa);

  UnitArgs ca;
  unsigned cheb_jobs = 1;
  auto* cheb = app.add_subcommand("chebotarev", "exhaustive Chebotarev check of a Fourier matrix");
  add_unit_options(cheb, ca);
  cheb->add_option("--jobs", cheb_jobs, "worker threads");

  DesignArgs da;
  auto* design_cmd = app.add_subcommand("design", "build, certify and measure a code; writes a card");
  add_unit_options(design_cmd, da.unit);
  add_distance_options(design_cmd, da.dist, true);
  design_cmd->add_option("--rate", da.rate, "rows per power of z");
  auto* mem_opt = design_cmd->add_option("--memory", da.memory, "memory");
  design_cmd->add_option("--scheme", da.scheme, "i,j/k,l/... (block indices with --blocks)");
  design_cmd->add_option("--out", da.out, "card path");

  std::string card_path, out_path;
  auto* certify_cmd = app.add_subcommand("certify", "attach right inverse and check matrix to a card");
  certify_cmd->add_option("card", card_path)->required();
  certify_cmd->add_option("--out", out_path, "card path");

  DistanceArgs dd;
  std::size_t support = 0;
  auto* distance = app.add_subcommand("distance", "free distance or bounds for a card");
  distance->add_option("card", card_path)->required();
  add_distance_options(distance, dd, false);
  distance->add_option("--support", support, "support profile for inputs of support >= T");
  distance->add_option("--out", out_path, "write the card with the new distance report");

  std::uint64_t gn = 0, gr = 0, gd = 0;
  auto* gsb_cmd = app.add_subcommand("gsb", "generalized Singleton bound");
  gsb_cmd->add_option("n", gn)->required();
  gsb_cmd->add_option("r", gr)->required();
  gsb_cmd->add_option("delta", gd)->required();

  DesignArgs la;
  auto* ldpc = app.add_subcommand("ldpc-build", "LDPC code from a group ring element");
  ldpc->add_option("--grouping-file", la.unit.grouping_file, "group ring element file")->required();
  ldpc->add_option("--blocks", la.unit.blocks, "number of row blocks")->required();
  auto* ldpc_mem = ldpc->add_option("--memory", la.memory, "memory");
  ldpc->add_option("--scheme", la.scheme, "block scheme");
  ldpc->add_option("--out", la.out, "card path");
  add_distance_options(ldpc, la.dist, true);

  UnitArgs sa;
  std::string order;
  DistanceArgs sd;
  auto* selfdual = app.add_subcommand("selfdual", "self-dual code from an orthogonal unit (characteristic 2)");
  add_unit_options(selfdual, sa, false);
  selfdual->add_option("--order", order, "block order, e.g. 2,0,1,3");
  selfdual->add_option("--out", out_path, "card path");
  add_distance_options(selfdual, sd, true);

  UnitArgs xa;
  std::size_t shift = 1;
  DistanceArgs xd;
  auto* dualc = app.add_subcommand("dualcontain", "sliding-window dual-containing code (characteristic 2)");
  add_unit_options(dualc, xa, false);
  dualc->add_option("--shift", shift, "window shift in blocks");
  dualc->add_option("--out", out_path, "card path");
  add_distance_options(dualc, xd, true);

  ReproOptions ro;
  auto* repro = app.add_subcommand("repro", "run the acceptance table");
  repro->add_option("--only", ro.only, "criterion ids or groups, comma separated");
  repro->add_option("--seed", ro.seed, "seed for randomized rows");
  repro->add_option("--jobs", ro.jobs, "worker threads");

  std::string format = "json";
  auto* exp = app.add_subcommand("export", "export a card");
  exp->add_option("card", card_path)->required();
  exp->add_option("--format", format, "json or text");
  exp->add_option("--out", out_path, "output path");

  bool verify = false;
  auto* load = app.add_subcommand("load", "read a card");
  load->add_option("card", card_path)->required();
  load->add_flag("--verify", verify, "re-check certificates and the round trip");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "machine-readable output");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "Usage", e.what());
    return kExitFailure;
  }
  da.memory_set = mem_opt->count() > 0;
  la.memory_set = ldpc_mem->count() > 0;
  da.as_json = la.as_json = as_json;

  try {
    if (field->parsed()) return cmd_field(field_spec, as_json, out);
    if (fourier->parsed()) return cmd_fourier(fa, as_json, out);
    if (cheb->parsed()) return cmd_chebotarev(ca, cheb_jobs, as_json, out);
    if (design_cmd->parsed()) {
      deliver(design(da), da.out, out, as_json);
      return kExitOk;
    }
    if (certify_cmd->parsed()) {
      CodeCard card = load_card(card_path);
      const auto unit = maybe_unit(card);
      certify(card.code, unit ? &*unit : nullptr);
      deliver(card, out_path, out, as_json);
      return kExitOk;
    }
    if (distance->parsed()) {
      CodeCard card = load_card(card_path);
      const auto unit = maybe_unit(card);
      const UnitScheme* up = unit ? &*unit : nullptr;
      if (support != 0) {
        const SupportProfile p = support_profile(card.code, support, up, distance_options(dd));
        emit(out,
             {{"parameters", card.code.parameters()},
              {"support", p.t},
              {"lower", p.lower},
              {"lower_provenance", p.lower_provenance},
              {"upper", p.upper},
              {"upper_provenance", p.upper_provenance},
              {"complete", p.complete},
              {"work", p.work}},
             as_json);
        return kExitOk;
      }
      card.code.distance = compute_distance(card.code, up, dd);
      if (out_path.empty()) {
        json s = distance_summary(*card.code.distance);
        s["parameters"] = card.code.parameters();
        emit(out, s, as_json);
      } else {
        deliver(card, out_path, out, as_json);
      }
      return kExitOk;
    }
    if (gsb_cmd->parsed()) {
      emit(out, {{"n", gn}, {"r", gr}, {"delta", gd}, {"gsb", gsb(gn, gr, gd)}}, as_json);
      return kExitOk;
    }
    if (ldpc->parsed()) return cmd_ldpc_build(la, out);
    if (selfdual->parsed() || dualc->parsed()) {
      const bool self = selfdual->parsed();
      const UnitArgs& ua = self ? sa : xa;
      CodeCard card = new_card();
      const Matrix U = orthogonal_source(ua, card);
      const std::string provenance = card.code.unit_provenance;
      if (ua.blocks == 0) throw Error(ErrorCode::kInvalidArgument, "--blocks is required");
      card.code = self ? build_self_dual(U, ua.blocks, order.empty() ? std::vector<std::size_t>{} : parse_index_list(order))
                       : build_dual_containing(U, ua.blocks, shift);
      card.code.unit_provenance = provenance;
      const DistanceArgs& d = self ? sd : xd;
      if (!d.skip) card.code.distance = compute_distance(card.code, nullptr, d);
      deliver(card, out_path, out, as_json);
      return kExitOk;
    }
    if (repro->parsed()) {
      bool all = true;
      json results = json::array();
      run_repro(ro, [&](const CriterionResult& r) {
        all = all && r.pass;
        if (as_json) {
          results.push_back(result_to_json(r));
        } else {
          out << format_result(r) << std::endl;
        }
      });
      if (as_json) out << json{{"pass", all}, {"seed", ro.seed}, {"results", results}}.dump() << "\n";
      return all ? kExitOk : kExitFailure;
    }
    if (exp->parsed()) return cmd_export(card_path, format, out_path, out);
    if (load->parsed()) return cmd_load(card_path, verify, as_json, out);
  } catch (const Error& e) {
    report_error(err, std::string(error_code_name(e.code())), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report_error(err, "Internal", e.what());
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace ucc
