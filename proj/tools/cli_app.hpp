/*   Copyright 2026 The vagueq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vagueq/vagueq.hpp"

namespace vagueq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kGrammar = R"(Value grammar:
  interval-set  = "{}" | interval { ";" interval }
  interval      = real "," real                      (half-open [lo, hi))
  subset        = "{}" | label { "|" label }
  wavefunction  = "gaussian" [":" "mu=" real "," "sigma=" real]
                | "box" [":" "n=" int "," "L=" real]
                | "samples:path=" file               (x,value CSV)
  qubit         = "|0>" | "|1>" | "0" | "1" | "amp " re "," im "," re "," im
  two-qubit     = "bell" | "|00>" | "|01>" | "|10>" | "|11>" | "amp " 8 reals
  gate          = "H" | "X" | "Z" | "U:" 8 reals      (row-major re,im pairs)

Files: label,grade (fuzzy sets); x,value CSV with header (grid functions);
subset,value with {} for the empty subset (measure tables); word,grade with
an empty field or ε for the empty word (languages).
Seed: --seed N, else $VAGUEQ_SEED, else 0.)";

namespace detail {

inline void line(std::ostream& out, std::string_view key, double value) {
  out << key << " = " << text::fixed9(value) << '\n';
}

inline void line(std::ostream& out, std::string_view key, std::string_view value) {
  out << key << " = " << value << '\n';
}

inline std::string boolean(bool b) { return b ? "true" : "false"; }

inline void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  body(file);
  if (!file) throw Error("failed writing '" + path + "'");
}

inline std::pair<double, double> parse_pair(std::string_view s, std::string_view what) {
  const auto fields = text::split(text::trim(s), ',');
  if (fields.size() != 2) throw Error(std::string(what) + " must be written as lo,hi");
  return {text::parse_real(fields[0], what), text::parse_real(fields[1], what)};
}

inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("VAGUEQ_SEED"); env != nullptr && *env != '\0') {
    const auto v = text::parse_integer(env, "VAGUEQ_SEED");
    if (v < 0) throw Error("VAGUEQ_SEED must be non-negative");
    return static_cast<std::uint64_t>(v);
  }
  return 0;
}

inline void print_fuzzy_set(std::ostream& out, const FiniteFuzzySet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) line(out, s.universe()[i], s.grade(i).value());
  if (!s.empty()) {
    line(out, "height", height(s).value());
    line(out, "normalized", boolean(is_normalized(s)));
  }
}

}  // namespace detail

/// Parses argv, runs one subcommand and writes its report to `out`.
/// Returns 0 on success, 1 on domain errors, 2 on usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"vagueq: fuzzy sets, possibility measures, Sugeno integrals and a fuzzy reading of qubits"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag, "Seed for Born sampling");

  // fuzzy ------------------------------------------------------------------
  auto* fuzzy = app.add_subcommand("fuzzy", "Set algebra on label,grade fuzzy sets");
  fuzzy->require_subcommand(1);
  std::string fuzzy_a;
  std::string fuzzy_b;
  std::string fuzzy_tnorm = "min";
  std::string fuzzy_csv;
  auto* f_union = fuzzy->add_subcommand("union", "Pointwise t-conorm");
  auto* f_inter = fuzzy->add_subcommand("intersect", "Pointwise t-norm");
  auto* f_comp = fuzzy->add_subcommand("complement", "1 - grade");
  for (auto* sub : {f_union, f_inter}) {
    sub->add_option("--a", fuzzy_a, "First fuzzy set file")->required();
    sub->add_option("--b", fuzzy_b, "Second fuzzy set file")->required();
    sub->add_option("--tnorm", fuzzy_tnorm, "min | product | lukasiewicz");
    sub->add_option("--csv", fuzzy_csv, "Write the result as label,grade");
  }
  f_comp->add_option("--a", fuzzy_a, "Fuzzy set file")->required();
  f_comp->add_option("--csv", fuzzy_csv, "Write the result as label,grade");

  // measure ----------------------------------------------------------------
  auto* measure = app.add_subcommand("measure", "Evaluate or validate monotone measures");
  measure->require_subcommand(1);
  struct MeasureFlags {
    std::string table, possibility, density, distribution, subset, interval;
    std::vector<std::string> parts;
    bool unnormalized = false;
    double tol = 1e-9;
  } mf;
  auto* m_eval = measure->add_subcommand("eval", "Measure of a subset or interval set");
  auto* m_check = measure->add_subcommand("check", "Table axioms, possibility union axiom, additivity");
  for (auto* sub : {m_eval, m_check}) {
    auto* g = sub->add_option_group("measure", "Exactly one measure source");
    g->add_option("--table", mf.table, "subset,value table");
    g->add_option("--possibility", mf.possibility, "label,grade distribution (height 1)");
    g->add_option("--density", mf.density, "x,value CSV density (additive)");
    g->add_option("--distribution", mf.distribution, "x,value CSV possibility distribution");
    g->require_option(1);
    sub->add_flag("--unnormalized", mf.unnormalized, "Accept a density whose mass is not 1");
  }
  m_eval->add_option("--subset", mf.subset, "Subset of a finite universe");
  m_eval->add_option("--interval", mf.interval, "Interval set on a grid");
  m_check->add_option("--part", mf.parts, "Interval set; repeat for each part");
  m_check->add_option("--tol", mf.tol, "Additivity tolerance");

  // integrate --------------------------------------------------------------
  auto* integrate = app.add_subcommand("integrate", "Lebesgue and Sugeno integrals");
  integrate->require_subcommand(1);
  struct IntegrateFlags {
    std::string function, table, possibility, density, distribution, subset, interval;
    bool unnormalized = false;
  } inf;
  auto* i_leb = integrate->add_subcommand("lebesgue", "Trapezoid integral of an x,value CSV");
  i_leb->add_option("--function", inf.function, "x,value CSV")->required();
  i_leb->add_option("--interval", inf.interval, "Interval set (default: whole grid)");
  auto* i_sug = integrate->add_subcommand("sugeno", "Sugeno integral");
  i_sug->add_option("--function", inf.function, "label,grade file or x,value CSV")->required();
  auto* ig = i_sug->add_option_group("measure", "Exactly one measure source");
  ig->add_option("--table", inf.table, "subset,value table (finite)");
  ig->add_option("--possibility", inf.possibility, "label,grade distribution (finite)");
  ig->add_option("--density", inf.density, "x,value CSV density (grid)");
  ig->add_option("--distribution", inf.distribution, "x,value CSV possibility distribution (grid)");
  ig->require_option(1);
  i_sug->add_option("--subset", inf.subset, "Finite domain of integration (default: universe)");
  i_sug->add_option("--interval", inf.interval, "Grid domain of integration (default: whole grid)");
  i_sug->add_flag("--unnormalized", inf.unnormalized, "Accept a density whose mass is not 1");

  // localize ---------------------------------------------------------------
  auto* loc = app.add_subcommand("localize", "Probability vs possibility of finding a particle in [a,b]");
  struct LocalizeFlags {
    std::string wavefunction, interval, domain, csv, sweep;
    std::optional<std::size_t> grid;
    double time = 0.0;
    double width = 1.0;
    double step = 0.5;
  } lf;
  loc->add_option("--wavefunction", lf.wavefunction, "gaussian:..., box:... or samples:path=...")->required();
  loc->add_option("--interval", lf.interval, "a,b")->required();
  loc->add_option("--grid", lf.grid, "Number of grid points");
  loc->add_option("--domain", lf.domain, "x_min,x_max (gaussian only)");
  loc->add_option("--time", lf.time, "Time label recorded in the report");
  loc->add_option("--csv", lf.csv, "Write the sampled density as x,value");
  loc->add_option("--sweep", lf.sweep, "Write a,b,probability,possibility for sliding windows");
  loc->add_option("--width", lf.width, "Sweep window width");
  loc->add_option("--step", lf.step, "Sweep window step");

  // qubit ------------------------------------------------------------------
  auto* qubit = app.add_subcommand("qubit", "Single qubit: gates, memberships, defuzzification");
  struct QubitFlags {
    std::string init = "|0>";
    std::string fuzzy;
    std::vector<std::string> gates;
    std::string report = "memberships";
    std::string method = "both";
    std::optional<std::uint64_t> shots;
    std::string csv;
  } qf;
  auto* init_opt = qubit->add_option("--init", qf.init, "Initial state literal");
  auto* fuzzy_opt = qubit->add_option("--fuzzy", qf.fuzzy, "mu0,mu1 memberships (no normalization required)");
  auto* gate_opt = qubit->add_option("--gate", qf.gates, "Gate to apply; repeat in order");
  fuzzy_opt->excludes(init_opt)->excludes(gate_opt);
  qubit->add_option("--report", qf.report, "memberships | amplitudes | defuzzify | all")
      ->check(CLI::IsMember({"memberships", "amplitudes", "defuzzify", "all"}));
  qubit->add_option("--method", qf.method, "argmax | born | both")->check(CLI::IsMember({"argmax", "born", "both"}));
  qubit->add_option("--shots", qf.shots, "Repeat Born sampling and report counts");
  qubit->add_option("--csv", qf.csv, "Write memberships as label,grade");

  // entangle ---------------------------------------------------------------
  auto* ent = app.add_subcommand("entangle", "Two-qubit states and the factorization test");
  struct EntangleFlags {
    std::string state, a, b;
    std::vector<std::string> gates_a, gates_b;
    double tol = qm::kDefaultEntanglementTolerance;
  } ef;
  auto* state_opt = ent->add_option("--state", ef.state, "Two-qubit literal");
  auto* a_opt = ent->add_option("--a", ef.a, "First qubit of a product state");
  auto* b_opt = ent->add_option("--b", ef.b, "Second qubit of a product state");
  state_opt->excludes(a_opt)->excludes(b_opt);
  a_opt->needs(b_opt);
  b_opt->needs(a_opt);
  ent->add_option("--gate-a", ef.gates_a, "Local gate on the first qubit; repeatable");
  ent->add_option("--gate-b", ef.gates_b, "Local gate on the second qubit; repeatable");
  ent->add_option("--tol", ef.tol, "Threshold on |det|");

  // lang -------------------------------------------------------------------
  auto* lang_cmd = app.add_subcommand("lang", "Fuzzy languages");
  lang_cmd->require_subcommand(1);
  struct LangFlags {
    std::string word, table, with, op = "union", alphabet = "01";
    bool word_given = false;
    bool complement = false;
  } lgf;
  auto* l_grade = lang_cmd->add_subcommand("grade", "Grade of a word");
  l_grade->add_option("--word", lgf.word, "Word over the alphabet (may be empty)")->required();
  l_grade->add_option("--table", lgf.table, "word,grade table instead of the built-in 0^i1^j language");
  l_grade->add_option("--with", lgf.with, "Second word,grade table to combine with");
  l_grade->add_option("--op", lgf.op, "union | intersect")->check(CLI::IsMember({"union", "intersect"}));
  l_grade->add_option("--alphabet", lgf.alphabet, "Alphabet for table languages");
  l_grade->add_flag("--complement", lgf.complement, "Complement the final language");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::ostringstream buf;
  try {
    const std::uint64_t seed = detail::resolve_seed(seed_flag);

    if (fuzzy->parsed()) {
      const auto a = read_fuzzy_set_file(fuzzy_a);
      FiniteFuzzySet result;
      if (f_comp->parsed()) {
        result = fuzzy_complement(a);
      } else {
        const auto kind = parse_tnorm(fuzzy_tnorm);
        const auto b = read_fuzzy_set_file(fuzzy_b);
        result = f_union->parsed() ? fuzzy_union(a, b, kind) : fuzzy_intersection(a, b, kind);
        detail::line(buf, "tnorm", to_string(kind));
      }
      detail::print_fuzzy_set(buf, result);
      if (!fuzzy_csv.empty()) detail::write_file(fuzzy_csv, [&](std::ostream& o) { write_fuzzy_set(o, result); });
    }

    if (measure->parsed()) {
      const auto policy = mf.unnormalized ? MassPolicy::allow_unnormalized : MassPolicy::require_unit;
      std::optional<MeasureSpec> m;
      if (m_check->parsed() && !mf.table.empty()) {
        std::ifstream in(mf.table);
        if (!in) throw Error("cannot open '" + mf.table + "'");
        const auto raw = read_table(in);
        const auto why = table_violation(raw.universe, raw.values);
        detail::line(buf, "kind", "table");
        detail::line(buf, "valid", detail::boolean(!why));
        if (why) detail::line(buf, "reason", *why);
      } else {
        if (!mf.table.empty()) m = read_table_measure_file(mf.table);
        if (!mf.possibility.empty()) m = MeasureSpec::possibility(read_fuzzy_set_file(mf.possibility));
        if (!mf.density.empty()) m = MeasureSpec::additive(read_grid_csv_file(mf.density), policy);
        if (!mf.distribution.empty()) m = MeasureSpec::possibility(read_grid_csv_file(mf.distribution));
        detail::line(buf, "kind", to_string(m->kind()));
        if (const auto* d = std::get_if<AdditiveDensity>(&m->payload())) {
          detail::line(buf, "mass", d->mass);
          detail::line(buf, "normalized", detail::boolean(d->normalized));
        }
        if (m_eval->parsed()) {
          if (m->is_finite()) {
            if (!mf.interval.empty()) throw Error("finite measures take --subset, not --interval");
            detail::line(buf, "measure", measure_of(*m, parse_subset(mf.subset)));
          } else {
            if (!mf.subset.empty()) throw Error("grid measures take --interval, not --subset");
            detail::line(buf, "measure", measure_of(*m, parse_interval_set(mf.interval)));
          }
        } else {
          std::vector<IntervalSet> parts;
          for (const auto& p : mf.parts) parts.push_back(parse_interval_set(p));
          if (m->kind() == MeasureKind::possibilistic && !m->is_finite()) {
            detail::line(buf, "union_axiom", detail::boolean(check_possibility_union_axiom(*m, parts)));
          } else if (m->kind() == MeasureKind::additive_density) {
            detail::line(buf, "additive", detail::boolean(check_additivity(*m, parts, mf.tol)));
          } else {
            detail::line(buf, "valid", "true");
          }
        }
      }
    }

    if (integrate->parsed()) {
      if (i_leb->parsed()) {
        const auto f = read_grid_csv_file(inf.function);
        const auto a = inf.interval.empty() ? full_domain(f) : parse_interval_set(inf.interval);
        detail::line(buf, "integral", lebesgue_integral(f, a));
      } else if (!inf.table.empty() || !inf.possibility.empty()) {
        const auto f = read_fuzzy_set_file(inf.function);
        const auto m = !inf.table.empty() ? read_table_measure_file(inf.table)
                                          : MeasureSpec::possibility(read_fuzzy_set_file(inf.possibility));
        const Subset a = inf.subset.empty() ? Subset(m.universe()) : parse_subset(inf.subset);
        detail::line(buf, "sugeno", sugeno_integral(f, a, m));
      } else {
        const auto f = read_grid_csv_file(inf.function);
        const auto m = !inf.density.empty()
                           ? MeasureSpec::additive(read_grid_csv_file(inf.density),
                                                   inf.unnormalized ? MassPolicy::allow_unnormalized
                                                                    : MassPolicy::require_unit)
                           : MeasureSpec::possibility(read_grid_csv_file(inf.distribution));
        const auto a = inf.interval.empty() ? full_domain(f) : parse_interval_set(inf.interval);
        const auto r = sugeno_integral(f, a, m);
        detail::line(buf, "sugeno", r.value);
        detail::line(buf, "grid_tolerance", r.tolerance);
      }
    }

    if (loc->parsed()) {
      auto spec = parse_wavefunction(lf.wavefunction);
      if (lf.grid) {
        if (std::holds_alternative<SampledDensity>(spec.shape)) throw Error("--grid does not apply to sampled densities");
        spec.grid_points = *lf.grid;
      }
      if (!lf.domain.empty()) {
        if (!std::holds_alternative<Gaussian>(spec.shape)) throw Error("--domain applies to gaussian wavefunctions only");
        std::tie(spec.x_min, spec.x_max) = detail::parse_pair(lf.domain, "domain");
      }
      spec.time = lf.time;
      const auto [a, b] = detail::parse_pair(lf.interval, "interval");
      const auto density = realize_density(spec);
      write_report(buf, localize(density, a, b, spec.time));
      if (!lf.csv.empty()) detail::write_file(lf.csv, [&](std::ostream& o) { write_grid_csv(o, density); });
      if (!lf.sweep.empty()) {
        const auto rows = sweep(density, lf.width, lf.step);
        detail::write_file(lf.sweep, [&](std::ostream& o) { write_sweep_csv(o, rows); });
      }
    }

    if (qubit->parsed()) {
      std::optional<qm::QubitState> state;
      qm::FuzzyQubitState memberships;
      if (!qf.fuzzy.empty()) {
        const auto [mu0, mu1] = detail::parse_pair(qf.fuzzy, "memberships");
        memberships = qm::make_fuzzy_state(mu0, mu1);
      } else {
        state = qm::parse_qubit(qf.init);
        for (const auto& g : qf.gates) state = qm::Gate::parse(g).apply(*state);
        memberships = qm::fuzzify(*state);
      }
      const bool all = qf.report == "all";
      if (qf.report == "amplitudes" || all) {
        if (!state) throw Error("amplitudes are not defined for a state given by memberships");
        detail::line(buf, "a0.re", state->a0().real());
        detail::line(buf, "a0.im", state->a0().imag());
        detail::line(buf, "a1.re", state->a1().real());
        detail::line(buf, "a1.im", state->a1().imag());
        detail::line(buf, "norm", state->norm_squared());
      }
      if (qf.report == "memberships" || all) {
        detail::line(buf, "mu0", memberships.mu0.value());
        detail::line(buf, "mu1", memberships.mu1.value());
        detail::line(buf, "born_compatible", detail::boolean(memberships.born_compatible()));
      }
      if (qf.report == "defuzzify" || all) {
        if (qf.method != "born") {
          detail::line(buf, "argmax", std::to_string(qm::defuzzify(memberships, qm::Defuzzifier::argmax)));
        }
        if (qf.method != "argmax") {
          detail::line(buf, "seed", std::to_string(seed));
          detail::line(buf, "born_sample",
                       std::to_string(qm::defuzzify(memberships, qm::Defuzzifier::born_sample, seed)));
          if (qf.shots) {
            const auto counts = qm::born_samples(memberships, *qf.shots, seed);
            detail::line(buf, "shots", std::to_string(*qf.shots));
            detail::line(buf, "count0", std::to_string(counts.zeros));
            detail::line(buf, "count1", std::to_string(counts.ones));
            detail::line(buf, "frequency0", counts.frequency0());
          }
        }
      }
      if (!qf.csv.empty()) {
        detail::write_file(qf.csv, [&](std::ostream& o) { write_fuzzy_set(o, qm::as_fuzzy_set(memberships)); });
      }
    }

    if (ent->parsed()) {
      if (ef.state.empty() && ef.a.empty()) throw Error("give --state or both --a and --b");
      auto s = !ef.state.empty() ? qm::parse_two_qubit(ef.state)
                                 : qm::tensor_product(qm::parse_qubit(ef.a), qm::parse_qubit(ef.b));
      for (const auto& g : ef.gates_a) s = qm::apply_local(qm::Gate::parse(g), s, qm::Qubit::first);
      for (const auto& g : ef.gates_b) s = qm::apply_local(qm::Gate::parse(g), s, qm::Qubit::second);
      static constexpr const char* kNames[] = {"a00", "a01", "a10", "a11"};
      for (std::size_t k = 0; k < 4; ++k) {
        detail::line(buf, std::string(kNames[k]) + ".re", s.amplitudes()[k].real());
        detail::line(buf, std::string(kNames[k]) + ".im", s.amplitudes()[k].imag());
      }
      detail::line(buf, "det_abs", std::abs(qm::amplitude_determinant(s)));
      detail::line(buf, "entangled", detail::boolean(qm::is_entangled(s, ef.tol)));
    }

    if (lang_cmd->parsed()) {
      const bool builtin = lgf.table.empty();
      auto language = builtin ? lang::zero_one_language() : lang::read_language_table_file(lgf.table, lgf.alphabet);
      if (!lgf.with.empty()) {
        const auto other = lang::read_language_table_file(lgf.with, language.alphabet());
        language = lgf.op == "union" ? lang::language_union(language, other)
                                     : lang::language_intersection(language, other);
      }
      if (lgf.complement) language = lang::language_complement(language);
      detail::line(buf, "grade", language.grade(lgf.word).value());
      if (builtin && lgf.with.empty() && !lgf.complement) {
        detail::line(buf, "grade_exact", lang::zero_one_grade_exact(lgf.word).str());
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  out << buf.str();
  return kExitOk;
}

}  // namespace vagueq::cli
