#include "toral/commands.hpp"

#include "toral/conjugacy.hpp"
#include "toral/corpus.hpp"
#include "toral/parallel.hpp"
#include "toral/report.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace toral {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string compact(const IntMatrix2& m) {
  std::ostringstream out;
  out << '(' << m.alpha << ' ' << m.beta << ' ' << m.gamma << ' ' << m.delta << ')';
  return out.str();
}

std::string triple_text(const ConjugacyTriple& t) {
  std::ostringstream out;
  out << "(t=" << t.t << ", d=" << t.d << ", mgcd=" << t.g << ")";
  return out.str();
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int table1(std::ostream& out) {
  struct Group {
    std::string label;
    CirclePeriods periods;
    bool aut;
    std::vector<std::string> degrees;
  };
  std::vector<Group> groups;
  std::map<std::string, std::size_t> index;
  for (long deg : {1L, 0L, -1L, -2L, -6L, -5L, -4L, -3L, 2L, 3L, 4L, 5L, 6L}) {
    const bool exceptional = deg >= -2 && deg <= 1;
    const std::string label = exceptional ? std::to_string(deg) : "d ∈ Z\\{-2,-1,0,1}";
    const CirclePeriods p = classify_circle(Integer(deg));
    const bool aut = deg == 1 || deg == -1;
    auto it = index.find(label);
    if (it == index.end()) {
      index[label] = groups.size();
      groups.push_back({label, p, aut, {std::to_string(deg)}});
      continue;
    }
    Group& g = groups[it->second];
    if (!(g.periods.per == p.per) || !(g.periods.mper == p.mper) || g.aut != aut) {
      throw std::logic_error("degree " + std::to_string(deg) + " disagrees with its table row");
    }
    g.degrees.push_back(std::to_string(deg));
  }
  out << "| d | MPer(f_A) | Per(f_A) | ∈ Aut(T)? | degrees |\n";
  out << "|---|---|---|---|---|\n";
  for (const Group& g : groups) {
    out << "| " << g.label << " | " << g.periods.mper.str() << " | " << g.periods.per.str() << " | "
        << (g.aut ? "yes" : "no") << " | " << join(g.degrees, ", ") << " |\n";
  }
  return kExitOk;
}

int table2(const std::vector<MatrixEntry>& corpus, std::ostream& out, std::ostream& err) {
  struct RowData {
    std::vector<std::string> reps;
    bool any_aut = false, any_non_aut = false;
  };
  std::map<int, RowData> rows;
  std::vector<std::string> mismatches;
  for (const MatrixEntry& entry : corpus) {
    const Classification c = classify_torus(entry.matrix);
    if (entry.expected_row && *entry.expected_row != c.row) {
      mismatches.push_back(compact(entry.matrix) + " classified as row " + std::to_string(c.row) +
                           ", corpus expects " + std::to_string(*entry.expected_row));
    }
    RowData& row = rows[c.row];
    row.reps.push_back(compact(entry.matrix));
    (c.automorphism ? row.any_aut : row.any_non_aut) = true;
  }
  std::vector<std::string> uncovered;
  for (int r = 1; r <= kTorusRows; ++r) {
    if (!rows.contains(r)) uncovered.push_back(std::to_string(r));
  }
  if (!mismatches.empty() || !uncovered.empty()) {
    for (const auto& m : mismatches) err << "error: " << m << '\n';
    if (!uncovered.empty()) err << "error: corpus leaves rows uncovered: " << join(uncovered, ", ") << '\n';
    return kExitFailed;
  }
  out << "| # | eigenvalues | (t,d) | μ_A | MPer(f_A) | Per(f_A) | ∈ Aut(T²)? | representatives |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& [r, data] : rows) {
    const TorusRow& meta = torus_row(r);
    // Every representative of a row shares its (MPer, Per); classify_torus
    // already returned exactly these sets.
    const char* aut = data.any_aut && data.any_non_aut ? "y/n" : (data.any_aut ? "y" : "n");
    out << "| " << r << " | " << meta.eigenvalues << " | " << meta.trace_det << " | " << meta.minimal_poly
        << " | " << meta.mper.str() << " | " << meta.per.str() << " | " << aut << " | " << join(data.reps, " ")
        << " |\n";
  }
  return kExitOk;
}

}  // namespace

int cmd_classify(const ClassifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IntMatrix2 a = parse_matrix(opts.matrix);
    const Report report = make_report(a, {opts.window, opts.nielsen, opts.oracle});
    if (opts.json) {
      out << to_json(report).dump(2) << '\n';
    } else {
      out << render_text(report);
    }
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const int sources = int(opts.matrix.has_value()) + int(opts.range.has_value()) + int(opts.file.has_value());
    if (sources != 1) throw std::invalid_argument("verify takes exactly one of a matrix, --range or --file");
    if (opts.window < 1) throw std::invalid_argument("--window must be >= 1");
    if (opts.n_max < 2) throw std::invalid_argument("--oracle must be >= 2");

    std::vector<IntMatrix2> matrices;
    if (opts.matrix) {
      matrices.push_back(parse_matrix(*opts.matrix));
    } else if (opts.range) {
      matrices = scan_matrices(*opts.range);
    } else {
      for (auto& entry : read_matrix_file(*opts.file)) matrices.push_back(std::move(entry.matrix));
    }

    const auto verdicts = parallel_map<Verdict>(matrices.size(), [&](std::size_t i) {
      return verify_matrix(matrices[i], opts.window, opts.n_max, !opts.exhaustive);
    });

    std::size_t sound = 0, complete = 0;
    for (const Verdict& v : verdicts) {
      sound += v.sound();
      complete += v.complete();
    }
    const bool all_ok = sound == verdicts.size() && complete == verdicts.size();

    if (opts.json) {
      json list = json::array();
      for (const Verdict& v : verdicts) list.push_back(to_json(v));
      out << json{{"verdicts", list},
                  {"summary",
                   {{"matrices", verdicts.size()}, {"sound", sound}, {"complete", complete},
                    {"window", opts.window}, {"n_max", opts.n_max}}}}
                 .dump(2)
          << '\n';
    } else {
      for (const Verdict& v : verdicts) {
        if (opts.quiet && v.sound() && v.complete()) continue;
        out << compact(v.matrix) << "  row " << v.table_row << "  classified " << window_string(v.classified_window)
            << "  observed " << window_string(v.observed) << "  n<=" << v.n_scanned;
        if (!v.sound()) out << "  UNSOUND " << window_string(v.unexpected());
        if (!v.complete()) out << "  INCOMPLETE missing " << window_string(v.missing());
        if (v.sound() && v.complete()) out << "  ok";
        out << '\n';
      }
      out << "checked " << verdicts.size() << " matrices (K=" << opts.window << ", n_max=" << opts.n_max
          << "): sound " << sound << "/" << verdicts.size() << ", complete " << complete << "/" << verdicts.size()
          << '\n';
    }
    return all_ok ? kExitOk : kExitFailed;
  });
}

int cmd_table(const TableOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.which == 1) return table1(out);
    if (opts.which != 2) throw std::invalid_argument("table must be 1 or 2");
    if (opts.file) return table2(read_matrix_file(*opts.file), out, err);
    return table2(builtin_corpus(), out, err);
  });
}

int cmd_conj(const ConjOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IntMatrix2 a = parse_matrix(opts.a);
    const IntMatrix2 b = parse_matrix(opts.b);
    const ConjugacyTriple ta = triple(a), tb = triple(b);
    const bool local = ta == tb;
    std::optional<IntMatrix2> witness;
    if (opts.modulus) {
      witness = conjugate_mod_n(a, b, *opts.modulus);
      if (witness && !is_conjugator_mod_n(*witness, a, b, *opts.modulus)) {
        throw std::logic_error("conjugator search returned an invalid witness");
      }
    }
    if (opts.json) {
      auto triple_json = [](const ConjugacyTriple& t) {
        return json{{"trace", integer_to_json(t.t)}, {"det", integer_to_json(t.d)}, {"mgcd", integer_to_json(t.g)}};
      };
      json j{{"a", triple_json(ta)}, {"b", triple_json(tb)}, {"locally_conjugate", local}};
      if (opts.modulus) {
        j["modulus"] = *opts.modulus;
        j["witness"] = witness ? json{integer_to_json(witness->alpha), integer_to_json(witness->beta),
                                      integer_to_json(witness->gamma), integer_to_json(witness->delta)}
                               : json(nullptr);
      }
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    out << "A  " << a.str() << "  " << triple_text(ta) << '\n';
    out << "B  " << b.str() << "  " << triple_text(tb) << '\n';
    if (a == b) {
      out << "locally conjugate: yes (identical matrices)\n";
    } else if (local) {
      out << "locally conjugate: yes (conjugate mod n for every n)\n";
    } else {
      out << "locally conjugate: no (triples differ)\n";
    }
    if (opts.modulus) {
      if (witness) {
        out << "mod " << *opts.modulus << ": witness P = " << witness->str() << "  (P A = B P)\n";
      } else {
        out << "mod " << *opts.modulus << ": no witness mod " << *opts.modulus << '\n';
      }
    }
    return kExitOk;
  });
}

int cmd_circle(const CircleOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Integer deg = parse_integer(opts.degree);
    const CirclePeriods p = classify_circle(deg);
    const bool aut = deg == 1 || deg == -1;
    std::optional<PeriodWindow> oracle;
    if (opts.oracle) {
      if (*opts.oracle < 2) throw std::invalid_argument("--oracle must be >= 2");
      PeriodWindow observed{1};
      if (deg != 0) {
        const PeriodWindow orders = observed_orders(deg, *opts.oracle);
        observed.insert(orders.begin(), orders.end());
      }
      oracle = std::move(observed);
    }
    if (opts.json) {
      json j{{"degree", integer_to_json(deg)},
             {"window", opts.window},
             {"mper", to_json(p.mper, opts.window)},
             {"per", to_json(p.per, opts.window)},
             {"automorphism", aut}};
      j["oracle"] = oracle ? json{{"n_max", *opts.oracle}, {"observed", *oracle}} : json(nullptr);
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    out << "degree        " << deg << '\n';
    out << "MPer          " << p.mper.str() << '\n';
    out << "Per           " << p.per.str() << "   [1.." << opts.window << "]: " << window_string(p.per.truncate(opts.window))
        << '\n';
    out << "automorphism  " << (aut ? "yes" : "no") << '\n';
    if (oracle) {
      PeriodWindow in_window;
      for (Period k : *oracle) {
        if (k <= opts.window) in_window.insert(k);
      }
      out << "oracle        n <= " << *opts.oracle << ", [1.." << opts.window << "]: " << window_string(in_window)
          << (in_window == p.per.truncate(opts.window) ? "  (matches Per)" : "  (differs from Per)") << '\n';
    }
    return kExitOk;
  });
}

}  // namespace toral
