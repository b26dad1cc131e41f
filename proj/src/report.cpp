#include "toral/report.hpp"

#include "toral/nielsen.hpp"

#include <sstream>
#include <stdexcept>

namespace toral {

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer string " + j.dump());
    return v;
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

std::string window_string(const PeriodWindow& w) {
  return PeriodSet::finite(w).str();
}

json to_json(const PeriodSet& set, Period window) {
  return {{"kind", base_name(set.base())},
          {"add", set.added()},
          {"remove", set.removed()},
          {"window", set.truncate(window)},
          {"text", set.str()}};
}

PeriodSet period_set_from_json(const json& j) {
  return PeriodSet(parse_base(j.at("kind").get<std::string>()), j.at("add").get<PeriodWindow>(),
                   j.at("remove").get<PeriodWindow>());
}

namespace {

json eigen_to_json(const EigenStructure& e) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegerPair>) {
          return {{"kind", "integer"}, {"values", {integer_to_json(v.a), integer_to_json(v.b)}}};
        } else if constexpr (std::is_same_v<T, ComplexPair>) {
          return {{"kind", "complex"}, {"values", {integer_to_json(v.t), integer_to_json(v.d)}}};
        } else {
          return {{"kind", "real_quadratic"}, {"values", {integer_to_json(v.t), integer_to_json(v.d)}}};
        }
      },
      e);
}

EigenStructure eigen_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const json& values = j.at("values");
  if (values.size() != 2) throw std::invalid_argument("eigen.values must hold two integers");
  Integer x = integer_from_json(values[0]);
  Integer y = integer_from_json(values[1]);
  if (kind == "integer") return IntegerPair{x, y};
  if (kind == "complex") return ComplexPair{x, y};
  if (kind == "real_quadratic") return RealQuadratic{x, y, Integer(x * x - 4 * y)};
  throw std::invalid_argument("unknown eigen kind '" + kind + "'");
}

std::string eigen_text(const EigenStructure& e) {
  std::ostringstream out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegerPair>) {
          out << "integer " << v.a << ", " << v.b;
        } else if constexpr (std::is_same_v<T, ComplexPair>) {
          out << "complex conjugate pair, |xi|^2 = " << v.d;
        } else {
          out << "irrational real pair, discriminant " << v.delta;
        }
      },
      e);
  return out.str();
}

void check_window(const json& j, const PeriodSet& set, Period window, const char* name) {
  if (j.at("window").get<PeriodWindow>() != set.truncate(window)) {
    throw std::invalid_argument(std::string(name) + ".window disagrees with its symbolic description");
  }
}

}  // namespace

Report make_report(const IntMatrix2& a, const ReportOptions& options) {
  const Classification c = classify_torus(a);
  Report r;
  r.matrix = a;
  r.invariants = invariants(a);
  r.eigen = c.eigen;
  r.minimal_poly = poly_string(c.mu);
  r.finite_order = finite_order(a);
  r.automorphism = c.automorphism;
  r.table_row = c.row;
  r.per = c.per;
  r.mper = c.mper;
  r.window = options.window;
  if (options.nielsen_limit) r.nielsen = nielsen_sequence(a, *options.nielsen_limit).values;
  if (options.oracle_n_max) r.oracle = OracleData{*options.oracle_n_max, observed_periods(a, *options.oracle_n_max)};
  return r;
}

json to_json(const Report& r) {
  json j;
  j["matrix"] = {integer_to_json(r.matrix.alpha), integer_to_json(r.matrix.beta),
                 integer_to_json(r.matrix.gamma), integer_to_json(r.matrix.delta)};
  j["trace"] = integer_to_json(r.invariants.t);
  j["det"] = integer_to_json(r.invariants.d);
  j["discriminant"] = integer_to_json(r.invariants.delta);
  j["mgcd"] = integer_to_json(r.invariants.g);
  j["eigen"] = eigen_to_json(r.eigen);
  j["minimal_poly"] = r.minimal_poly;
  j["finite_order"] = r.finite_order ? json(*r.finite_order) : json(nullptr);
  j["automorphism"] = r.automorphism;
  j["table_row"] = r.table_row;
  j["window"] = r.window;
  j["per"] = to_json(r.per, r.window);
  j["mper"] = to_json(r.mper, r.window);
  if (r.nielsen) {
    json seq = json::array();
    for (const Integer& v : *r.nielsen) seq.push_back(integer_to_json(v));
    j["nielsen"] = seq;
  } else {
    j["nielsen"] = nullptr;
  }
  j["oracle"] = r.oracle ? json{{"n_max", r.oracle->n_max}, {"observed", r.oracle->observed}} : json(nullptr);
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    const json& m = j.at("matrix");
    if (m.size() != 4) throw std::invalid_argument("matrix must hold four integers");
    r.matrix = {integer_from_json(m[0]), integer_from_json(m[1]), integer_from_json(m[2]), integer_from_json(m[3])};
    r.invariants = {integer_from_json(j.at("trace")), integer_from_json(j.at("det")),
                    integer_from_json(j.at("discriminant")), integer_from_json(j.at("mgcd"))};
    r.eigen = eigen_from_json(j.at("eigen"));
    r.minimal_poly = j.at("minimal_poly").get<std::string>();
    if (!j.at("finite_order").is_null()) r.finite_order = j.at("finite_order").get<int>();
    r.automorphism = j.at("automorphism").get<bool>();
    r.table_row = j.at("table_row").get<int>();
    r.window = j.at("window").get<Period>();
    r.per = period_set_from_json(j.at("per"));
    r.mper = period_set_from_json(j.at("mper"));
    check_window(j.at("per"), r.per, r.window, "per");
    check_window(j.at("mper"), r.mper, r.window, "mper");
    if (const json& seq = j.at("nielsen"); !seq.is_null()) {
      std::vector<Integer> values;
      for (const json& v : seq) values.push_back(integer_from_json(v));
      r.nielsen = std::move(values);
    }
    if (const json& o = j.at("oracle"); !o.is_null()) {
      r.oracle = OracleData{o.at("n_max").get<std::uint32_t>(), o.at("observed").get<PeriodWindow>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  const auto& inv = r.invariants;
  out << "matrix        " << r.matrix.str() << '\n';
  out << "invariants    t=" << inv.t << " d=" << inv.d << " disc=" << inv.delta << " mgcd=" << inv.g << '\n';
  out << "eigenvalues   " << eigen_text(r.eigen) << '\n';
  out << "minimal poly  " << r.minimal_poly << '\n';
  out << "finite order  " << (r.finite_order ? std::to_string(*r.finite_order) : "none") << '\n';
  out << "automorphism  " << (r.automorphism ? "yes" : "no") << '\n';
  out << "table row     " << r.table_row << '\n';
  out << "MPer          " << r.mper.str() << "   [1.." << r.window << "]: " << window_string(r.mper.truncate(r.window)) << '\n';
  out << "Per           " << r.per.str() << "   [1.." << r.window << "]: " << window_string(r.per.truncate(r.window)) << '\n';
  if (r.nielsen) {
    out << "nielsen       ";
    for (std::size_t i = 0; i < r.nielsen->size(); ++i) out << (i ? " " : "") << (*r.nielsen)[i];
    out << '\n';
  }
  if (r.oracle) {
    out << "oracle        n <= " << r.oracle->n_max << ": " << window_string(r.oracle->observed) << '\n';
  }
  return out.str();
}

bool Verdict::sound() const { return unexpected().empty(); }
bool Verdict::complete() const { return missing().empty(); }

PeriodWindow Verdict::unexpected() const {
  PeriodWindow out;
  for (Period k : observed) {
    if (!per.contains(k)) out.insert(k);
  }
  return out;
}

PeriodWindow Verdict::missing() const {
  PeriodWindow out;
  for (Period k : classified_window) {
    if (!observed.contains(k)) out.insert(k);
  }
  return out;
}

Verdict verify_matrix(const IntMatrix2& a, Period window, std::uint32_t n_max, bool adaptive) {
  const Classification c = classify_torus(a);
  Verdict v;
  v.matrix = a;
  v.table_row = c.row;
  v.per = c.per;
  v.window = window;
  v.classified_window = c.per.truncate(window);
  v.n_max = n_max;
  PeriodScan scan = adaptive ? scan_periods(a, n_max, v.classified_window) : scan_periods(a, n_max);
  v.observed = std::move(scan.observed);
  v.n_scanned = scan.n_scanned;
  return v;
}

json to_json(const Verdict& v) {
  return {{"matrix", {integer_to_json(v.matrix.alpha), integer_to_json(v.matrix.beta),
                      integer_to_json(v.matrix.gamma), integer_to_json(v.matrix.delta)}},
          {"table_row", v.table_row},
          {"per", v.per.str()},
          {"window", v.window},
          {"classified_window", v.classified_window},
          {"observed", v.observed},
          {"n_max", v.n_max},
          {"n_scanned", v.n_scanned},
          {"sound", v.sound()},
          {"complete", v.complete()}};
}

}  // namespace toral
