#include "wavset/serialize.hpp"

#include "wavset/error.hpp"

#include <limits>

namespace wavset {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      bad("not an integer: " + j.get<std::string>());
    }
  }
  bad("expected an integer");
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json to_json(const PiRational& x) { return {{"num", big_to_json(x.num())}, {"den", big_to_json(x.den())}}; }

PiRational pi_rational_from_json(const Json& j) {
  if (j.is_string()) return PiRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return PiRational(j.get<std::int64_t>());
  BigInt num = big_from_json(field(j, "num"));
  BigInt den = big_from_json(field(j, "den"));
  if (den == 0) bad("zero denominator");
  if (den < 0) num = -num, den = -den;
  return PiRational(Rational(num, den));
}

Json to_json(const Interval& iv) { return {{"a", to_json(iv.a())}, {"b", to_json(iv.b())}}; }

Interval interval_from_json(const Json& j) {
  return Interval(pi_rational_from_json(field(j, "a")), pi_rational_from_json(field(j, "b")));
}

Json to_json(const PiSet& e) {
  Json list = Json::array();
  for (const auto& iv : e.intervals()) list.push_back(to_json(iv));
  return {{"unit", "pi"}, {"intervals", list}};
}

PiSet pi_set_from_json(const Json& j) {
  if (j.contains("unit") && j.at("unit") != "pi") bad("only the unit \"pi\" is supported");
  std::vector<std::pair<PiRational, PiRational>> raw;
  for (const auto& iv : field(j, "intervals")) {
    raw.emplace_back(pi_rational_from_json(field(iv, "a")), pi_rational_from_json(field(iv, "b")));
  }
  return normalize(std::span<const std::pair<PiRational, PiRational>>(raw));
}

Json to_json(const TranslationWitness& w) {
  Json pieces = Json::array();
  for (const auto& p : w.pieces) pieces.push_back({{"piece", to_json(p.piece)}, {"shift", p.shift}});
  return {{"target", to_json(w.target)}, {"pieces", pieces}};
}

Json to_json(const DilationWitness& w) {
  Json pieces = Json::array();
  for (const auto& p : w.pieces) pieces.push_back({{"piece", to_json(p.piece)}, {"exponent", p.exponent}});
  return {{"target", to_json(w.target)}, {"factor", rational_to_string(w.factor)}, {"pieces", pieces}};
}

Json to_json(const WaveletVerdict& v) {
  Json j = {{"is_wavelet_set", v.is_wavelet_set}};
  j["failure_reason"] = v.failure_reason ? Json(failure_reason_name(*v.failure_reason)) : Json(nullptr);
  j["translation"] = v.translation ? to_json(*v.translation) : Json(nullptr);
  j["dilation"] = v.dilation ? to_json(*v.dilation) : Json(nullptr);
  return j;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) bad("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const InterpolationMap& m) {
  Json pieces = Json::array();
  for (const auto& p : m.pieces()) {
    const Rational half = p.offset.coefficient() / 2;
    Json shift = boost::multiprecision::denominator(half) == 1 ? big_to_json(BigInt(boost::multiprecision::numerator(half)))
                                                                : Json(nullptr);
    pieces.push_back({{"piece", to_json(p.piece)}, {"offset", to_json(p.offset)}, {"shift", shift}});
  }
  return {{"domain", to_json(m.domain_core())}, {"target", to_json(m.target_core())}, {"pieces", pieces}};
}

InterpolationMap map_from_json(const Json& j) {
  std::vector<MapPiece> pieces;
  for (const auto& p : field(j, "pieces")) {
    PiRational offset = p.contains("offset") ? pi_rational_from_json(p.at("offset"))
                                             : PiRational(Rational(2 * big_from_json(field(p, "shift"))));
    pieces.push_back({interval_from_json(field(p, "piece")), offset});
  }
  InterpolationMap m(pi_set_from_json(field(j, "domain")), std::move(pieces));
  if (j.contains("target") && pi_set_from_json(j.at("target")) != m.target_core())
    bad("map target does not match its pieces");
  return m;
}

namespace {

Json value_pieces_json(const std::vector<ValuePiece>& pieces) {
  Json list = Json::array();
  for (const auto& p : pieces) list.push_back({{"piece", to_json(p.piece)}, {"value", to_json(p.value)}});
  return list;
}

std::vector<ValuePiece> value_pieces_from_json(const Json& j) {
  std::vector<ValuePiece> out;
  for (const auto& p : j) out.push_back({interval_from_json(field(p, "piece")), complex_from_json(field(p, "value"))});
  return out;
}

}  // namespace

Json to_json(const FrequencySymbol& s) {
  return {{"support", to_json(s.support())}, {"pieces", value_pieces_json(s.pieces())}};
}

FrequencySymbol symbol_from_json(const Json& j) {
  if (!j.contains("pieces") && j.contains("intervals")) return FrequencySymbol::from_set(pi_set_from_json(j));
  return FrequencySymbol(value_pieces_from_json(field(j, "pieces")));
}

Json to_json(const DilationPeriodicFunction& h) {
  return {{"domain", to_json(h.fundamental_domain())}, {"pieces", value_pieces_json(h.pieces())}};
}

DilationPeriodicFunction periodic_from_json(const Json& j) {
  if (j.is_array() || j.is_number()) return DilationPeriodicFunction::constant(complex_from_json(j));
  PiSet domain = j.contains("domain") ? pi_set_from_json(j.at("domain")) : littlewood_paley();
  return DilationPeriodicFunction(std::move(domain), value_pieces_from_json(field(j, "pieces")));
}

Json to_json(const CoefficientFamily& f) {
  Json coeffs = Json::array();
  for (const auto& h : f.coefficients) coeffs.push_back(to_json(h));
  return {{"order", f.order}, {"coefficients", coeffs}, {"sigma", to_json(f.sigma)}};
}

CoefficientFamily family_from_json(const Json& j) {
  const int order = field(j, "order").get<int>();
  std::vector<DilationPeriodicFunction> coeffs;
  for (const auto& h : field(j, "coefficients")) coeffs.push_back(periodic_from_json(h));
  InterpolationMap sigma = j.contains("sigma")
                               ? map_from_json(j.at("sigma"))
                               : build_sigma(pi_set_from_json(field(j, "e")), pi_set_from_json(field(j, "f")));
  return {order, std::move(coeffs), std::move(sigma)};
}

Json to_json(const CriterionReport& r) {
  Json pieces = Json::array();
  for (const auto& p : r.pieces) {
    Json m = Json::array();
    for (auto z : p.matrix) m.push_back(to_json(z));
    pieces.push_back({{"piece", to_json(p.piece)}, {"matrix", m}, {"deviation", p.deviation}});
  }
  return {{"unitary", r.unitary}, {"max_deviation", r.max_deviation}, {"pieces", pieces}};
}

Json to_json(const GramWindow& g) {
  Json index = Json::array();
  for (const auto& [n, l] : g.index) index.push_back({n, l});
  return {{"n_max", g.n_max}, {"l_max", g.l_max}, {"index", index}, {"deviation", g.deviation},
          {"entries", to_json(Matrix(g.entries))}};
}

Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(to_json(m(r, c)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const Json& j) {
  const auto rows = field(j, "rows").get<Eigen::Index>();
  const auto cols = field(j, "cols").get<Eigen::Index>();
  const Json& data = field(j, "data");
  if (rows < 0 || cols < 0 || !data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols)
    bad("matrix data length does not match rows*cols");
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(data[r * cols + c]);
  return m;
}

Vector vector_from_json(const Json& j) {
  if (j.is_array()) {
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
    return v;
  }
  Matrix m = matrix_from_json(j);
  if (m.cols() != 1) bad("vector must have one column");
  return m.col(0);
}

Json to_json(const UnitarySystem& u) {
  Json elements = Json::array();
  for (const auto& m : u.elements) elements.push_back(to_json(m));
  return {{"dim", u.dim}, {"elements", elements}};
}

UnitarySystem system_from_json(const Json& j) {
  if (j.contains("group_table")) return regular_representation(j.at("group_table").get<std::vector<std::vector<int>>>());
  std::vector<Matrix> elements;
  for (const auto& m : field(j, "elements")) elements.push_back(matrix_from_json(m));
  return make_system(std::move(elements));
}

Json to_json(const OperatorSubspaceBasis& b) {
  Json list = Json::array();
  for (const auto& m : b.basis) list.push_back(to_json(m));
  return {{"dim", b.dim}, {"dimension", b.basis.size()}, {"basis", list}};
}

Json to_json(const RankOneDecomposition& d) {
  return {{"weights", d.weights}, {"units", to_json(d.units)}, {"residual", d.residual}};
}

Json to_json(const AcceptanceReport& r, bool include_timing) {
  Json list = Json::array();
  for (const auto& c : r.criteria) {
    Json j = {{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"checks", c.checks}};
    if (include_timing) j["seconds"] = c.seconds;
    list.push_back(std::move(j));
  }
  Json out = {{"passed", r.passed}, {"criteria", list}};
  if (include_timing) out["seconds"] = r.seconds;
  return out;
}

}  // namespace wavset
