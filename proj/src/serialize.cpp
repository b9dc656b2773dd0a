#include "qcu/serialize.hpp"

namespace qcu {

Json poly_to_json(const Poly& p) { return p.to_string(); }

Poly poly_from_json(const RingPtr& ring, const Json& j) {
  if (!j.is_string()) throw InvalidInput("polynomial must be a JSON string");
  return parse_poly(ring, j.get<std::string>());
}

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

PolyMatrix matrix_from_json(const RingPtr& ring, const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InvalidInput("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].size();
  PolyMatrix m(ring, j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InvalidInput("matrix rows have different lengths");
    for (std::size_t k = 0; k < cols; ++k) m.set(i, k, poly_from_json(ring, j[i][k]));
  }
  return m;
}

Json candidate_to_json(const UlrichCandidate& c) {
  Json j;
  j["field"] = c.ring->field().to_string();
  j["variables"] = c.ring->vars();
  j["n"] = c.n;
  j["q1"] = poly_to_json(c.q1);
  j["q2"] = poly_to_json(c.q2);
  j["A"] = matrix_to_json(c.a);
  j["B_prime"] = matrix_to_json(c.b_prime);
  j["C1"] = matrix_to_json(c.c1);
  j["C2"] = matrix_to_json(c.c2);
  if (c.d) {
    Json d = Json::array();
    for (const Scalar& s : *c.d) d.push_back(s.to_string());
    j["d"] = d;
  } else {
    j["d"] = nullptr;
  }
  j["notes"] = c.notes;
  return j;
}

UlrichCandidate candidate_from_json(const Json& j) {
  try {
    const Field f = Field::parse(j.at("field").get<std::string>());
    RingPtr ring = make_ring(f, j.at("variables").get<std::vector<std::string>>());
    UlrichCandidate c{ring,
                      poly_from_json(ring, j.at("q1")),
                      poly_from_json(ring, j.at("q2")),
                      matrix_from_json(ring, j.at("A")),
                      matrix_from_json(ring, j.at("B_prime")),
                      matrix_from_json(ring, j.at("C1")),
                      matrix_from_json(ring, j.at("C2")),
                      j.at("n").get<int>(),
                      std::nullopt,
                      j.value("notes", std::vector<std::string>{})};
    if (j.contains("d") && !j["d"].is_null()) {
      std::vector<Scalar> d;
      for (const auto& s : j["d"]) d.push_back(Scalar::parse(f, s.get<std::string>()));
      c.d = d;
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed candidate JSON: ") + e.what());
  }
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qcu
