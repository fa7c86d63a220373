#include "peterson/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace peterson {

namespace {

Json integer_json(const Integer& c) {
  if (c.fits_slong_p()) return Json(c.get_si());
  return Json(c.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Json to_json(const Permutation& w) {
  return Json(std::vector<int>(w.one_line().begin(), w.one_line().end()));
}

Json to_json(const Word& word) {
  return Json(std::vector<int>(word.letters().begin(), word.letters().end()));
}

Json to_json(const IndexSubset& a) { return Json(a.members()); }

Json to_json(const TPolynomial& p) {
  Json out = Json::object();
  for (const auto& [d, c] : p.terms()) out[std::to_string(d)] = integer_json(c);
  return out;
}

Permutation permutation_from_json(const Json& j) { return Permutation(j.get<std::vector<int>>()); }

IndexSubset subset_from_json(int n, const Json& j) {
  const auto members = j.get<std::vector<int>>();
  return IndexSubset(n, members);
}

TPolynomial tpolynomial_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
  TPolynomial out;
  for (const auto& [key, value] : j.items())
    out += TPolynomial::monomial(integer_from_json(value), std::stoi(key));
  return out;
}

Json class_table_json(const PetersonClass& c) {
  Json out;
  out["n"] = c.rank();
  out["class"] = c.is_generic() ? Json(nullptr) : to_json(c.index());
  Json table = Json::object();
  for (std::size_t m = 0; m < c.table().size(); ++m)
    table[IndexSubset::from_mask(c.rank(), m).to_csv()] = c.table()[m].to_string();
  out["table"] = std::move(table);
  return out;
}

std::string class_table_csv(const PetersonClass& c) {
  std::ostringstream os;
  os << "subset,fixed_point,value\n";
  for (const IndexSubset& b : all_subsets(c.rank())) {
    std::string point = fixed_point(b).to_string();
    point = point.substr(1, point.size() - 2);
    os << quoted(b.to_csv()) << ',' << quoted(point) << ',' << c.at(b).to_string() << '\n';
  }
  return os.str();
}

Json monk_json(const MonkExpansion& e) {
  Json out;
  out["i"] = e.i;
  out["class"] = to_json(e.cls);
  out["diagonal"] = e.diagonal.to_string();
  Json terms = Json::object();
  for (const auto& [b, c] : e.off_diagonal) terms[b.to_csv()] = integer_json(c);
  out["terms"] = std::move(terms);
  return out;
}

Json product_json(const IndexSubset& left, const IndexSubset& right, const BasisExpansion& e) {
  Json out;
  out["n"] = e.rank;
  out["left"] = to_json(left);
  out["right"] = to_json(right);
  Json terms = Json::object();
  for (const auto& [b, c] : e.coefficients) terms[b.to_csv()] = c.to_string();
  out["terms"] = std::move(terms);
  return out;
}

Json relation_json(const Relation& r) {
  Json out = monk_json(r.expansion);
  out["equivariant"] = r.equivariant();
  out["generator"] = r.equivariant() ? "p" : "pcheck";
  out["trivial"] = r.trivial;
  out["text"] = r.text();
  return out;
}

}  // namespace peterson
